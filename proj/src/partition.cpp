#include "embedwalk/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

#include "embedwalk/errors.hpp"

namespace ew {

double h(int x, double a) {
  const double ax = std::pow(a, x);
  return x * (1.0 + ax) / (1.0 - ax);
}

double h0_signed(double a) { return 2.0 / std::log(std::abs(a)); }
double h0_magnitude(double a) { return std::abs(h0_signed(a)); }

double island_energy(const Partition& lambda, double a) {
  if (!(std::abs(a) > 0 && std::abs(a) < 1)) throw DomainError("island energy needs 0 < |a| < 1");
  double q = 0.0;
  for (int x : lambda) {
    if (x < 3) throw DomainError("face length must exceed 2");
    q += h(x, a);
  }
  return q;
}

std::string to_string(Order o) {
  switch (o) {
    case Order::less: return "less";
    case Order::equal: return "equal";
    case Order::greater: return "greater";
    default: return "incomparable";
  }
}

namespace {

Partition sorted_desc(Partition p) {
  std::sort(p.rbegin(), p.rend());
  return p;
}

// Partitions reachable from p by one Q-raising move.
std::vector<Partition> raise_moves(const Partition& p) {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int l = 3; l + 3 <= p[i]; ++l) {
      Partition q = p;
      q[i] = l;
      q.push_back(p[i] - l);
      out.push_back(sorted_desc(q));
    }
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const int sum = p[i] + p[j], gap = std::abs(p[i] - p[j]);
      for (int l = 3; l + 3 <= sum; ++l)
        if (std::abs(2 * l - sum) > gap) {
          Partition q = p;
          q[i] = l;
          q[j] = sum - l;
          out.push_back(sorted_desc(q));
        }
    }
  return out;
}

bool reachable(const Partition& from, const Partition& to) {
  std::set<Partition> seen{from};
  std::queue<Partition> queue;
  queue.push(from);
  while (!queue.empty()) {
    Partition p = queue.front();
    queue.pop();
    if (p == to) return true;
    if (p.size() > to.size()) continue;  // moves never remove parts
    for (auto& q : raise_moves(p))
      if (seen.insert(q).second) queue.push(std::move(q));
  }
  return false;
}

}  // namespace

Order compare(Partition lhs, Partition rhs) {
  lhs = sorted_desc(std::move(lhs));
  rhs = sorted_desc(std::move(rhs));
  auto sum = [](const Partition& p) { int s = 0; for (int x : p) s += x; return s; };
  if (sum(lhs) != sum(rhs)) throw DomainError("compare needs partitions of the same integer");
  for (int x : lhs) if (x < 3) throw DomainError("face length must exceed 2");
  for (int x : rhs) if (x < 3) throw DomainError("face length must exceed 2");
  if (lhs == rhs) return Order::equal;
  if (reachable(rhs, lhs)) return Order::greater;
  if (reachable(lhs, rhs)) return Order::less;
  return Order::incomparable;
}

std::vector<Partition> partitions(int n, int min_part) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) { out.push_back(cur); return; }
    for (int p = std::min(rest, max_part); p >= min_part; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Partition max_island_partition(int n) {
  if (n < 3) throw DomainError("need n >= 3");
  Partition p(n / 3, 3);
  if (n % 3) p[0] += n % 3;
  return p;
}

std::string to_string(Surface s) {
  switch (s) {
    case Surface::orientable: return "orientable";
    case Surface::non_orientable: return "non-orientable";
    default: return "both";
  }
}

KnClassification kn_best_worst(int n) {
  if (n < 3) throw DomainError("K_n needs n >= 3");
  KnClassification k;
  k.n = n;
  k.gamma = ((n - 3) * (n - 4) + 11) / 12;  // ceil((n-3)(n-4)/12)
  k.gamma_tilde = n == 7 ? 3 : ((n - 3) * (n - 4) + 5) / 6;
  k.gamma_max = (n - 1) * (n - 2) / 4;
  k.gamma_tilde_max = n * (n - 1) / 2 - n + 1;
  const int r = n % 4;
  if (n == 3 || n == 4 || n == 7) k.best = Surface::orientable;
  else if (r == 1 || r == 2) k.best = Surface::non_orientable;
  else k.best = Surface::both;
  k.worst = (r == 1 || r == 2) ? Surface::orientable : Surface::non_orientable;
  return k;
}

}  // namespace ew
