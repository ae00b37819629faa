#include "embedwalk/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <string>

#include "embedwalk/comfortability.hpp"
#include "embedwalk/errors.hpp"

namespace ew {

namespace {

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Lightweight system used while exploring orbits.
struct Raw {
  std::vector<std::vector<Vertex>> orders;
  std::uint64_t mask = 0;
};

class Codec {
 public:
  explicit Codec(const SymmetricDigraph& g) : g_(g), n_(g.vertex_count()), edge_id_(n_ * n_, -1) {
    for (int k = 0; k < g.edge_count(); ++k) {
      auto [u, v] = g.edge(k);
      edge_id_[u * n_ + v] = edge_id_[v * n_ + u] = k;
    }
    nbrs_.resize(n_);
    for (Vertex x = 0; x < n_; ++x) {
      for (Arc e : g.incoming(x)) nbrs_[x].push_back(g.origin(e));
      std::sort(nbrs_[x].begin(), nbrs_[x].end());
      radix_.push_back(factorial(g.degree(x) - 1));
    }
  }

  int edge(Vertex u, Vertex v) const { return edge_id_[u * n_ + v]; }

  std::uint64_t encode(const Raw& r) const {
    std::uint64_t rot = 0;
    for (Vertex x = 0; x < n_; ++x) rot = rot * radix_[x] + rank(x, r.orders[x]);
    return (rot << g_.edge_count()) | r.mask;
  }

  Raw decode(std::uint64_t key) const {
    Raw r;
    r.mask = key & ((std::uint64_t{1} << g_.edge_count()) - 1);
    std::uint64_t rot = key >> g_.edge_count();
    r.orders.resize(n_);
    for (Vertex x = n_ - 1; x >= 0; --x) {
      r.orders[x] = unrank(x, rot % radix_[x]);
      rot /= radix_[x];
    }
    return r;
  }

  RotationSystem system(const Raw& r) const {
    std::vector<int> tw(g_.edge_count());
    for (int k = 0; k < g_.edge_count(); ++k) tw[k] = (r.mask >> k) & 1;
    return RotationSystem::from_neighbor_orders(g_, r.orders, std::move(tw));
  }

  Raw raw(const RotationSystem& rs) const {
    Raw r;
    for (Vertex x = 0; x < n_; ++x) r.orders.push_back(rs.neighbor_order(x));
    for (int k = 0; k < g_.edge_count(); ++k) r.mask |= std::uint64_t(rs.edge_twist(k)) << k;
    return r;
  }

 private:
  // Rank of the cyclic order, read from its smallest neighbour, among (d-1)! orders.
  std::uint64_t rank(Vertex x, const std::vector<Vertex>& order) const {
    const int d = static_cast<int>(order.size());
    const auto start = std::min_element(order.begin(), order.end()) - order.begin();
    std::vector<Vertex> rest;
    for (int i = 1; i < d; ++i) rest.push_back(order[(start + i) % d]);
    std::vector<Vertex> pool(nbrs_[x].begin() + 1, nbrs_[x].end());
    std::uint64_t code = 0;
    for (int i = 0; i < d - 1; ++i) {
      const auto it = std::find(pool.begin(), pool.end(), rest[i]);
      code = code * (d - 1 - i) + static_cast<std::uint64_t>(it - pool.begin());
      pool.erase(it);
    }
    return code;
  }

  std::vector<Vertex> unrank(Vertex x, std::uint64_t code) const {
    const int d = static_cast<int>(nbrs_[x].size());
    std::vector<std::uint64_t> digits(d - 1);
    for (int i = d - 2; i >= 0; --i) {
      digits[i] = code % (d - 1 - i);
      code /= (d - 1 - i);
    }
    std::vector<Vertex> pool(nbrs_[x].begin() + 1, nbrs_[x].end());
    std::vector<Vertex> order{nbrs_[x][0]};
    for (int i = 0; i < d - 1; ++i) {
      order.push_back(pool[digits[i]]);
      pool.erase(pool.begin() + static_cast<long>(digits[i]));
    }
    return order;
  }

  const SymmetricDigraph& g_;
  int n_;
  std::vector<int> edge_id_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::uint64_t> radix_;
};

Raw flip(const Codec& c, Raw r, Vertex x) {
  std::reverse(r.orders[x].begin(), r.orders[x].end());
  for (Vertex y : r.orders[x]) r.mask ^= std::uint64_t{1} << c.edge(x, y);
  return r;
}

Raw mirror_raw(Raw r) {
  for (auto& o : r.orders) std::reverse(o.begin(), o.end());
  return r;
}

Raw permute(const Codec& c, const SymmetricDigraph& g, const Raw& r, const std::vector<Vertex>& pi) {
  Raw out;
  out.orders.resize(r.orders.size());
  for (std::size_t x = 0; x < r.orders.size(); ++x)
    for (Vertex y : r.orders[x]) out.orders[pi[x]].push_back(pi[y]);
  for (int k = 0; k < g.edge_count(); ++k)
    if ((r.mask >> k) & 1) {
      auto [u, v] = g.edge(k);
      out.mask |= std::uint64_t{1} << c.edge(pi[u], pi[v]);
    }
  return out;
}

}  // namespace

std::uint64_t default_budget() {
  if (const char* env = std::getenv("EW_BUDGET")) {
    try {
      return static_cast<std::uint64_t>(std::stod(env));
    } catch (...) {
      throw DomainError(std::string("EW_BUDGET is not a number: ") + env);
    }
  }
  return 10'000'000;
}

std::uint64_t raw_system_count(const SymmetricDigraph& g) {
  long double total = std::pow(2.0L, g.edge_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) total *= static_cast<long double>(factorial(g.degree(x) - 1));
  return total >= 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(total);
}

std::vector<std::vector<Vertex>> automorphisms(const SymmetricDigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> pi(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) { out.push_back(pi); return; }
    for (Vertex y = 0; y < n; ++y) {
      if (used[y] || g.degree(y) != g.degree(x)) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z) ok = adj[x][z] == adj[y][pi[z]];
      if (!ok) continue;
      pi[x] = y;
      used[y] = 1;
      self(self, x + 1);
      used[y] = 0;
    }
    pi[x] = -1;
  };
  rec(rec, 0);
  return out;
}

std::uint64_t encode(const RotationSystem& rs) {
  Codec c(rs.graph());
  return c.encode(c.raw(rs));
}

RotationSystem decode(const SymmetricDigraph& g, std::uint64_t key) {
  if (key >= raw_system_count(g)) throw DomainError("key " + std::to_string(key) + " out of range");
  Codec c(g);
  return c.system(c.decode(key));
}

std::vector<EmbeddingClass> enumerate_embeddings(const SymmetricDigraph& g, std::uint64_t budget) {
  if (!g.connected()) throw DomainError("enumeration needs a connected graph");
  const std::uint64_t total = raw_system_count(g);
  if (total > budget)
    throw BudgetError(std::to_string(total) + " raw rotation systems exceed the budget of " +
                      std::to_string(budget) + "; use a smaller graph or raise EW_BUDGET");
  const Codec codec(g);
  const auto autos = automorphisms(g);
  std::vector<char> seen(total, 0);
  std::vector<EmbeddingClass> classes;
  for (std::uint64_t k = 0; k < total; ++k) {
    if (seen[k]) continue;
    // k is the smallest key of its orbit: smaller keys were swept with their own orbits.
    std::uint64_t size = 0;
    std::deque<std::uint64_t> queue{k};
    seen[k] = 1;
    while (!queue.empty()) {
      const std::uint64_t key = queue.front();
      queue.pop_front();
      ++size;
      const Raw r = codec.decode(key);
      auto visit = [&](const Raw& next) {
        const std::uint64_t nk = codec.encode(next);
        if (!seen[nk]) { seen[nk] = 1; queue.push_back(nk); }
      };
      for (Vertex x = 0; x < g.vertex_count(); ++x) visit(flip(codec, r, x));
      visit(mirror_raw(r));
      for (const auto& pi : autos) visit(permute(codec, g, r, pi));
    }
    EmbeddingClass cls;
    cls.representative = codec.system(codec.decode(k));
    cls.key = k;
    cls.orbit_size = size;
    const auto fd = trace_faces(cls.representative);
    cls.orientable = fd.orientable;
    cls.genus = fd.genus;
    std::vector<std::pair<int, int>> prof;
    for (int i = 0; i < fd.face_count(); ++i)
      prof.emplace_back(fd.faces[i].length(), static_cast<int>(fd.self_intersections[i].size()));
    std::sort(prof.rbegin(), prof.rend());
    for (auto [len, si] : prof) {
      cls.faces.push_back(len);
      cls.self_intersections.push_back(si);
    }
    cls.limit = limit_comfortability(cls.representative, fd);
    classes.push_back(std::move(cls));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const EmbeddingClass& a, const EmbeddingClass& b) {
    if (a.orientable != b.orientable) return a.orientable;
    if (a.genus != b.genus) return a.genus < b.genus;
    return a.faces > b.faces;
  });
  return classes;
}

namespace {

std::vector<RankedClass> rank_values(const std::vector<double>& values) {
  std::vector<RankedClass> out;
  for (std::size_t i = 0; i < values.size(); ++i) out.push_back({static_cast<int>(i), values[i], false});
  std::stable_sort(out.begin(), out.end(), [](const RankedClass& a, const RankedClass& b) { return a.value > b.value; });
  for (std::size_t i = 1; i < out.size(); ++i)
    out[i].tied_with_previous =
        std::abs(out[i].value - out[i - 1].value) <= 1e-9 * std::max(1.0, std::abs(out[i].value));
  return out;
}

}  // namespace

Ranking rank_by_comfortability(const std::vector<EmbeddingClass>& classes, const Coin& coin) {
  std::vector<double> mean, limit;
  for (const auto& c : classes) {
    mean.push_back(average_comfortability(c.representative, trace_faces(c.representative), coin).mean);
    limit.push_back(c.limit);
  }
  return {rank_values(mean), rank_values(limit)};
}

GenusSummary min_max_genus(const std::vector<EmbeddingClass>& classes) {
  GenusSummary s;
  auto update = [](int& lo, int& hi, int v) {
    lo = lo < 0 ? v : std::min(lo, v);
    hi = std::max(hi, v);
  };
  for (const auto& c : classes) {
    if (c.orientable) update(s.min_orientable, s.max_orientable, c.genus);
    else update(s.min_non_orientable, s.max_non_orientable, c.genus);
  }
  return s;
}

}  // namespace ew
