#include <doctest.h>

#include <cmath>
#include <random>

#include "embedwalk/errors.hpp"
#include "embedwalk/partition.hpp"

using namespace ew;

TEST_CASE("h properties at a = 0.5") {
  CHECK(h(3, 0.5) + h(3, 0.5) > h(6, 0.5));
  CHECK(h(6, 0.5) + h(6, 0.5) < h(5, 0.5) + h(7, 0.5));
}

namespace {

// h(x) - x = 2x a^x / (1 - a^x); comparing excesses keeps the strict
// inequalities visible when a^x is far below machine epsilon relative to x.
double excess(int x, double a) { return 2 * x * std::pow(a, x) / (1 - std::pow(a, x)); }

}  // namespace

TEST_CASE("h properties on random samples") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> len(3, 40);
  std::uniform_real_distribution<double> av(0.01, 0.995);
  for (int k = 0; k < 1000; ++k) {
    const int l = len(rng), m = len(rng);
    const double a = av(rng);
    CHECK(h(l, a) == doctest::Approx(l + excess(l, a)));
    CHECK(excess(l + m, a) < excess(l, a) + excess(m, a));
    // same sum, more unbalanced pair wins
    const int sum = l + m;
    const int l2 = std::uniform_int_distribution<int>(3, sum - 3)(rng);
    const int m2 = sum - l2;
    if (std::abs(l - m) < std::abs(l2 - m2)) CHECK(excess(l, a) + excess(m, a) < excess(l2, a) + excess(m2, a));
  }
}

TEST_CASE("island energy example and bounds") {
  for (double a : {0.9, 0.98}) {
    CHECK(std::abs(island_energy({9, 3}, a) - island_energy({4, 4, 4}, a)) < h0_magnitude(a));
    CHECK(h0_signed(a) < 0);
    CHECK(h0_magnitude(a) == doctest::Approx(2 / std::abs(std::log(a))));
  }
  for (double a : {0.2, 0.7, 0.98}) {
    const double lo = island_energy({12}, a), hi = island_energy(max_island_partition(12), a);
    for (const auto& p : partitions(12)) {
      CHECK(island_energy(p, a) >= lo - 1e-12);
      CHECK(island_energy(p, a) <= hi + 1e-12);
    }
  }
  CHECK(max_island_partition(13) == Partition{4, 3, 3, 3});
  CHECK(max_island_partition(14) == Partition{5, 3, 3, 3});
  CHECK_THROWS_AS(island_energy({2, 10}, 0.5), DomainError);
  CHECK_THROWS_AS(island_energy({12}, 1.0), DomainError);
}

TEST_CASE("partitions of 12") {
  const auto ps = partitions(12);
  CHECK(ps.size() == 9);
}

TEST_CASE("Young-diagram order from the two moves") {
  CHECK(compare({9, 3}, {4, 4, 4}) == Order::incomparable);
  CHECK(compare({4, 4, 4}, {9, 3}) == Order::incomparable);
  CHECK(compare({3, 3, 3, 3}, {12}) == Order::greater);
  CHECK(compare({12}, {3, 3, 3, 3}) == Order::less);
  CHECK(compare({9, 3}, {8, 4}) == Order::greater);
  CHECK(compare({3, 9}, {9, 3}) == Order::equal);
  CHECK_THROWS_AS(compare({9, 3}, {9, 4}), DomainError);
  // the order never contradicts the numbers
  for (const auto& p : partitions(12))
    for (const auto& q : partitions(12)) {
      const auto o = compare(p, q);
      if (o == Order::greater) CHECK(island_energy(p, 0.9) > island_energy(q, 0.9));
      if (o == Order::less) CHECK(island_energy(p, 0.9) < island_energy(q, 0.9));
    }
}

TEST_CASE("complete-graph genus facts") {
  const auto k4 = kn_best_worst(4);
  CHECK(k4.gamma == 0);
  CHECK(k4.gamma_tilde == 0);  // formula value; K4 actually needs k = 1
  CHECK(k4.gamma_max == 1);
  CHECK(k4.gamma_tilde_max == 3);
  CHECK(k4.best == Surface::orientable);
  CHECK(k4.worst == Surface::non_orientable);
  CHECK(kn_best_worst(7).gamma_tilde == 3);
  CHECK(kn_best_worst(7).gamma == 1);
  CHECK(kn_best_worst(5).best == Surface::non_orientable);
  CHECK(kn_best_worst(5).worst == Surface::orientable);
  CHECK(kn_best_worst(8).best == Surface::both);
  CHECK(kn_best_worst(8).gamma == 2);
  CHECK(kn_best_worst(3).best == Surface::orientable);
  CHECK_THROWS_AS(kn_best_worst(2), DomainError);
}
