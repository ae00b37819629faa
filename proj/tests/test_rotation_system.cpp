#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "embedwalk/covering.hpp"
#include "embedwalk/errors.hpp"
#include "embedwalk/rotation_system.hpp"
#include "support.hpp"

using namespace ew;
using ew::testing::load;

namespace {

// Facial walks straight from the successor rule on (arc, running twist parity),
// without the state machinery. Returns the length multiset of all walks,
// which counts every face twice (once per chirality).
std::vector<int> literal_walk_lengths(const RotationSystem& rs) {
  const int m = rs.graph().arc_count();
  std::map<std::pair<Arc, int>, bool> seen;
  std::vector<int> lengths;
  for (Arc e0 = 0; e0 < m; ++e0)
    for (int p0 = 0; p0 < 2; ++p0) {
      if (seen[{e0, p0}]) continue;
      Arc e = e0;
      int p = p0, len = 0;
      do {
        seen[{e, p}] = true;
        const Arc r = p == 0 ? rs.rotate(e) : rs.rotate_inverse(e);
        e = r ^ 1;
        p ^= rs.twist(e);
        ++len;
      } while (!(e == e0 && p == p0));
      lengths.push_back(len);
    }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::vector<int> doubled(std::vector<int> v) {
  std::vector<int> out;
  for (int x : v) { out.push_back(x); out.push_back(x); }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<int> self_intersection_profile(const FacialDecomposition& fd) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < fd.face_count(); ++i) p.emplace_back(fd.faces[i].length(), (int)fd.self_intersections[i].size());
  std::sort(p.begin(), p.end());
  std::vector<int> out;
  for (auto [l, s] : p) { out.push_back(l); out.push_back(s); }
  return out;
}

}  // namespace

TEST_CASE("projective-plane K4 from the planar rotation with one twisted edge") {
  const auto rs = load("k4_projective.rs");
  const auto fd = trace_faces(rs);
  CHECK(fd.length_multiset() == std::vector<int>{6, 3, 3});
  CHECK_FALSE(fd.orientable);
  CHECK(fd.genus == 1);
  const auto g = euler_genus(rs);
  CHECK_FALSE(g.orientable);
  CHECK(g.genus == 1);
  CHECK_FALSE(detect_orientability(rs).orientable);
}

TEST_CASE("sphere and planar cycles") {
  const auto fd = trace_faces(load("k4_sphere.rs"));
  CHECK(fd.length_multiset() == std::vector<int>{3, 3, 3, 3});
  CHECK(fd.orientable);
  CHECK(fd.genus == 0);
  for (int n : {3, 4, 7}) {
    const auto g = cycle_graph(n);
    std::vector<std::vector<Vertex>> orders(n);
    for (Vertex x = 0; x < n; ++x) orders[x] = {(x + n - 1) % n, (x + 1) % n};
    const auto c = trace_faces(RotationSystem::from_neighbor_orders(g, orders, std::vector<int>(n, 0)));
    CHECK(c.length_multiset() == std::vector<int>{n, n});
    CHECK(c.orientable);
    CHECK(c.genus == 0);
  }
}

TEST_CASE("face tracing agrees with the literal successor rule") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rs = ew::testing::random_system(rng, 7);
    CHECK(literal_walk_lengths(rs) == doubled(trace_faces(rs).lengths()));
  }
}

TEST_CASE("decomposition invariants on random systems") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rs = ew::testing::random_system(rng);
    const auto fd = trace_faces(rs);
    const auto& g = rs.graph();
    int total = 0;
    for (const auto& f : fd.faces) {
      total += f.length();
      CHECK(f.length() > 2);
    }
    CHECK(total == g.arc_count());

    // every state sits on exactly one position of one cover face
    std::vector<int> hits(rs.state_count(), 0);
    for (std::size_t cf = 0; cf < fd.cover_faces.size(); ++cf)
      for (std::size_t j = 0; j < fd.cover_faces[cf].walk.size(); ++j) {
        const State u = fd.cover_faces[cf].walk[j];
        ++hits[u];
        CHECK(fd.face_of(u).cover_face == (int)cf);
        CHECK(fd.face_of(u).position == (int)j);
      }
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));

    // chiral partners: same length, states exchanged by the chiral image
    for (int i = 0; i < fd.face_count(); ++i) {
      const auto& f = fd.cover_faces[2 * i];
      CHECK(fd.cover_faces[2 * i + 1].length() == f.length());
      for (State u : f.walk) CHECK(fd.face_of(rs.chiral_image(u)).cover_face == 2 * i + 1);
      CHECK(f.walk.front() == *std::min_element(f.walk.begin(), f.walk.end()));
      CHECK(f.walk.front() < fd.cover_faces[2 * i + 1].walk.front());
    }

    const int chi = g.vertex_count() - g.edge_count() + fd.face_count();
    CHECK(chi <= 2);
    CHECK((chi == 2) == (fd.orientable && fd.genus == 0));
    if (fd.orientable) CHECK(g.edge_count() - g.vertex_count() - fd.face_count() + 2 == 2 * fd.genus);
    else CHECK(g.edge_count() - g.vertex_count() - fd.face_count() + 2 == fd.genus);

    for (int i = 0; i < fd.face_count(); ++i)
      for (const auto& s : fd.self_intersections[i]) {
        CHECK(s.second == rs.lift_reverse(s.first));
        CHECK(fd.face_of(s.first).cover_face == 2 * i);
        CHECK(fd.face_of(s.second).cover_face == 2 * i);
        CHECK(s.dist_forward + s.dist_back == fd.faces[i].length());
      }
  }
}

TEST_CASE("spanning-tree normalization") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto rs = ew::testing::random_system(rng);
    const auto res = detect_orientability(rs);
    const auto& g = rs.graph();
    // tree edges are untwisted after normalization
    for (Vertex y = 0; y < g.vertex_count(); ++y)
      if (res.tree_parent[y] >= 0) CHECK(res.normalized.twist(*g.arc_between(res.tree_parent[y], y)) == 0);
    CHECK(res.tree_parent[0] == -1);
    // untwisted systems are always orientable
    const RotationSystem flat(g, rs.rotation(), std::vector<int>(g.edge_count(), 0));
    CHECK(detect_orientability(flat).orientable);
  }
  const SymmetricDigraph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  std::vector<std::vector<Vertex>> orders{{1, 2}, {0, 2}, {0, 1}, {4, 5}, {3, 5}, {3, 4}};
  const auto rs = RotationSystem::from_neighbor_orders(two, orders, std::vector<int>(6, 0));
  CHECK_THROWS_AS(detect_orientability(rs), DomainError);
  CHECK_THROWS_AS(euler_genus(rs), DomainError);
}

TEST_CASE("vertex flip and mirror preserve the embedding") {
  std::mt19937_64 rng(17);
  for (const auto& cls : ew::testing::k4_classes()) {
    const auto& rs = cls.representative;
    const auto fd = trace_faces(rs);
    for (Vertex x = 0; x < 4; ++x) {
      const auto f = flip_vertex(rs, x);
      CHECK(flip_vertex(f, x) == rs);
      const auto ff = trace_faces(f);
      CHECK(ff.length_multiset() == fd.length_multiset());
      CHECK(ff.orientable == fd.orientable);
      CHECK(ff.genus == fd.genus);
      CHECK(self_intersection_profile(ff) == self_intersection_profile(fd));
    }
    const auto m = mirror(rs);
    CHECK(mirror(m) == rs);
    const auto fm = trace_faces(m);
    CHECK(fm.length_multiset() == fd.length_multiset());
    CHECK(fm.orientable == fd.orientable);
    CHECK(fm.genus == fd.genus);
  }
  // twist parity along closed walks survives flips
  for (int trial = 0; trial < 100; ++trial) {
    const auto rs = ew::testing::random_system(rng);
    const auto& g = rs.graph();
    const Vertex x = std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng);
    const auto f = flip_vertex(rs, x);
    // random closed walk: out and back along a random route, plus every face boundary
    for (const auto& face : trace_faces(rs).faces) {
      int p0 = 0, p1 = 0;
      for (State u : face.walk) { p0 ^= rs.twist(state_arc(u)); p1 ^= f.twist(state_arc(u)); }
      CHECK(p0 == p1);
    }
  }
}

TEST_CASE("rotation system validation") {
  const auto g = complete_graph(4);
  std::vector<std::vector<Vertex>> bad{{1, 2, 3}, {0, 2, 3}, {0, 1, 1}, {0, 1, 2}};
  CHECK_THROWS_AS(RotationSystem::from_neighbor_orders(g, bad, std::vector<int>(6, 0)), InvariantError);
  std::vector<std::vector<Vertex>> good{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  CHECK_THROWS_AS(RotationSystem::from_neighbor_orders(g, good, std::vector<int>(6, 2)), InvariantError);
  std::vector<Arc> two_cycles(g.arc_count());
  for (Arc e = 0; e < g.arc_count(); ++e) two_cycles[e] = e;  // fixed points
  CHECK_THROWS_AS(RotationSystem(g, two_cycles, std::vector<int>(6, 0)), InvariantError);
  const auto rs = RotationSystem::from_neighbor_orders(g, good, std::vector<int>(6, 0));
  for (Arc e = 0; e < g.arc_count(); ++e) {
    CHECK(g.terminus(rs.rotate(e)) == g.terminus(e));
    CHECK(rs.rotate_inverse(rs.rotate(e)) == e);
    CHECK(rs.twist(e) == rs.twist(e ^ 1));
  }
  CHECK(rs.neighbor_order(1) == std::vector<Vertex>{0, 2, 3});
}
