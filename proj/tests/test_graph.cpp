#include <doctest.h>

#include "embedwalk/errors.hpp"
#include "embedwalk/graph.hpp"

using namespace ew;

TEST_CASE("complete graph counts") {
  const auto k4 = complete_graph(4);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.arc_count() == 12);
  CHECK(k4.edge_count() == 6);
  CHECK(complete_graph(3).arc_count() == 6);
  CHECK(complete_graph(7).edge_count() == 21);
  CHECK_THROWS_AS(complete_graph(2), DomainError);
}

TEST_CASE("incoming arcs") {
  const auto k4 = complete_graph(4);
  for (Vertex x = 0; x < 4; ++x) {
    const auto in = incoming_arcs(k4, x);
    REQUIRE(in.size() == 3);
    std::vector<int> from;
    for (Arc e : in) {
      CHECK(k4.terminus(e) == x);
      from.push_back(k4.origin(e));
    }
    std::sort(from.begin(), from.end());
    std::vector<int> others;
    for (int v = 0; v < 4; ++v) if (v != x) others.push_back(v);
    CHECK(from == others);
  }
  CHECK_THROWS_AS(incoming_arcs(k4, 4), DomainError);
  CHECK_THROWS_AS(incoming_arcs(k4, -1), DomainError);
}

TEST_CASE("middle of a path has two incoming arcs") {
  // P3 alone violates the degree bound, so embed it in C4 and look at a degree-2 vertex.
  const auto c4 = cycle_graph(4);
  CHECK(incoming_arcs(c4, 1).size() == 2);
}

TEST_CASE("involution and endpoints") {
  const auto g = complete_graph(5);
  int total = 0;
  for (Vertex x = 0; x < g.vertex_count(); ++x) total += g.degree(x);
  CHECK(total == g.arc_count());
  for (Arc e = 0; e < g.arc_count(); ++e) {
    const Arc r = SymmetricDigraph::reverse(e);
    CHECK(r != e);
    CHECK(SymmetricDigraph::reverse(r) == e);
    CHECK(g.origin(r) == g.terminus(e));
    CHECK(g.terminus(r) == g.origin(e));
    CHECK(g.origin(e) != g.terminus(e));
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(SymmetricDigraph(3, {{0, 0}, {0, 1}, {1, 2}}), InvariantError);
  CHECK_THROWS_AS(SymmetricDigraph(3, {{0, 1}, {1, 0}, {1, 2}, {0, 2}}), InvariantError);
  CHECK_THROWS_AS(SymmetricDigraph(3, {{0, 1}, {1, 2}}), InvariantError);  // degree 1
  CHECK_THROWS_AS(SymmetricDigraph(3, {{0, 1}, {1, 5}}), InvariantError);
  CHECK(cycle_graph(5).connected());
  const SymmetricDigraph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(two_triangles.connected());
}
