#include <doctest.h>

#include <random>

#include "embedwalk/errors.hpp"
#include "support.hpp"

using namespace ew;

namespace {

int error_line(const std::string& text) {
  try {
    parse_rotation_system(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("write then parse is the identity") {
  std::mt19937_64 rng(67);
  for (int k = 0; k < 100; ++k) {
    const auto rs = ew::testing::random_system(rng);
    CHECK(parse_rotation_system(write_rotation_system(rs)) == rs);
  }
  const auto p = ew::testing::load("k4_projective.rs");
  CHECK(p.twists() == std::vector<int>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("comments and blank lines") {
  const auto rs = parse_rotation_system(
      "# triangle\n\nvertices 3\nedge 0 1 0  # plain\nedge 1 2 0\nedge 0 2 1\n"
      "rotation 0: 1 2\nrotation 1: 0 2\nrotation 2: 0 1\n");
  CHECK(rs.graph().edge_count() == 3);
  CHECK(rs.edge_twist(2) == 1);
}

TEST_CASE("malformed input reports its position") {
  const std::string head = "vertices 3\nedge 0 1 0\nedge 1 2 0\nedge 0 2 0\n";
  CHECK(error_line("vertices x\n") == 1);
  CHECK(error_line(head + "rotation 0: 1 2\nrotation 1: 0 2\nrotation 2 0 1\n") == 7);
  CHECK(error_line(head + "rotation 0: 1 2\nrotation 1: 0 2\nbogus\n") == 7);
  CHECK(error_line("vertices 3\nedge 0 1 2\n") == 2);
  CHECK(error_line(head + "rotation 0: 1 7\n") == 5);
  // a neighbour order that is not a permutation of the neighbours
  CHECK_THROWS_AS(parse_rotation_system(head + "rotation 0: 1 1\nrotation 1: 0 2\nrotation 2: 0 1\n"), std::exception);
  // missing rotation line
  CHECK_THROWS_AS(parse_rotation_system(head + "rotation 0: 1 2\nrotation 1: 0 2\n"), InvariantError);
  CHECK_THROWS_AS(read_rotation_system("/nonexistent/file.rs"), ParseError);
}

TEST_CASE("complex numbers") {
  CHECK(parse_complex("0.5") == cplx(0.5, 0));
  CHECK(parse_complex("0.5,-0.25") == cplx(0.5, -0.25));
  CHECK(parse_complex(format_complex(cplx(1.0 / 3, -2.0 / 7))) == cplx(1.0 / 3, -2.0 / 7));
  CHECK_THROWS_AS(parse_complex("abc"), ParseError);
  CHECK_THROWS_AS(parse_complex("1,2,3"), ParseError);
}
