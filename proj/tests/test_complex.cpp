#include "doctest.h"

#include "diagrams.hpp"
#include "khst/khcomplex.hpp"

using namespace khst;

TEST_CASE("differential squares to zero and gradings are consistent") {
  for (auto d : {testing::unknot(), testing::trefoil(), testing::figure_eight()}) {
    Cube cube(d);
    size_t total = 0;
    for (auto& c : build_complex(cube, Ring::Z)) {
      CHECK(testing::complex_is_valid(cube, c));
      for (int i = c.i_min; i <= c.i_max; ++i) total += c.dim(i);
    }
    size_t expect = 0;
    for (Vertex v = 0; v < cube.num_vertices(); ++v)
      expect += size_t{1} << cube.resolve(v).num_circles;
    CHECK(total == expect);
  }
}

TEST_CASE("euler characteristic of the unknot") {
  Cube cube(testing::unknot());
  auto e = graded_euler_characteristic(build_complex(cube, Ring::Z));
  Laurent expect = Laurent::monomial(1, 1) + Laurent::monomial(1, -1);
  CHECK(e == expect);
}

TEST_CASE("euler characteristic of the right trefoil") {
  Cube cube(testing::trefoil());
  auto e = graded_euler_characteristic(build_complex(cube, Ring::Z));
  Laurent expect = Laurent::monomial(1, 1) + Laurent::monomial(1, 3) + Laurent::monomial(1, 5) -
                   Laurent::monomial(1, 9);
  CHECK(e == expect);
}

TEST_CASE("kauffman bracket oracle agrees with the euler characteristic") {
  auto two = testing::all_two_crossing_diagrams();
  std::vector<LinkDiagram> corpus = {testing::unknot(), testing::trefoil(),
                                     testing::figure_eight(), mirror(testing::trefoil()),
                                     parse_dt("6 8 10 2 4") /* 5_1 */};
  corpus.insert(corpus.end(), two.begin(), two.end());
  for (auto& d : corpus) {
    Cube cube(d);
    auto e = graded_euler_characteristic(build_complex(cube, Ring::Z));
    CHECK(e == kauffman_jones(d));
  }
}

TEST_CASE("figure eight jones polynomial is palindromic") {
  auto j = kauffman_jones(testing::figure_eight());
  auto jm = kauffman_jones(mirror(testing::figure_eight()));
  CHECK(j == jm);
  // palindromic coefficients around 0
  for (auto& [deg, c] : j.terms()) CHECK(j.coeff(-deg) == c);
}

TEST_CASE("mirror inverts the jones polynomial variable") {
  for (auto d : {testing::trefoil(), parse_dt("4 8 10 2 6") /* 5_2 */}) {
    auto j = kauffman_jones(d);
    auto jm = kauffman_jones(mirror(d));
    Laurent flipped;
    for (auto& [deg, c] : j.terms()) flipped.add_term(-deg, c);
    CHECK(jm == flipped);
  }
}

TEST_CASE("j filter restricts the built slices") {
  Cube cube(testing::trefoil());
  auto all = build_complex(cube, Ring::Z);
  std::set<int> filter = {all[0].j};
  auto some = build_complex(cube, Ring::Z, filter);
  REQUIRE(some.size() == 1);
  CHECK(some[0].j == all[0].j);
}

TEST_CASE("complex dump has the documented triple format") {
  Cube cube(testing::unknot());
  auto cs = build_complex(cube, Ring::Z);
  bool saw_entry = false;
  for (auto& c : cs) {
    auto s = dump_complex(c);
    if (s.find('\n') != std::string::npos && s.find("# j") == 0) saw_entry = true;
  }
  CHECK(saw_entry);
}
