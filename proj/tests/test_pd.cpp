#include "doctest.h"

#include "diagrams.hpp"
#include "khst/pd.hpp"

using namespace khst;

TEST_CASE("trefoil PD parses with three positive crossings") {
  auto d = testing::trefoil();
  CHECK(d.n() == 3);
  CHECK(d.components == 1);
  CHECK(d.n_plus == 3);
  CHECK(d.n_minus == 0);
  for (auto& x : d.crossings) CHECK(x.sign == d.crossings[0].sign);
}

TEST_CASE("one-crossing unknot") {
  auto d = testing::unknot();
  CHECK(d.n() == 1);
  CHECK(d.components == 1);
  CHECK(d.n_plus + d.n_minus == 1);
}

TEST_CASE("UNKNOT alias") {
  auto d = parse_pd(" UNKNOT ");
  CHECK(d.n() == 1);
  CHECK(d.components == 1);
}

TEST_CASE("arc appearing once is rejected") {
  CHECK_THROWS_AS(parse_pd("PD[X(1,4,2,5)]"), InconsistentArcs);
}

TEST_CASE("syntax errors") {
  CHECK_THROWS_AS(parse_pd("PD[X(1,2,3)]"), MalformedSyntax);
  CHECK_THROWS_AS(parse_pd("PD["), MalformedSyntax);
  CHECK_THROWS_AS(parse_pd("PD[]"), MalformedSyntax);
  CHECK_THROWS_AS(parse_pd("X(1,1,2,2)"), MalformedSyntax);
  CHECK_THROWS_AS(parse_pd("PD[X(1,1,2,2)] extra"), MalformedSyntax);
}

TEST_CASE("label normalization preserves structure") {
  auto d1 = parse_pd("PD[X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)]");
  auto d2 = parse_pd("PD[X(10,40,20,50) X(30,60,40,10) X(50,20,60,30)]");
  CHECK(to_pd_string(d1) == to_pd_string(d2));
}

TEST_CASE("comma and whitespace separators both accepted") {
  auto d = parse_pd("PD[X(1,4,2,5), X(3,6,4,1),X(5,2,6,3)]");
  CHECK(d.n() == 3);
}

TEST_CASE("mirror swaps crossing signs and is an involution") {
  auto d = testing::trefoil();
  auto m = mirror(d);
  CHECK(m.n_plus == 0);
  CHECK(m.n_minus == 3);
  auto mm = mirror(m);
  CHECK(to_pd_string(mm) == to_pd_string(d));
  CHECK(mm.n_plus == 3);
}

TEST_CASE("DT code of the trefoil") {
  auto d = parse_dt("4 6 2");
  CHECK(d.n() == 3);
  CHECK(d.components == 1);
  // alternating 3-crossing knot diagram: all crossings share a sign
  CHECK((d.n_plus == 3 || d.n_minus == 3));
}

TEST_CASE("DT code of the figure eight has writhe zero") {
  auto d = testing::figure_eight();
  CHECK(d.n() == 4);
  CHECK(d.components == 1);
  CHECK(d.n_plus == 2);
  CHECK(d.n_minus == 2);
}

TEST_CASE("DT rejects odd entries and bad multiplicities") {
  CHECK_THROWS_AS(parse_dt("3 6 2"), MalformedSyntax);
  CHECK_THROWS_AS(parse_dt("4 4 2"), MalformedSyntax);
  CHECK_THROWS_AS(parse_dt("4 6 10"), MalformedSyntax);
  CHECK_THROWS_AS(parse_dt(""), MalformedSyntax);
  CHECK_THROWS_AS(parse_dt("4 6 x"), MalformedSyntax);
}

TEST_CASE("DT parse round trip through PD keeps arc multiplicities") {
  for (const char* code : {"4 6 2", "4 6 8 2", "6 8 10 2 4", "4 8 10 2 6"}) {
    auto d = parse_dt(code);
    for (int a = 1; a <= 2 * d.n(); ++a) CHECK_NOTHROW(d.ends_of(a));
  }
}

TEST_CASE("every two-crossing diagram parses consistently") {
  auto all = testing::all_two_crossing_diagrams();
  CHECK(all.size() > 0);
  for (auto& d : all) {
    CHECK(d.n() == 2);
    CHECK(d.n_plus + d.n_minus == 2);
    CHECK(d.components >= 1);
  }
}
