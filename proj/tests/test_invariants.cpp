#include <random>
#include <set>

#include "doctest.h"

#include "diagrams.hpp"
#include "khst/diagen.hpp"
#include "khst/stinv.hpp"

using namespace khst;

namespace {

F2Matrix random_f2(std::mt19937& rng, int rows, int cols) {
  F2Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (rng() & 1) m.set(r, c, true);
  return m;
}

// brute-force subspace oracle: log2 of the size of a spanned set
int dim_of_span(const std::set<std::vector<int>>& vecs) {
  // vecs must already be closed under addition (a full span)
  int n = static_cast<int>(vecs.size());
  int d = 0;
  while ((1 << d) < n) ++d;
  REQUIRE((1 << d) == n);
  return d;
}

std::vector<int> unpack_vec(const F2Vector& v) {
  std::vector<int> out(v.size());
  for (int i = 0; i < v.size(); ++i) out[i] = v.get(i);
  return out;
}

F2Vector pack_bits(uint32_t bits, int n) {
  F2Vector v(n);
  for (int i = 0; i < n; ++i)
    if ((bits >> i) & 1) v.set(i, true);
  return v;
}

}  // namespace

TEST_CASE("rank profile: stated examples") {
  OpMatrix z01, z12, s2;
  z01.m = F2Matrix(3, 2);
  z12.m = F2Matrix(2, 3);
  s2.m = F2Matrix(2, 2);
  CHECK(rank_profile(z01, z12, s2).r1 == 0);

  // sq1 maps zero, sq2 the identity on a 2-dim space
  OpMatrix a, b, c;
  a.m = F2Matrix(0, 2);   // sq1 at i: H^{i+1} = 0
  b.m = F2Matrix(2, 0);   // sq1 at i+1
  c.m = F2Matrix::identity(2);
  auto p = rank_profile(a, b, c);
  CHECK(p.r1 == 2);
  CHECK(p.r2 == 2);
  CHECK(p.r3 == 0);
  CHECK(p.r4 == 0);
}

TEST_CASE("st entry arithmetic and negativity guard") {
  CHECK(st_entry({0, 0, 0, 0}) == StEntry{0, 0, 0, 0});
  CHECK(st_entry({2, 1, 1, 1}) == StEntry{0, 1, 1, 0});
  CHECK(st_entry({1, 1, 0, 0}) == StEntry{1, 0, 0, 0});
  CHECK_THROWS_AS(st_entry({0, 1, 0, 0}), NegativeComponent);
  CHECK_THROWS_AS(st_entry({1, 1, 1, 0}), NegativeComponent);
}

TEST_CASE("rank profile matches exhaustive subspace enumeration") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    int n0 = 1 + rng() % 4, n1 = rng() % 4, n2 = 1 + rng() % 5;
    OpMatrix s1a, s1b, s2m;
    s1a.m = random_f2(rng, n1, n0);
    s1a.i_src = 0;
    s1b.m = random_f2(rng, n2, n1);
    s2m.m = random_f2(rng, n2, n0);
    auto p = rank_profile(s1a, s1b, s2m);

    std::set<std::vector<int>> im2, im2k, im1b;
    for (uint32_t bits = 0; bits < (1u << n0); ++bits) {
      auto v = pack_bits(bits, n0);
      im2.insert(unpack_vec(s2m.m.apply(v)));
      if (s1a.m.apply(v).is_zero()) im2k.insert(unpack_vec(s2m.m.apply(v)));
    }
    for (uint32_t bits = 0; bits < (1u << n1); ++bits)
      im1b.insert(unpack_vec(s1b.m.apply(pack_bits(bits, n1))));

    CHECK(p.r1 == dim_of_span(im2));
    CHECK(p.r2 == dim_of_span(im2k));
    std::set<std::vector<int>> i3, i4;
    for (auto& v : im1b) {
      if (im2.count(v)) i3.insert(v);
      if (im2k.count(v)) i4.insert(v);
    }
    CHECK(p.r3 == dim_of_span(i3));
    CHECK(p.r4 == dim_of_span(i4));
  }
}

TEST_CASE("st tables of small knots are empty") {
  CHECK(st_table(testing::unknot()).entries.empty());
  CHECK(st_table(testing::trefoil()).entries.empty());
  CHECK(st_table(testing::figure_eight()).entries.empty());
}

TEST_CASE("st table serialization is canonical") {
  StTable t;
  t.entries[{1, 5}] = {0, 2, 0, 1};
  t.entries[{-1, 3}] = {1, 0, 0, 0};
  CHECK(t.canonical() == "-1,3:1,0,0,0;1,5:0,2,0,1;");
}

TEST_CASE("kh keys distinguish small knots and are mirror-sensitive") {
  auto k1 = kh_key(kh(testing::trefoil(), Ring::Z));
  auto k2 = kh_key(kh(mirror(testing::trefoil()), Ring::Z));
  auto k3 = kh_key(kh(testing::figure_eight(), Ring::Z));
  CHECK(k1 != k2);
  CHECK(k1 != k3);
  CHECK(k2 != k3);
  CHECK(kh_key(kh(testing::figure_eight(), Ring::Z)) == k3);
}

TEST_CASE("census compare: no false groups, exact duplicates group without split") {
  std::vector<CensusEntry> census;
  census.push_back({"unknot", testing::unknot()});
  census.push_back({"trefoil", testing::trefoil()});
  auto r1 = census_compare(census);
  CHECK(r1.groups.empty());
  CHECK(r1.computed == 2);

  census.push_back({"trefoil-copy", testing::trefoil()});
  auto r2 = census_compare(census);
  REQUIRE(r2.groups.size() == 1);
  CHECK(r2.groups[0].names == std::vector<std::string>{"trefoil", "trefoil-copy"});
  CHECK_FALSE(r2.groups[0].split());
}

TEST_CASE("census compare is deterministic and worker-count independent") {
  std::vector<CensusEntry> census;
  census.push_back({"a", testing::trefoil()});
  census.push_back({"b", testing::figure_eight()});
  census.push_back({"c", testing::trefoil()});
  census.push_back({"d", torus_link(2, 2)});
  auto r1 = census_compare(census, LadybugConvention::Right, 1);
  auto r2 = census_compare(census, LadybugConvention::Right, 3);
  REQUIRE(r1.groups.size() == r2.groups.size());
  for (size_t g = 0; g < r1.groups.size(); ++g) {
    CHECK(r1.groups[g].names == r2.groups[g].names);
    CHECK(r1.groups[g].st_classes == r2.groups[g].st_classes);
  }
}

TEST_CASE("mutant check harness") {
  std::vector<CensusEntry> census;
  census.push_back({"unknot", testing::unknot()});
  census.push_back({"trefoil", testing::trefoil()});
  auto empty = mutant_check(census, {});
  CHECK(empty.groups.empty());

  auto r = mutant_check(census, {{"unknot", "trefoil"}});
  REQUIRE(r.groups.size() == 1);
  CHECK(r.agree + r.disagree == 1);

  CHECK_THROWS_AS(mutant_check(census, {{"unknot", "nonexistent"}}), UnknownName);
}

TEST_CASE("cp2 count extraction") {
  StTable empty;
  CHECK_FALSE(cp2_count(empty).any_nonzero);

  StTable t;
  t.entries[{1, 5}] = {0, 2, 0, 1};
  auto r = cp2_count(t);
  CHECK_FALSE(r.any_nonzero);
  CHECK(r.a_of.at({1, 5}) == 0);

  t.entries[{0, 3}] = {1, 0, 0, 0};
  CHECK(cp2_count(t).any_nonzero);
}
