#include "doctest.h"

#include "diagrams.hpp"
#include "khst/diagen.hpp"
#include "khst/homology.hpp"

using namespace khst;

namespace {

BigradedEntry entry_at(const BigradedGroup& g, int i, int j) {
  auto* e = g.find(i, j);
  return e ? *e : BigradedEntry{};
}

int even_torsion(const BigradedEntry& e) {
  int c = 0;
  for (long long f : e.torsion)
    if (f % 2 == 0) ++c;
  return c;
}

void check_universal_coefficients(const LinkDiagram& d) {
  auto z = kh(d, Ring::Z);
  auto f2 = kh(d, Ring::F2);
  std::set<std::pair<int, int>> keys;
  for (auto& [ij, e] : z.entries) {
    keys.insert(ij);
    keys.insert({ij.first - 1, ij.second});
  }
  for (auto& [ij, e] : f2.entries) keys.insert(ij);
  for (auto [i, j] : keys) {
    int expect = entry_at(z, i, j).free_rank + even_torsion(entry_at(z, i, j)) +
                 even_torsion(entry_at(z, i + 1, j));
    CHECK(f2.f2_dim(i, j) == expect);
  }
}

}  // namespace

TEST_CASE("unknot homology") {
  auto g = kh(testing::unknot(), Ring::Z);
  REQUIRE(g.entries.size() == 2);
  CHECK(entry_at(g, 0, -1).free_rank == 1);
  CHECK(entry_at(g, 0, 1).free_rank == 1);
  CHECK(entry_at(g, 0, 1).torsion.empty());
}

TEST_CASE("right trefoil homology with its torsion class") {
  auto g = kh(testing::trefoil(), Ring::Z);
  CHECK(entry_at(g, 0, 1).free_rank == 1);
  CHECK(entry_at(g, 0, 3).free_rank == 1);
  CHECK(entry_at(g, 2, 5).free_rank == 1);
  CHECK(entry_at(g, 3, 9).free_rank == 1);
  auto t = entry_at(g, 3, 7);
  CHECK(t.free_rank == 0);
  REQUIRE(t.torsion.size() == 1);
  CHECK(t.torsion[0] == 2);
  // nothing else
  int nonzero = 0;
  for (auto& [ij, e] : g.entries)
    if (e.free_rank || !e.torsion.empty()) ++nonzero;
  CHECK(nonzero == 5);
}

TEST_CASE("figure eight homology") {
  auto g = kh(testing::figure_eight(), Ring::Z);
  CHECK(entry_at(g, -2, -5).free_rank == 1);
  CHECK(entry_at(g, -1, -1).free_rank == 1);
  CHECK(entry_at(g, 0, -1).free_rank == 1);
  CHECK(entry_at(g, 0, 1).free_rank == 1);
  CHECK(entry_at(g, 1, 1).free_rank == 1);
  CHECK(entry_at(g, 2, 5).free_rank == 1);
  CHECK(entry_at(g, -1, -3).torsion == std::vector<long long>{2});
  CHECK(entry_at(g, 2, 3).torsion == std::vector<long long>{2});
}

TEST_CASE("positive hopf link homology") {
  auto hopf = torus_link(2, 2);
  auto g = kh(hopf, Ring::Z);
  REQUIRE(g.entries.size() == 4);
  CHECK(entry_at(g, 0, 0).free_rank == 1);
  CHECK(entry_at(g, 0, 2).free_rank == 1);
  CHECK(entry_at(g, 2, 4).free_rank == 1);
  CHECK(entry_at(g, 2, 6).free_rank == 1);
  for (auto& [ij, e] : g.entries) CHECK(e.torsion.empty());
}

TEST_CASE("universal coefficients identity") {
  for (auto d : {testing::unknot(), testing::trefoil(), testing::figure_eight(),
                 torus_link(2, 2), parse_dt("6 8 10 2 4"), parse_dt("4 8 10 2 6")})
    check_universal_coefficients(d);
}

TEST_CASE("mirror duality of F2 dimensions") {
  for (auto d : {testing::trefoil(), testing::figure_eight(), parse_dt("4 8 10 2 6")}) {
    auto a = kh(d, Ring::F2);
    auto b = kh(mirror(d), Ring::F2);
    for (auto& [ij, e] : a.entries) CHECK(b.f2_dim(-ij.first, -ij.second) == e.f2_dim);
    for (auto& [ij, e] : b.entries) CHECK(a.f2_dim(-ij.first, -ij.second) == e.f2_dim);
  }
}

TEST_CASE("width over F2") {
  CHECK(width_f2(kh(testing::unknot(), Ring::F2)) == 2);
  CHECK(width_f2(kh(testing::trefoil(), Ring::F2)) == 2);
  CHECK(width_f2(kh(testing::figure_eight(), Ring::F2)) == 2);
  BigradedGroup empty;
  CHECK_THROWS_AS(width_f2(empty), EmptyGroup);
}

TEST_CASE("cohomology basis representatives and projection") {
  for (auto d : {testing::trefoil(), testing::figure_eight()}) {
    Cube cube(d);
    auto khf2 = kh(cube, Ring::F2);
    for (auto& [ij, e] : khf2.entries) {
      auto slice = build_slice(cube, ij.second, Ring::F2);
      CohomologyBasis basis(slice, ij.first);
      REQUIRE(basis.dim() == e.f2_dim);
      for (int c = 0; c < basis.dim(); ++c) {
        const auto& rep = basis.representatives()[c];
        CHECK(apply_diff_f2(slice, ij.first, rep).is_zero());
        auto cls = basis.project(rep);
        for (int r = 0; r < basis.dim(); ++r) CHECK(cls.get(r) == (r == c));
      }
      // projection kills coboundaries
      if (ij.first - 1 >= slice.i_min && slice.dim(ij.first - 1) > 0) {
        F2Vector b(slice.dim(ij.first - 1));
        b.set(0, true);
        auto cls = basis.project(apply_diff_f2(slice, ij.first - 1, b));
        CHECK(cls.is_zero());
      }
    }
  }
}

TEST_CASE("sq1 on the trefoil hits the torsion class") {
  Cube cube(testing::trefoil());
  auto slice = build_slice(cube, 7, Ring::F2);
  CohomologyBasis b2(slice, 2), b3(slice, 3);
  REQUIRE(b2.dim() == 1);
  REQUIRE(b3.dim() == 1);
  auto op = sq1(slice, b2, b3);
  CHECK(op.rank() == 1);
}

TEST_CASE("sq1 squared vanishes and its rank counts order-2 torsion") {
  for (auto d : {testing::trefoil(), mirror(testing::trefoil()), testing::figure_eight(),
                 parse_dt("6 8 10 2 4"), parse_dt("4 8 10 2 6"), torus_link(2, 4)}) {
    Cube cube(d);
    auto khz = kh(cube, Ring::Z);
    auto khf2 = kh(cube, Ring::F2);
    // group occupied (i,j) by j
    std::map<int, std::vector<int>> occ;
    for (auto& [ij, e] : khf2.entries) occ[ij.second].push_back(ij.first);
    for (auto& [j, is] : occ) {
      auto slice = build_slice(cube, j, Ring::F2);
      std::map<int, CohomologyBasis> bases;
      auto basis = [&](int i) -> CohomologyBasis& {
        auto it = bases.find(i);
        if (it == bases.end()) it = bases.emplace(i, CohomologyBasis(slice, i)).first;
        return it->second;
      };
      for (int i : is) {
        auto& bi = basis(i);
        auto& bi1 = basis(i + 1);
        auto& bi2 = basis(i + 2);
        auto op1 = sq1(slice, bi, bi1);
        auto op2 = sq1(slice, bi1, bi2);
        auto comp = op2.m.multiply(op1.m);
        CHECK(f2_rank(comp) == 0);
        // bockstein rank = number of invariant factors exactly 2 at (i+1, j)
        int two_count = 0;
        if (auto* e = khz.find(i + 1, j))
          for (long long f : e->torsion)
            if (f == 2) ++two_count;
        CHECK(op1.rank() == two_count);
      }
    }
  }
}
