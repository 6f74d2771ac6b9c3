#include "doctest.h"

#include "diagrams.hpp"
#include "khst/cube.hpp"

using namespace khst;

TEST_CASE("trefoil resolutions: circle counts") {
  Cube cube(testing::trefoil());
  CHECK(cube.resolve(0b000).num_circles == 2);
  CHECK(cube.resolve(0b111).num_circles == 3);
}

TEST_CASE("one-crossing unknot: adjacent resolutions differ by one circle") {
  Cube cube(testing::unknot());
  int c0 = cube.resolve(0).num_circles;
  int c1 = cube.resolve(1).num_circles;
  CHECK(std::abs(c0 - c1) == 1);
}

TEST_CASE("edge deltas are plus or minus one on every cube edge") {
  for (auto d : {testing::trefoil(), testing::figure_eight()}) {
    Cube cube(d);
    Cube::Edge e;
    for (Vertex u = 0; u < cube.num_vertices(); ++u)
      for (int k = 0; k < cube.n(); ++k) {
        if ((u >> k) & 1) continue;
        cube.edge(u, k, e);
        int cu = cube.resolve(u).num_circles;
        int cw = cube.resolve(u | (Vertex{1} << k)).num_circles;
        CHECK(std::abs(cu - cw) == 1);
        CHECK(e.is_merge == (cw == cu - 1));
        if (e.is_merge) {
          CHECK(e.m_src1 < e.m_src2);
        } else {
          CHECK(e.s_dst1 != e.s_dst2);
        }
        // untouched circles correspond bijectively
        std::vector<int> seen(cw, 0);
        for (int s = 0; s < cu; ++s) {
          if (!e.is_merge && s == e.s_src) continue;
          seen[e.src_to_dst[s]]++;
        }
        for (int t = 0; t < cw; ++t) {
          if (!e.is_merge && (t == e.s_dst1 || t == e.s_dst2)) {
            CHECK(seen[t] == 0);
          } else if (e.is_merge && t == e.m_dst) {
            CHECK(seen[t] == 2);
          } else {
            CHECK(seen[t] == 1);
          }
        }
      }
  }
}

TEST_CASE("trefoil edges named in the examples") {
  Cube cube(testing::trefoil());
  Cube::Edge e;
  for (int k = 0; k < 3; ++k) {  // 000 -> one bit set: two circles merge into one
    cube.edge(0b000, k, e);
    CHECK(e.is_merge);
  }
  cube.edge(0b011, 2, e);  // 011 -> 111: a circle splits, 2 -> 3
  CHECK_FALSE(e.is_merge);
}

TEST_CASE("edge rejects set bits") {
  Cube cube(testing::trefoil());
  Cube::Edge e;
  CHECK_THROWS_AS(cube.edge(0b001, 0, e), NotAnEdge);
  CHECK_THROWS_AS(cube.edge(0b000, 7, e), NotAnEdge);
}

TEST_CASE("face classification is consistent with circle-count deltas") {
  for (auto d : {testing::trefoil(), testing::figure_eight()}) {
    Cube cube(d);
    for (Vertex u = 0; u < cube.num_vertices(); ++u)
      for (int k = 0; k < cube.n(); ++k)
        for (int l = k + 1; l < cube.n(); ++l) {
          if (((u >> k) & 1) || ((u >> l) & 1)) continue;
          auto f = cube.classify_face(u, k, l);
          int cu = cube.resolve(u).num_circles;
          int cw = cube.resolve(u | (Vertex{1} << k) | (Vertex{1} << l)).num_circles;
          switch (f.kind) {
            case Cube::FaceKind::TwoMerges:
              CHECK(cw == cu - 2);
              break;
            case Cube::FaceKind::TwoSplits:
              CHECK(cw == cu + 2);
              break;
            default:
              CHECK(cw == cu);
          }
          // path symmetry: both paths end at the same circle count
          CHECK((f.first_k.is_merge ? -1 : 1) + (f.then_l.is_merge ? -1 : 1) ==
                (f.first_l.is_merge ? -1 : 1) + (f.then_k.is_merge ? -1 : 1));
        }
  }
}

TEST_CASE("exhaustive two-crossing search finds the ladybug") {
  auto all = testing::all_two_crossing_diagrams();
  int ladybugs = 0;
  std::string witness;
  for (auto& d : all) {
    Cube cube(d);
    auto f = cube.classify_face(0, 0, 1);
    if (f.kind == Cube::FaceKind::Ladybug) {
      ++ladybugs;
      if (witness.empty()) witness = to_pd_string(d);
      // the ladybug is a split whose pieces re-merge
      CHECK_FALSE(f.first_k.is_merge);
      CHECK_FALSE(f.first_l.is_merge);
      CHECK(f.then_l.is_merge);
      CHECK(f.then_k.is_merge);
      CHECK(f.first_k.s_src == f.first_l.s_src);

      auto right = cube.ladybug_matching(0, 0, 1, LadybugConvention::Right);
      auto left = cube.ladybug_matching(0, 0, 1, LadybugConvention::Left);
      // both are bijections between the same two-element sets
      CHECK(right.pairs[0].first != right.pairs[1].first);
      CHECK(right.pairs[0].second != right.pairs[1].second);
      CHECK(left.pairs[0].first != left.pairs[1].first);
      // and they are the two distinct bijections
      bool same = (right.pairs[0] == left.pairs[0] && right.pairs[1] == left.pairs[1]) ||
                  (right.pairs[0] == left.pairs[1] && right.pairs[1] == left.pairs[0]);
      CHECK_FALSE(same);
    }
  }
  CHECK(ladybugs > 0);
  MESSAGE("ladybug witness: ", witness);
}

TEST_CASE("non-ladybug faces refuse a ladybug matching") {
  Cube cube(testing::trefoil());
  CHECK_THROWS_AS(cube.ladybug_matching(0, 0, 1, LadybugConvention::Right), NotAFace);
}
