// Dissect one failing sq2 evaluation completely.
#include <iostream>
#include <map>
#include <set>

#include "khst/diagen.hpp"
#include "khst/steenrod.hpp"

using namespace khst;

namespace khst {
extern int g_skip_output_check;
}

int main(int argc, char** argv) {
  g_skip_output_check = 1;
  auto d = mirror(parse_dt("6 8 10 2 4"));
  Cube cube(d);
  int jslice = -5, ideg = -4;
  uint32_t bits = 0;
  if (argc > 3) {
    jslice = std::atoi(argv[1]);
    ideg = std::atoi(argv[2]);
    bits = std::atoi(argv[3]);
  } else {
    // find the first failing (j, i, cocycle)
    bool found = false;
    for (int j : occupied_quantum_gradings(cube)) {
      auto sl = build_slice(cube, j, Ring::F2);
      for (int i = sl.i_min; i + 3 <= sl.i_max && !found; ++i) {
        int n0 = sl.dim(i);
        if (n0 == 0 || sl.dim(i + 2) == 0 || n0 > 14) continue;
        for (uint32_t b = 1; b < (1u << n0) && !found; ++b) {
          F2Vector c(n0);
          for (int t = 0; t < n0; ++t)
            if ((b >> t) & 1) c.set(t, true);
          if (!apply_diff_f2(sl, i, c).is_zero()) continue;
          if (!apply_diff_f2(sl, i + 2, sq2_chain(cube, sl, i, c)).is_zero()) {
            jslice = j;
            ideg = i;
            bits = b;
            found = true;
          }
        }
      }
      if (found) break;
    }
    if (!found) {
      std::cout << "no failure found\n";
      return 0;
    }
  }
  std::cout << "failing at j=" << jslice << " i=" << ideg << " bits=" << bits << "\n";
  auto slice = build_slice(cube, jslice, Ring::F2);
  int n0 = slice.dim(ideg);
  F2Vector c(n0);
  for (int t = 0; t < n0; ++t)
    if ((bits >> t) & 1) c.set(t, true);
  std::cout << "dims: " << slice.dim(ideg) << " " << slice.dim(ideg + 1) << " "
            << slice.dim(ideg + 2) << " " << slice.dim(ideg + 3) << "\n";
  std::cout << "cocycle? " << apply_diff_f2(slice, ideg, c).is_zero() << "\n";

  F2Vector out = sq2_chain(cube, slice, ideg, c);
  F2Vector dout = apply_diff_f2(slice, ideg + 2, out);
  std::cout << "delta(out) popcount " << dout.popcount() << "\n";
  int wbad = dout.first_set();
  std::cout << "first failing w = " << wbad << "\n";

  const auto& gi = slice.generators(ideg);
  const auto& gi1 = slice.generators(ideg + 1);
  const auto& gi2 = slice.generators(ideg + 2);
  auto vstr = [&](Vertex v) {
    std::string s;
    for (int k = 0; k < cube.n(); ++k) s += ((v >> k) & 1) ? '1' : '0';
    return s;
  };
  auto gstr = [&](const KhGenerator& g) {
    std::string s = vstr(g.v) + "/";
    int nc = cube.resolve(g.v).num_circles;
    for (int t = 0; t < nc; ++t) s += ((g.x_mask >> t) & 1) ? 'x' : '1';
    return s;
  };

  // z's feeding wbad
  std::set<int> zs;
  for (int z = 0; z < slice.dim(ideg + 2); ++z)
    for (auto& e : slice.differential(ideg + 2)[z])
      if (e.target == wbad) zs.insert(z);

  std::cout << "w = " << gstr(slice.generators(ideg + 3)[wbad]) << "\n";
  std::map<int, std::vector<int>> gamma;
  c.for_each_set([&](int x) {
    for (auto& e : slice.differential(ideg)[x]) gamma[e.target].push_back(x);
  });
  for (int z : zs) {
    std::cout << "--- z=" << z << " " << gstr(gi2[z]) << " coeff " << out.get(z) << "\n";
    for (auto& [y, xs] : gamma) {
      bool hits = false;
      for (auto& e : slice.differential(ideg + 1)[y])
        if (e.target == z) hits = true;
      if (!hits) continue;
      for (int x : xs) {
        Vertex u = gi[x].v, w2 = gi2[z].v;
        uint32_t bd = u ^ w2;
        int k = __builtin_ctz(bd), l = 31 - __builtin_clz(bd);
        auto f = cube.classify_face(u, k, l);
        const char* kind = "";
        switch (f.kind) {
          case Cube::FaceKind::TwoMerges: kind = "MM"; break;
          case Cube::FaceKind::TwoSplits: kind = "SS"; break;
          case Cube::FaceKind::MergeThenSplit: kind = "MS"; break;
          case Cube::FaceKind::SplitThenMerge: kind = "SM"; break;
          case Cube::FaceKind::Disjoint: kind = "DJ"; break;
          case Cube::FaceKind::Ladybug: kind = "LB"; break;
        }
        int s1 = Cube::edge_sign(u, __builtin_ctz(u ^ gi1[y].v));
        int s2 = Cube::edge_sign(gi1[y].v, __builtin_ctz(gi1[y].v ^ w2));
        std::cout << "  flow x=" << x << " " << gstr(gi[x]) << " -> y=" << y << " "
                  << gstr(gi1[y]) << " (" << kind << ", s1=" << s1 << ", s2=" << s2 << ")\n";
      }
    }
    std::cout << dump_sq2_evaluation(cube, slice, ideg, c).substr(0, 0);
  }
  return 0;
}
