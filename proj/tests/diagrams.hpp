#pragma once

// Shared diagram fixtures and small helpers for the test suites.

#include <map>
#include "khst/cube.hpp"
#include <string>
#include <vector>

#include "khst/khcomplex.hpp"
#include "khst/pd.hpp"

namespace khst::testing {

inline const char* kTrefoilPd = "PD[X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)]";  // right-handed
inline const char* kUnknot1 = "PD[X(1,1,2,2)]";

inline LinkDiagram trefoil() { return parse_pd(kTrefoilPd); }
inline LinkDiagram figure_eight() { return parse_dt("4 6 8 2"); }
inline LinkDiagram unknot() { return parse_pd(kUnknot1); }

// All valid planar two-crossing PD diagrams (up to the raw 8-tuple encoding).
inline std::vector<LinkDiagram> all_two_crossing_diagrams() {
  std::vector<LinkDiagram> out;
  int a[8];
  for (int code = 0; code < 65536; ++code) {
    int c = code;
    int count[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 8; ++i) {
      a[i] = c % 4 + 1;
      count[a[i]]++;
      c /= 4;
    }
    if (count[1] != 2 || count[2] != 2 || count[3] != 2 || count[4] != 2) continue;
    try {
      auto d = detail::finalize_diagram(
          {{{a[0], a[1], a[2], a[3]}}, {{a[4], a[5], a[6], a[7]}}}, "two" + std::to_string(code));
      if (Cube(d).is_planar()) out.push_back(std::move(d));
    } catch (const Error&) {
      // orientation conflicts etc: skip
    }
  }
  return out;
}

// Exact check that the integer differential squares to zero.
inline bool d_squared_is_zero(const GradedComplex& c) {
  for (int i = c.i_min; i + 2 <= c.i_max; ++i) {
    const auto& d1 = c.differential(i);
    const auto& d2 = c.differential(i + 1);
    for (size_t s = 0; s < d1.size(); ++s) {
      std::map<int, int> acc;
      for (const auto& e1 : d1[s])
        for (const auto& e2 : d2[e1.target]) acc[e2.target] += e1.sign * e2.sign;
      for (auto& [t, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

inline bool complex_is_valid(const Cube& cube, const GradedComplex& c) {
  if (!d_squared_is_zero(c)) return false;
  // generator gradings recompute correctly
  const auto& d = cube.diagram();
  for (int i = c.i_min; i <= c.i_max; ++i)
    for (const auto& g : c.generators(i)) {
      int w = __builtin_popcount(g.v);
      if (w - d.n_minus != i) return false;
      int circles = cube.resolve(g.v).num_circles;
      int j = circles - 2 * __builtin_popcount(g.x_mask) + w + d.n_plus - 2 * d.n_minus;
      if (j != c.j) return false;
    }
  return true;
}

}  // namespace khst::testing
