#include "khst/khcomplex.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>

namespace khst {

int GradedComplex::index_of(int i, const KhGenerator& g) const {
  if (i < i_min || i > i_max) return -1;
  const auto& v = gens[i - i_min];
  auto it = std::lower_bound(v.begin(), v.end(), g);
  if (it == v.end() || !(*it == g)) return -1;
  return static_cast<int>(it - v.begin());
}

std::vector<int> occupied_quantum_gradings(const Cube& cube) {
  const auto& d = cube.diagram();
  std::set<int> out;
  for (Vertex v = 0; v < cube.num_vertices(); ++v) {
    int c = cube.resolve(v).num_circles;
    int w = __builtin_popcount(v);
    int base = w + d.n_plus - 2 * d.n_minus;
    // labels contribute c, c-2, ..., -c
    out.insert(base + c);
    out.insert(base - c);
    for (int m = 1; m < c; ++m) out.insert(base + c - 2 * m);
  }
  return {out.begin(), out.end()};
}

GradedComplex build_slice(const Cube& cube, int j, Ring ring) {
  const auto& d = cube.diagram();
  const int n = d.n();
  GradedComplex out;
  out.ring = ring;
  out.j = j;
  out.i_min = -d.n_minus;
  out.i_max = n - d.n_minus;
  out.gens.assign(n + 1, {});
  out.diff.assign(n + 1, {});

  // enumerate generators
  for (Vertex v = 0; v < cube.num_vertices(); ++v) {
    int c = cube.resolve(v).num_circles;
    int w = __builtin_popcount(v);
    int twice_m = c + w + d.n_plus - 2 * d.n_minus - j;
    if (twice_m < 0 || twice_m % 2 != 0) continue;
    int m = twice_m / 2;  // number of x labels
    if (m > c) continue;
    auto& bucket = out.gens[w];
    if (m == 0) {
      bucket.push_back({v, 0});
      continue;
    }
    // masks with popcount m over c bits, ascending (Gosper)
    uint32_t mask = (uint32_t{1} << m) - 1;
    uint32_t limit = uint32_t{1} << c;
    while (mask < limit) {
      bucket.push_back({v, mask});
      uint32_t c0 = mask & -mask, r = mask + c0;
      mask = (((r ^ mask) >> 2) / c0) | r;
    }
  }

  // differentials; cube edges are computed once per vertex
  std::vector<Cube::Edge> edges(n);
  for (int w = 0; w <= n; ++w) {
    auto& src = out.gens[w];
    out.diff[w].resize(src.size());
    if (w == n || src.empty()) continue;
    const auto& dst = out.gens[w + 1];
    auto find_target = [&](const KhGenerator& g) {
      auto it = std::lower_bound(dst.begin(), dst.end(), g);
      assert(it != dst.end() && *it == g);
      return static_cast<int>(it - dst.begin());
    };
    Vertex cur_v = ~Vertex{0};
    for (size_t gi = 0; gi < src.size(); ++gi) {
      const auto& g = src[gi];
      auto& row = out.diff[w][gi];
      if (g.v != cur_v) {
        for (int k = 0; k < n; ++k)
          if (!((g.v >> k) & 1)) cube.edge(g.v, k, edges[k]);
        cur_v = g.v;
      }
      for (int k = 0; k < n; ++k) {
        if ((g.v >> k) & 1) continue;
        const Cube::Edge& e = edges[k];
        int8_t sign = Cube::edge_sign(g.v, k) ? -1 : +1;
        Vertex tv = g.v | (Vertex{1} << k);
        if (e.is_merge) {
          bool xa = (g.x_mask >> e.m_src1) & 1, xb = (g.x_mask >> e.m_src2) & 1;
          if (xa && xb) continue;  // x.x = 0
          uint32_t tm = 0;
          auto rsrc = cube.resolve(g.v);
          for (int s = 0; s < rsrc.num_circles; ++s) {
            if (s == e.m_src1 || s == e.m_src2) continue;
            if ((g.x_mask >> s) & 1) tm |= uint32_t{1} << e.src_to_dst[s];
          }
          if (xa ^ xb) tm |= uint32_t{1} << e.m_dst;
          row.push_back({find_target({tv, tm}), sign});
        } else {
          uint32_t base = 0;
          auto rsrc = cube.resolve(g.v);
          for (int s = 0; s < rsrc.num_circles; ++s) {
            if (s == e.s_src) continue;
            if ((g.x_mask >> s) & 1) base |= uint32_t{1} << e.src_to_dst[s];
          }
          if ((g.x_mask >> e.s_src) & 1) {
            // x -> x (x) x
            uint32_t tm = base | (uint32_t{1} << e.s_dst1) | (uint32_t{1} << e.s_dst2);
            row.push_back({find_target({tv, tm}), sign});
          } else {
            // 1 -> 1 (x) x + x (x) 1
            row.push_back({find_target({tv, base | (uint32_t{1} << e.s_dst2)}), sign});
            row.push_back({find_target({tv, base | (uint32_t{1} << e.s_dst1)}), sign});
          }
        }
      }
      std::sort(row.begin(), row.end(),
                [](const GradedComplex::DiffEntry& a, const GradedComplex::DiffEntry& b) {
                  return a.target < b.target;
                });
    }
  }

  // trim unoccupied top/bottom degrees
  int lo = 0, hi = n;
  while (lo < hi && out.gens[lo].empty()) ++lo;
  while (hi > lo && out.gens[hi].empty()) --hi;
  out.gens.erase(out.gens.begin() + hi + 1, out.gens.end());
  out.gens.erase(out.gens.begin(), out.gens.begin() + lo);
  out.diff.erase(out.diff.begin() + hi + 1, out.diff.end());
  out.diff.erase(out.diff.begin(), out.diff.begin() + lo);
  out.i_min += lo;
  out.i_max = out.i_min + static_cast<int>(out.gens.size()) - 1;
  return out;
}

std::vector<GradedComplex> build_complex(const Cube& cube, Ring ring,
                                         const std::optional<std::set<int>>& j_filter) {
  std::vector<GradedComplex> out;
  for (int j : occupied_quantum_gradings(cube)) {
    if (j_filter && !j_filter->count(j)) continue;
    out.push_back(build_slice(cube, j, ring));
  }
  return out;
}

Laurent graded_euler_characteristic(const std::vector<GradedComplex>& complexes) {
  Laurent out;
  for (const auto& c : complexes)
    for (int i = c.i_min; i <= c.i_max; ++i)
      out.add_term(c.j, (i & 1) ? -c.dim(i) : c.dim(i));
  return out;
}

Laurent kauffman_jones(const LinkDiagram& d) {
  const int n = d.n();
  if (n > 16) throw TooLarge("kauffman_jones limited to 16 crossings");

  // Count circles of each state with a plain union-find over arc labels.
  std::vector<int> uf(2 * n + 1);
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };

  Laurent bracket;  // in the variable A, even degrees only
  Laurent delta = Laurent::monomial(-1, 2) + Laurent::monomial(-1, -2);
  for (uint32_t v = 0; v < (uint32_t{1} << n); ++v) {
    std::iota(uf.begin(), uf.end(), 0);
    for (int k = 0; k < n; ++k) {
      const auto& x = d.crossings[k].arc;
      if ((v >> k) & 1) {
        uf[find(x[0])] = find(x[1]);
        uf[find(x[2])] = find(x[3]);
      } else {
        uf[find(x[0])] = find(x[3]);
        uf[find(x[1])] = find(x[2]);
      }
    }
    int circles = 0;
    for (int a = 1; a <= 2 * n; ++a)
      if (find(a) == a) ++circles;
    Laurent term = Laurent::monomial(1, -2 * __builtin_popcount(v));
    for (int c = 0; c < circles; ++c) term *= delta;
    bracket += term;
  }

  // B(A) = sum_v A^{-2|v|} delta^{c(v)} equals sum_v (-q)^{|v|} (q+1/q)^{c(v)}
  // under q = -A^{-2}; so map A^{-2m} -> (-1)^m q^m and shift.
  Laurent jones;
  for (auto& [deg, coeff] : bracket.terms()) {
    assert(deg % 2 == 0);
    int m = -deg / 2;
    jones.add_term(m, (m & 1) ? -coeff : coeff);
  }
  Laurent shift = Laurent::monomial((d.n_minus & 1) ? -1 : 1, d.n_plus - 2 * d.n_minus);
  return jones * shift;
}

std::string dump_complex(const GradedComplex& c) {
  std::ostringstream os;
  os << "# j " << c.j << "\n";
  for (int i = c.i_min; i < c.i_max; ++i) {
    const auto& rows = c.differential(i);
    for (size_t s = 0; s < rows.size(); ++s)
      for (const auto& e : rows[s])
        os << i << " " << e.target << " " << s << " "
           << (c.ring == Ring::F2 ? 1 : static_cast<int>(e.sign)) << "\n";
  }
  return os.str();
}

}  // namespace khst
