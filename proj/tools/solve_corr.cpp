// Solve for a per-(y,z)-edge correction to the sq2 coefficient formula.
// coeff(z) = base(z) + sum_{y -> z, Gamma_y nonempty} t(key(y,z)), and the
// delta-consistency sum_{z -> w} coeff(z) = 0 gives F2-linear equations in t.
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "khst/diagen.hpp"
#include "khst/steenrod.hpp"

using namespace khst;

namespace khst {
extern int g_skip_output_check, g_bockstein_term;
}

struct Equation {
  std::set<std::string> keys;
  int rhs;
  bool operator<(const Equation& o) const {
    return keys != o.keys ? keys < o.keys : rhs < o.rhs;
  }
};
static std::set<Equation> equations;
static std::map<std::string, int> key_count;

void collect(const LinkDiagram& d) {
  Cube cube(d);
  if (!cube.is_planar()) return;
  for (int j : occupied_quantum_gradings(cube)) {
    auto slice = build_slice(cube, j, Ring::F2);
    for (int i = slice.i_min; i + 3 <= slice.i_max; ++i) {
      int n0 = slice.dim(i);
      if (n0 == 0 || slice.dim(i + 2) == 0 || slice.dim(i + 3) == 0 || n0 > 12) continue;
      for (uint32_t bits = 1; bits < (1u << n0); ++bits) {
        F2Vector c(n0);
        for (int t = 0; t < n0; ++t)
          if ((bits >> t) & 1) c.set(t, true);
        if (!apply_diff_f2(slice, i, c).is_zero()) continue;
        F2Vector out = sq2_chain(cube, slice, i, c);

        const auto& gi1 = slice.generators(i + 1);
        const auto& gi2 = slice.generators(i + 2);
        std::map<int, std::vector<int>> gamma;
        c.for_each_set([&](int x) {
          for (auto& e : slice.differential(i)[x]) gamma[e.target].push_back(x);
        });
        // per-z multiset of edge keys
        std::map<int, std::map<std::string, int>> zkeys;
        for (auto& [y, xs] : gamma) {
          const auto& gy = gi1[y];
          int kplus = 0, kminus = 0;
          for (int x : xs) {
            int s = Cube::edge_sign(slice.generators(i)[x].v,
                                    __builtin_ctz(slice.generators(i)[x].v ^ gy.v));
            (s ? kminus : kplus)++;
          }
          int eps = ((kplus - kminus) / 2) & 1;
          int k2 = ((kplus + kminus) / 2) & 1;
          for (auto& e : slice.differential(i + 1)[y]) {
            int bit = __builtin_ctz(gy.v ^ gi2[e.target].v);
            int s2 = Cube::edge_sign(gy.v, bit);
            // edge label data: merge or split and the labels involved
            Cube::Edge ce;
            cube.edge(gy.v, bit, ce);
            std::ostringstream key;
            key << "e" << eps << "k" << k2 << "s" << s2;
            if (ce.is_merge) {
              int la = (gy.x_mask >> ce.m_src1) & 1, lb = (gy.x_mask >> ce.m_src2) & 1;
              key << "M" << std::min(la, lb) << std::max(la, lb);
            } else {
              key << "S" << ((gy.x_mask >> ce.s_src) & 1);
            }
            zkeys[e.target][key.str()]++;
          }
        }
        const auto& rows2 = slice.differential(i + 2);
        std::map<int, Equation> eq;
        for (int z = 0; z < slice.dim(i + 2); ++z) {
          bool has = out.get(z) || zkeys.count(z);
          if (!has) continue;
          for (auto& e : rows2[z]) {
            auto& q = eq[e.target];
            q.rhs ^= out.get(z) ? 1 : 0;
            if (auto it = zkeys.find(z); it != zkeys.end())
              for (auto& [key, count] : it->second) {
                key_count[key] += count;
                if (count & 1) {
                  if (q.keys.count(key))
                    q.keys.erase(key);
                  else
                    q.keys.insert(key);
                }
              }
          }
        }
        for (auto& [w, q] : eq)
          if (!q.keys.empty() || q.rhs) equations.insert(q);
      }
    }
  }
}

int main() {
  g_skip_output_check = 1;
  g_bockstein_term = 0;
  collect(parse_pd("PD[X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)]"));
  collect(parse_dt("4 6 8 2"));
  collect(torus_link(2, 4));
  collect(parse_dt("6 8 10 2 4"));
  collect(parse_dt("4 8 10 2 6"));
  collect(torus_link(2, 6));
  collect(parse_dt("4 8 10 12 2 6"));
  collect(parse_dt("4 8 10 2 12 6"));
  collect(torus_link(3, 4));
  collect(mirror(torus_link(3, 4)));

  std::set<std::string> vars;
  for (auto& q : equations)
    for (auto& k : q.keys) vars.insert(k);
  std::vector<std::string> var_list(vars.begin(), vars.end());
  std::map<std::string, int> idx;
  for (size_t t = 0; t < var_list.size(); ++t) idx[var_list[t]] = static_cast<int>(t);
  std::cout << equations.size() << " distinct equations, " << var_list.size() << " variables\n";

  std::vector<std::pair<std::vector<char>, int>> rows;
  for (auto& q : equations) {
    std::vector<char> r(var_list.size(), 0);
    for (auto& k : q.keys) r[idx[k]] = 1;
    rows.push_back({r, q.rhs});
  }
  size_t rank = 0;
  std::vector<int> pivot_var;
  for (size_t col = 0; col < var_list.size() && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && !rows[piv].first[col]) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].first[col]) {
        for (size_t cc = 0; cc < var_list.size(); ++cc) rows[r].first[cc] ^= rows[rank].first[cc];
        rows[r].second ^= rows[rank].second;
      }
    pivot_var.push_back(static_cast<int>(col));
    ++rank;
  }
  bool feasible = true;
  for (size_t r = rank; r < rows.size(); ++r)
    if (rows[r].second) feasible = false;
  std::cout << "rank " << rank << " feasible " << feasible << "\n";
  if (feasible) {
    for (size_t p = 0; p < rank; ++p) {
      std::cout << var_list[pivot_var[p]] << " = " << rows[p].second;
      std::vector<std::string> deps;
      for (size_t cc = 0; cc < var_list.size(); ++cc)
        if (rows[p].first[cc] && static_cast<int>(cc) != pivot_var[p])
          deps.push_back(var_list[cc]);
      for (auto& v : deps) std::cout << " + " << v;
      std::cout << "\n";
    }
    std::set<int> pivots(pivot_var.begin(), pivot_var.end());
    for (size_t v = 0; v < var_list.size(); ++v)
      if (!pivots.count(static_cast<int>(v)))
        std::cout << var_list[v] << " free (count " << key_count[var_list[v]] << ")\n";
  }
  return 0;
}
