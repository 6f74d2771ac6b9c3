#include "khst/diagen.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <functional>
#include <numeric>
#include <set>

namespace khst {

int DiagramBuilder::add_crossing(bool over_tlbr) {
  crossings_.push_back({over_tlbr});
  mate_.resize(mate_.size() + 4, -1);
  return static_cast<int>(crossings_.size()) - 1;
}

void DiagramBuilder::connect(int c1, int p1, int c2, int p2) {
  int a = 4 * c1 + p1, b = 4 * c2 + p2;
  if (mate_[a] != -1 || mate_[b] != -1) throw Error("builder: port connected twice");
  if (a == b) throw Error("builder: port connected to itself");
  mate_[a] = b;
  mate_[b] = a;
}

void DiagramBuilder::reconnect(int end1, int end2) {
  if (end1 == end2) {
    // the strand closed into a free unknot component
    ++dropped_unknots_;
    return;
  }
  mate_[end1] = end2;
  mate_[end2] = end1;
}

namespace {
// counterclockwise rotation of the builder's ports: TL, BL, BR, TR
constexpr int kRot[4] = {0, 2, 3, 1};
constexpr int kRotPos[4] = {0, 3, 1, 2};  // port -> position in kRot
}  // namespace

// Splice out removed crossings: `term` lists the dangling internal ports in
// strand pairs (term[0]-term[1] and term[2]-term[3] are joined through the
// removed piece), `ext` their recorded external mates.  External ends that
// point back into `term` chain through; closed chains drop a free unknot.
void DiagramBuilder::splice(const std::vector<int>& term, const std::vector<int>& ext) {
  int m = static_cast<int>(term.size());
  auto tindex = [&](int x) {
    for (int i = 0; i < m; ++i)
      if (term[i] == x) return i;
    return -1;
  };
  std::vector<int> arc(m);
  for (int i = 0; i < m; ++i) arc[i] = tindex(ext[i]);
  std::vector<char> used(m, 0);
  for (int s = 0; s < m; ++s) {
    if (used[s] || arc[s] != -1) continue;  // start at open chain ends
    int cur = s;
    used[cur] = 1;
    for (;;) {
      int nxt = cur ^ 1;  // through the strand pair
      used[nxt] = 1;
      if (arc[nxt] == -1) {
        reconnect(ext[s], ext[nxt]);
        break;
      }
      cur = arc[nxt];
      used[cur] = 1;
    }
  }
  for (int i = 0; i < m; ++i) {
    if (used[i]) continue;
    int cur = i;
    do {
      used[cur] = 1;
      used[cur ^ 1] = 1;
      cur = arc[cur ^ 1];
    } while (cur != i);
    ++dropped_unknots_;
  }
}

bool DiagramBuilder::try_r1(int c) {
  // a monogon: an arc between two rotation-adjacent ports of one crossing
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      if (q == p || q == diag(p)) continue;
      if (mate_[4 * c + p] != 4 * c + q) continue;
      int t0 = 4 * c + diag(p), t1 = 4 * c + diag(q);
      std::vector<int> term{t0, t1}, ext{mate_[t0], mate_[t1]};
      crossings_[c].dead = true;
      for (int s = 0; s < 4; ++s) mate_[4 * c + s] = -1;
      splice(term, ext);
      return true;
    }
  }
  return false;
}

bool DiagramBuilder::try_r2(int c) {
  // A bigon face: the two-step corner walk returns to its start.  The move
  // applies when the strand along one bigon arc is over at both crossings.
  auto over_at = [&](int cr, int p) {
    bool tlbr = (p == 0 || p == 3);
    return tlbr == crossings_[cr].over;
  };
  for (int t = 0; t < 4; ++t) {
    int p = kRot[t], p2 = kRot[(t + 1) & 3];
    int m1 = mate_[4 * c + p2];
    if (m1 < 0) continue;
    int c2 = m1 / 4, w = m1 & 3;
    if (c2 == c || crossings_[c2].dead) continue;
    // continue the face walk: corner at c2 starts at position of w
    int t2 = kRotPos[w];
    int m2 = mate_[4 * c2 + kRot[(t2 + 1) & 3]];
    if (m2 < 0 || m2 / 4 != c || (m2 & 3) != p) continue;  // not a bigon
    int q = kRot[(t2 + 1) & 3];  // end of the second arc at c2
    // arcs: alpha = (c,p)-(c2,q), beta = (c,p2)-(c2,w)
    if (over_at(c, p) != over_at(c2, q)) continue;  // clasp, not a poke
    std::vector<int> term{4 * c + diag(p), 4 * c2 + diag(q), 4 * c + diag(p2),
                          4 * c2 + diag(w)};
    std::vector<int> ext(4);
    for (int i = 0; i < 4; ++i) ext[i] = mate_[term[i]];
    crossings_[c].dead = crossings_[c2].dead = true;
    for (int s = 0; s < 4; ++s) mate_[4 * c + s] = mate_[4 * c2 + s] = -1;
    splice(term, ext);
    return true;
  }
  return false;
}

void DiagramBuilder::simplify() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
      if (crossings_[c].dead) continue;
      if (try_r1(c) || try_r2(c)) {
        changed = true;
        break;
      }
    }
  }
}

int DiagramBuilder::live_crossings() const {
  int n = 0;
  for (auto& c : crossings_)
    if (!c.dead) ++n;
  return n;
}

LinkDiagram DiagramBuilder::build(std::string name) const {
  int n = live_crossings();
  if (n == 0) {
    auto d = parse_pd("UNKNOT");
    d.name = std::move(name);
    return d;
  }
  for (size_t g = 0; g < mate_.size(); ++g)
    if (!crossings_[g / 4].dead && mate_[g] < 0) throw Error("builder: open port");

  // trace strands, assigning arc labels
  std::vector<int> arc_at(mate_.size(), 0);
  std::vector<char> entered(mate_.size(), 0);
  int next_arc = 1;
  std::vector<char> seen(mate_.size(), 0);
  for (size_t g0 = 0; g0 < mate_.size(); ++g0) {
    if (crossings_[g0 / 4].dead || seen[g0]) continue;
    // walk the component containing the strand leaving port g0
    int out = static_cast<int>(g0);
    do {
      int in = mate_[out];  // arc from `out` to `in`
      int arc = next_arc++;
      arc_at[out] = arc;
      arc_at[in] = arc;
      seen[out] = seen[in] = 1;
      entered[in] = 1;
      out = (in & ~3) | diag(in & 3);  // pass through the crossing
      seen[out] = 1;
    } while (out != static_cast<int>(g0));
  }

  // emit PD: slots counterclockwise from the incoming under-strand port
  static constexpr int ccw[4] = {0, 2, 3, 1};  // TL, BL, BR, TR
  std::vector<std::array<int, 4>> pd;
  pd.reserve(n);
  for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
    if (crossings_[c].dead) continue;
    int under_in = -1;
    for (int p = 0; p < 4; ++p) {
      bool on_tlbr = (p == 0 || p == 3);
      if (on_tlbr != crossings_[c].over && entered[4 * c + p]) under_in = p;
    }
    if (under_in < 0) throw Error("builder: trace missed a crossing");
    int start = 0;
    while (ccw[start] != under_in) ++start;
    std::array<int, 4> slots{};
    for (int s = 0; s < 4; ++s) slots[s] = arc_at[4 * c + ccw[(start + s) & 3]];
    pd.push_back(slots);
  }
  return detail::finalize_diagram(std::move(pd), std::move(name));
}

LinkDiagram braid_closure(int strands, const std::vector<int>& word, std::string name) {
  if (strands < 2) throw Error("braid: need at least 2 strands");
  DiagramBuilder b;
  std::vector<int> cur(strands + 1, -1), top(strands + 1, -1);
  for (int letter : word) {
    int k = std::abs(letter);
    if (k < 1 || k >= strands) throw Error("braid: bad letter");
    int x = b.add_crossing(letter > 0);
    if (cur[k] >= 0)
      b.connect(cur[k] / 4, cur[k] & 3, x, 0);
    else
      top[k] = 4 * x + 0;
    if (cur[k + 1] >= 0)
      b.connect(cur[k + 1] / 4, cur[k + 1] & 3, x, 1);
    else
      top[k + 1] = 4 * x + 1;
    cur[k] = 4 * x + 2;
    cur[k + 1] = 4 * x + 3;
  }
  for (int pos = 1; pos <= strands; ++pos) {
    if (cur[pos] < 0) throw Error("braid: strand " + std::to_string(pos) + " never crossed");
    b.connect(cur[pos] / 4, cur[pos] & 3, top[pos] / 4, top[pos] & 3);
  }
  auto d = b.build(std::move(name));
  return d;
}

LinkDiagram torus_link(int p, int q, std::string name) {
  if (p < 2 || q < 1) throw Error("torus: need p >= 2, q >= 1");
  std::vector<int> word;
  for (int rep = 0; rep < q; ++rep)
    for (int k = 1; k < p; ++k) word.push_back(k);
  if (name.empty()) name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return braid_closure(p, word, name);
}

LinkDiagram pretzel_link(const std::vector<int>& twists, std::string name) {
  if (twists.size() < 2) throw Error("pretzel: need at least 2 regions");
  for (int t : twists)
    if (t == 0) throw Error("pretzel: zero twist region");
  DiagramBuilder b;
  // region i: |t_i| stacked crossings; remember top-left/right, bottom-l/r
  struct Region {
    int tl, tr, bl, br;  // global port ids
  };
  std::vector<Region> regions;
  for (int t : twists) {
    int m = std::abs(t);
    int first = -1, last = -1;
    for (int s = 0; s < m; ++s) {
      int x = b.add_crossing(t > 0);
      if (s > 0) {
        b.connect(last, 2, x, 0);
        b.connect(last, 3, x, 1);
      } else {
        first = x;
      }
      last = x;
    }
    regions.push_back({4 * first + 0, 4 * first + 1, 4 * last + 2, 4 * last + 3});
  }
  // tops: right top of region i to left top of region i+1, wrapping
  int k = static_cast<int>(regions.size());
  for (int i = 0; i < k; ++i) {
    const Region& a = regions[i];
    const Region& c = regions[(i + 1) % k];
    b.connect(a.tr / 4, a.tr & 3, c.tl / 4, c.tl & 3);
    b.connect(a.br / 4, a.br & 3, c.bl / 4, c.bl & 3);
  }
  if (name.empty()) {
    name = "P(";
    for (size_t i = 0; i < twists.size(); ++i)
      name += (i ? "," : "") + std::to_string(twists[i]);
    name += ")";
  }
  return b.build(std::move(name));
}

LinkDiagram rational_link(const std::vector<int>& cf, std::string name) {
  if (cf.empty()) throw Error("rational: empty continued fraction");
  for (int a : cf)
    if (a < 1) throw Error("rational: entries must be positive");
  DiagramBuilder b;
  // tangle with four dangling ports; horizontal regions use over=true and
  // vertical ones over=false so the closed diagram is alternating
  int nw = -1, ne = -1, sw = -1, se = -1;
  for (size_t step = 0; step < cf.size(); ++step) {
    bool horizontal = (step % 2 == 0);
    for (int s = 0; s < cf[step]; ++s) {
      int x = b.add_crossing(horizontal);
      if (horizontal) {
        // new crossing on the right: TL, BL attach to ne, se
        if (ne >= 0) b.connect(ne / 4, ne & 3, x, 0);
        if (se >= 0) b.connect(se / 4, se & 3, x, 2);
        if (ne < 0) nw = 4 * x + 0;
        if (se < 0) sw = 4 * x + 2;
        ne = 4 * x + 1;
        se = 4 * x + 3;
      } else {
        // new crossing at the bottom: TL, TR attach to sw, se
        b.connect(sw / 4, sw & 3, x, 0);
        b.connect(se / 4, se & 3, x, 1);
        sw = 4 * x + 2;
        se = 4 * x + 3;
      }
    }
  }
  // numerator closure
  b.connect(nw / 4, nw & 3, ne / 4, ne & 3);
  b.connect(sw / 4, sw & 3, se / 4, se & 3);
  if (name.empty()) {
    name = "C(";
    for (size_t i = 0; i < cf.size(); ++i) name += (i ? "," : "") + std::to_string(cf[i]);
    name += ")";
  }
  return b.build(std::move(name));
}

int rational_determinant(const std::vector<int>& cf) {
  // numerator (continuant) of a1 + 1/(a2 + 1/(...)); symmetric in reading order
  long long p = 1, q = 0;
  for (auto it = cf.rbegin(); it != cf.rend(); ++it) {
    long long np = *it * p + q;
    q = p;
    p = np;
  }
  return static_cast<int>(p);
}

LinkDiagram grid_diagram(const std::vector<int>& o_rows, const std::vector<int>& x_rows,
                         std::string name) {
  const int n = static_cast<int>(o_rows.size());
  if (static_cast<int>(x_rows.size()) != n) throw Error("grid: size mismatch");
  std::vector<int> o_col(n, -1), x_col(n, -1);  // inverse permutations
  for (int c = 0; c < n; ++c) {
    if (o_rows[c] < 0 || o_rows[c] >= n || x_rows[c] < 0 || x_rows[c] >= n ||
        o_rows[c] == x_rows[c])
      throw Error("grid: bad marker");
    o_col[o_rows[c]] = c;
    x_col[x_rows[c]] = c;
  }
  for (int r = 0; r < n; ++r)
    if (o_col[r] < 0 || x_col[r] < 0) throw Error("grid: not a permutation pair");

  DiagramBuilder b;
  std::map<std::pair<int, int>, int> cross;  // (col, row) -> crossing id
  auto vspan = [&](int c) {
    return std::pair{std::min(o_rows[c], x_rows[c]), std::max(o_rows[c], x_rows[c])};
  };
  auto hspan = [&](int r) {
    return std::pair{std::min(o_col[r], x_col[r]), std::max(o_col[r], x_col[r])};
  };
  for (int c = 0; c < n; ++c) {
    auto [rlo, rhi] = vspan(c);
    for (int r = rlo + 1; r < rhi; ++r) {
      auto [clo, chi] = hspan(r);
      if (clo < c && c < chi) cross[{c, r}] = b.add_crossing(true);  // vertical over
    }
  }
  // compass frame: vertical strand N-S on the TL-BR diagonal (N = TL toward
  // larger rows), horizontal W-E on BL-TR
  constexpr int kN = 0, kS = 3, kE = 1, kW = 2;

  // Each marker cell is a junction joining one vertical and one horizontal
  // end.  An attachment is a crossing port, or a wire id for a segment with
  // no crossings on it.
  struct Attach {
    bool is_port;
    int id;  // 4*crossing+port, or wire id
  };
  std::map<std::pair<int, int>, std::vector<Attach>> cell;
  int next_wire = 0;
  std::map<int, std::array<std::pair<int, int>, 2>> wire_ends;

  auto run_line = [&](std::pair<int, int> cell_lo, std::pair<int, int> cell_hi,
                      const std::vector<int>& ids, int in_port, int out_port) {
    // ids: crossings along the segment in increasing order
    if (ids.empty()) {
      int w = next_wire++;
      wire_ends[w] = {cell_lo, cell_hi};
      cell[cell_lo].push_back({false, w});
      cell[cell_hi].push_back({false, w});
      return;
    }
    cell[cell_lo].push_back({true, 4 * ids.front() + in_port});
    for (size_t t = 0; t + 1 < ids.size(); ++t)
      b.connect(ids[t], out_port, ids[t + 1], in_port);
    cell[cell_hi].push_back({true, 4 * ids.back() + out_port});
  };

  for (int c = 0; c < n; ++c) {
    auto [rlo, rhi] = vspan(c);
    std::vector<int> ids;
    for (int r = rlo + 1; r < rhi; ++r)
      if (auto it = cross.find({c, r}); it != cross.end()) ids.push_back(it->second);
    run_line({c, rlo}, {c, rhi}, ids, kS, kN);
  }
  for (int r = 0; r < n; ++r) {
    auto [clo, chi] = hspan(r);
    std::vector<int> ids;
    for (int c = clo + 1; c < chi; ++c)
      if (auto it = cross.find({c, r}); it != cross.end()) ids.push_back(it->second);
    run_line({clo, r}, {chi, r}, ids, kW, kE);
  }

  // Walk junction chains from each port through wires to the partner port.
  std::set<std::pair<int, int>> used;
  for (auto& [pos, attach] : cell) {
    if (attach.size() != 2) throw Error("grid: junction degree mismatch");
    if (used.count(pos)) continue;
    if (!attach[0].is_port && !attach[1].is_port) continue;  // handled below or a loop
    int start = attach[0].is_port ? 0 : 1;
    int port_a = attach[start].id;
    used.insert(pos);
    Attach cur = attach[1 - start];
    auto at = pos;
    while (!cur.is_port) {
      auto& ends = wire_ends[cur.id];
      auto next = (ends[0] == at) ? ends[1] : ends[0];
      used.insert(next);
      auto& na = cell[next];
      cur = (na[0].is_port == cur.is_port && na[0].id == cur.id) ? na[1] : na[0];
      // the test above distinguishes the incoming wire from the outgoing one
      at = next;
    }
    b.connect(port_a / 4, port_a & 3, cur.id / 4, cur.id & 3);
  }
  // any remaining cells form crossing-free loops: free unknot components,
  // which the builder cannot represent; reject for now
  for (auto& [pos, attach] : cell)
    if (!used.count(pos)) throw Error("grid: crossing-free component");

  b.simplify();
  return b.build(std::move(name));
}

}  // namespace khst
