#include "khst/pd.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace khst {

std::array<std::array<int, 2>, 2> LinkDiagram::ends_of(int arc_label) const {
  std::array<std::array<int, 2>, 2> out{};
  int found = 0;
  for (int c = 0; c < n(); ++c)
    for (int s = 0; s < 4; ++s)
      if (crossings[c].arc[s] == arc_label) {
        if (found < 2) out[found] = {c, s};
        ++found;
      }
  if (found != 2) throw InconsistentArcs("arc " + std::to_string(arc_label));
  return out;
}

namespace {

// Union-find with parity relative to the root.  Used both for the
// orientation constraints (nodes = crossings + a ground node) and for
// component counting (nodes = arcs).
struct ParityDsu {
  std::vector<int> parent;
  std::vector<uint8_t> parity;  // parity of node relative to its parent
  explicit ParityDsu(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }

  std::pair<int, uint8_t> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [r, p] = find(parent[x]);
    parent[x] = r;
    parity[x] ^= p;
    return {r, parity[x]};
  }

  // Enforce value(a) xor value(b) == rel.  Returns false on contradiction.
  bool unite(int a, int b, uint8_t rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return static_cast<uint8_t>(pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return true;
  }
};

// IN/OUT status of a slot: slot 0 is the incoming under-strand, slot 2 the
// outgoing one.  Slots 1/3 depend on the over-strand direction variable.
// status = cst xor (dep ? over_fwd : 0), with status 1 = incoming.
struct SlotStatus {
  uint8_t cst, dep;
};
constexpr SlotStatus kSlotStatus[4] = {{1, 0}, {0, 1}, {0, 0}, {1, 1}};

}  // namespace

namespace detail {

LinkDiagram finalize_diagram(std::vector<std::array<int, 4>> crossings, std::string name) {
  const int n = static_cast<int>(crossings.size());
  if (n == 0) throw MalformedSyntax("empty diagram");

  // Normalize labels to 1..2n preserving order, and check multiplicity 2.
  {
    std::map<int, int> count;
    for (auto& x : crossings)
      for (int a : x) {
        if (a < 1) throw MalformedSyntax("arc label " + std::to_string(a) + " < 1");
        count[a]++;
      }
    if (static_cast<int>(count.size()) != 2 * n)
      throw InconsistentArcs(std::to_string(count.size()) + " distinct labels, expected " +
                             std::to_string(2 * n));
    std::map<int, int> remap;
    int next = 1;
    for (auto& [label, c] : count) {
      if (c != 2)
        throw InconsistentArcs("label " + std::to_string(label) + " appears " + std::to_string(c) +
                               " times");
      remap[label] = next++;
    }
    for (auto& x : crossings)
      for (int& a : x) a = remap[a];
  }

  // Orientation propagation.  Node i < n is crossing i's over_fwd variable;
  // node n is ground (value 0).
  const int ground = n;
  ParityDsu dsu(n + 1);
  std::vector<std::vector<std::pair<int, int>>> ends(2 * n + 1);  // label -> {crossing, slot}
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) ends[crossings[c][s]].push_back({c, s});

  auto add_arc_constraint = [&](int label) -> bool {
    auto [c1, s1] = ends[label][0];
    auto [c2, s2] = ends[label][1];
    SlotStatus a = kSlotStatus[s1], b = kSlotStatus[s2];
    // status(e1) xor status(e2) == 1
    uint8_t rhs = 1 ^ a.cst ^ b.cst;
    int na = a.dep ? c1 : ground;
    int nb = b.dep ? c2 : ground;
    return dsu.unite(na, nb, rhs);
  };
  for (int label = 1; label <= 2 * n; ++label)
    if (!add_arc_constraint(label))
      throw OrientationConflict("arc " + std::to_string(label) + " admits no strand orientation");

  // Fix remaining free components.  Prefer the assignment under which more
  // over-passes run from arc l to arc l+1 (increasing labels); this matches
  // the usual sequential labeling of census PD codes.
  for (int c = 0; c < n; ++c) {
    auto [r, p] = dsu.find(c);
    auto [rg, pg] = dsu.find(ground);
    if (r == rg) continue;
    int score_fwd = 0;  // score for over_fwd(c') consistent with value v at c
    int score_bwd = 0;
    for (int c2 = 0; c2 < n; ++c2) {
      auto [r2, p2] = dsu.find(c2);
      if (r2 != r) continue;
      // over_fwd(c2) equals (value at c) xor p xor p2
      int b = crossings[c2][1], d = crossings[c2][3];
      bool inc_fwd = (d == b + 1);
      bool inc_bwd = (b == d + 1);
      uint8_t rel = static_cast<uint8_t>(p ^ p2);
      if ((rel == 0 && inc_fwd) || (rel == 1 && inc_bwd)) score_fwd++;
      if ((rel == 0 && inc_bwd) || (rel == 1 && inc_fwd)) score_bwd++;
    }
    dsu.unite(c, ground, score_bwd > score_fwd ? 0 : 1);
  }

  LinkDiagram out;
  out.name = std::move(name);
  out.crossings.resize(n);
  for (int c = 0; c < n; ++c) {
    auto [r, p] = dsu.find(c);
    auto [rg, pg] = dsu.find(ground);
    bool fwd = static_cast<bool>(p ^ pg);
    out.crossings[c].arc = crossings[c];
    out.crossings[c].over_fwd = fwd;
    out.crossings[c].sign = fwd ? +1 : -1;
    (fwd ? out.n_plus : out.n_minus)++;
  }

  // Components: orbits of arcs under strand-following.
  ParityDsu comp(2 * n + 1);
  for (auto& x : out.crossings) {
    comp.unite(x.arc[0], x.arc[2], 0);
    comp.unite(x.arc[1], x.arc[3], 0);
  }
  std::vector<char> seen(2 * n + 1, 0);
  for (int a = 1; a <= 2 * n; ++a) {
    auto [r, p] = comp.find(a);
    if (!seen[r]) {
      seen[r] = 1;
      out.components++;
    }
  }
  return out;
}

}  // namespace detail

LinkDiagram parse_pd(const std::string& text) {
  // Tokenless scan: find "PD[", then X(a,b,c,d) terms separated by
  // whitespace or commas.
  size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto skip_sep = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_space();
  if (text.compare(i, 6, "UNKNOT") == 0) {
    i += 6;
    skip_space();
    if (i != text.size()) throw MalformedSyntax("trailing input after UNKNOT");
    return detail::finalize_diagram({{{1, 1, 2, 2}}}, "unknot");
  }
  if (text.compare(i, 3, "PD[") != 0) throw MalformedSyntax("expected PD[");
  i += 3;
  std::vector<std::array<int, 4>> crossings;
  for (;;) {
    skip_sep();
    if (i < text.size() && text[i] == ']') {
      ++i;
      break;
    }
    if (text.compare(i, 2, "X(") != 0) throw MalformedSyntax("expected X( at offset " + std::to_string(i));
    i += 2;
    std::array<int, 4> arcs{};
    for (int k = 0; k < 4; ++k) {
      skip_space();
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw MalformedSyntax("expected integer at offset " + std::to_string(i));
      arcs[k] = std::stoi(text.substr(start, i - start));
      skip_space();
      if (k < 3) {
        if (i >= text.size() || text[i] != ',') throw MalformedSyntax("expected ,");
        ++i;
      }
    }
    if (i >= text.size() || text[i] != ')') throw MalformedSyntax("expected )");
    ++i;
    crossings.push_back(arcs);
  }
  skip_space();
  if (i != text.size()) throw MalformedSyntax("trailing input after ]");
  if (crossings.empty()) throw MalformedSyntax("PD[] has no crossings");
  return detail::finalize_diagram(std::move(crossings), "");
}

namespace {

// Face count of the 4-valent graph under the rotation system chosen by chi.
// Slot sequences (counterclockwise): chi=0: odd_in, even_in, odd_out, even_out;
// chi=1: odd_in, even_out, odd_out, even_in.
struct DtRealization {
  int n;
  std::vector<int> even_time;  // crossing -> even visit time
  std::vector<int> crossing_at_time;

  explicit DtRealization(const std::vector<int>& code) : n(static_cast<int>(code.size())) {
    even_time.resize(n);
    crossing_at_time.assign(2 * n + 1, -1);
    for (int k = 0; k < n; ++k) {
      int e = std::abs(code[k]);
      even_time[k] = e;
      crossing_at_time[2 * k + 1] = k;
      crossing_at_time[e] = k;
    }
  }

  // Dart id for (crossing, slot position).
  static int dart(int c, int s) { return 4 * c + s; }

  // For arc t (1..2n), the two dart endpoints given chi.
  // Arc t runs from visit t to visit t+1.
  void arc_darts(int t, uint32_t chi, int& tail, int& head) const {
    int ct = crossing_at_time[t];
    bool t_odd = (t & 1) != 0;
    int out_slot = t_odd ? 2 : (((chi >> ct) & 1) ? 1 : 3);
    tail = dart(ct, out_slot);
    int t2 = t == 2 * n ? 1 : t + 1;
    int cn = crossing_at_time[t2];
    bool n_odd = (t2 & 1) != 0;
    int in_slot = n_odd ? 0 : (((chi >> cn) & 1) ? 3 : 1);
    head = dart(cn, in_slot);
  }

  bool planar(uint32_t chi) const {
    // alpha: involution over arcs; faces = orbits of sigma(alpha(d)).
    std::vector<int> alpha(4 * n, -1);
    for (int t = 1; t <= 2 * n; ++t) {
      int a, b;
      arc_darts(t, chi, a, b);
      alpha[a] = b;
      alpha[b] = a;
    }
    std::vector<char> seen(4 * n, 0);
    int faces = 0;
    for (int d0 = 0; d0 < 4 * n; ++d0) {
      if (seen[d0]) continue;
      ++faces;
      int d = d0;
      do {
        seen[d] = 1;
        int e = alpha[d];
        d = (e & ~3) | ((e + 1) & 3);  // counterclockwise next slot
      } while (d != d0);
    }
    return faces == n + 2;
  }
};

}  // namespace

LinkDiagram parse_dt(const std::string& text) {
  std::vector<int> code;
  {
    std::string cleaned = text;
    for (char& ch : cleaned)
      if (ch == ',') ch = ' ';
    std::istringstream ss(cleaned);
    std::string tok;
    while (ss >> tok) {
      try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        code.push_back(v);
      } catch (const std::exception&) {
        throw MalformedSyntax("bad DT token '" + tok + "'");
      }
    }
  }
  const int n = static_cast<int>(code.size());
  if (n == 0) throw MalformedSyntax("empty DT code");
  if (n > 24) throw TooLarge("DT code with " + std::to_string(n) + " crossings");
  std::vector<char> used(2 * n + 1, 0);
  for (int v : code) {
    int a = std::abs(v);
    if (a % 2 != 0 || a < 2 || a > 2 * n || used[a])
      throw MalformedSyntax("DT entry " + std::to_string(v));
    used[a] = 1;
  }

  DtRealization real(code);
  uint32_t chi = 0;
  bool found = false;
  for (uint32_t c = 0; c < (1u << n); ++c)
    if (real.planar(c)) {
      chi = c;
      found = true;
      break;
    }
  if (!found) throw NotRealizable("DT code admits no planar embedding");

  // Slot labels per crossing under the chosen rotation.
  std::vector<std::array<int, 4>> slots(n, {0, 0, 0, 0});
  for (int t = 1; t <= 2 * n; ++t) {
    int tail, head;
    real.arc_darts(t, chi, tail, head);
    slots[tail >> 2][tail & 3] = t;
    slots[head >> 2][head & 3] = t;
  }
  // Rotate each crossing's slot cycle to start at the incoming under-strand.
  std::vector<std::array<int, 4>> pd(n);
  for (int k = 0; k < n; ++k) {
    bool odd_under = code[k] > 0;
    int start;
    if (odd_under)
      start = 0;  // odd_in
    else
      start = ((chi >> k) & 1) ? 3 : 1;  // even_in
    for (int s = 0; s < 4; ++s) pd[k][s] = slots[k][(start + s) & 3];
  }
  return detail::finalize_diagram(std::move(pd), "");
}

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<std::array<int, 4>> crossings;
  crossings.reserve(d.n());
  for (const auto& x : d.crossings) {
    if (x.over_fwd)
      crossings.push_back({x.arc[1], x.arc[2], x.arc[3], x.arc[0]});
    else
      crossings.push_back({x.arc[3], x.arc[0], x.arc[1], x.arc[2]});
  }
  return detail::finalize_diagram(std::move(crossings), d.name);
}

std::string to_pd_string(const LinkDiagram& d) {
  std::string s = "PD[";
  for (int c = 0; c < d.n(); ++c) {
    if (c) s += " ";
    s += "X(" + std::to_string(d.crossings[c].arc[0]) + "," + std::to_string(d.crossings[c].arc[1]) +
         "," + std::to_string(d.crossings[c].arc[2]) + "," + std::to_string(d.crossings[c].arc[3]) +
         ")";
  }
  s += "]";
  return s;
}

}  // namespace khst
