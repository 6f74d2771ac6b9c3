#include "khst/steenrod.hpp"

#include <algorithm>
#include <cstdlib>
#include <cassert>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

namespace khst {

int64_t g_sq2_ladybug_invocations = 0;
int g_class_base = 1;       // calibration knob: constant-framed circle class
int g_count_equal = 1;      // calibration knob: twist on equal vs unequal arcs
int g_interval_twist = 0;   // calibration knob: extra half-twist per interval
int g_skip_output_check = 0;
int g_bockstein_term = 0;
// Full-twist rule for the interval of a face u -> u+2^k+2^l (k<l) as a
// function of (a,b) = (edge sign at (u,k), edge sign at (u,l)).
// frame of a broken flow as a function of its two edge signs; bit i of the
// truth table for (s1,s2) = (i&1, i>>1)
int g_sigma_rule = [] {
  if (const char* e = std::getenv("KHST_SIGMA_RULE")) return std::atoi(e);
  return 1;  // include the boundary shuffle bit
}();
int g_tau_rule = [] {
  if (const char* e = std::getenv("KHST_TAU_RULE")) return std::atoi(e);
  return 0;
}();  // 0: none, 1: !a&b, 2: a&!b, 3: a&b, 4: a|b
// cap contribution rule for same-sign pairs at a y-cell
int g_cap_rule = [] {
  if (const char* e = std::getenv("KHST_CAP_RULE")) return std::atoi(e);
  return 0;
}();
// matching style: 0 = consecutive in generator order, 1 = sign-structured
int g_match_rule = [] {
  if (const char* e = std::getenv("KHST_MATCH_RULE")) return std::atoi(e);
  return 1;
}();

namespace {

// a broken flow x -> y -> z for a fixed z
struct Flow {
  int x, y;        // generator indices at degree i and i+1
  int arc_mate;    // index of the flow (mu_y(x), y) within the same z-bucket
  int ivl_mate;    // interval partner from the 1-manifold structure
  uint8_t s1;      // sign of the first edge, possibly corrupted
  uint8_t sigma;   // frame bit of the broken flow
  uint8_t tag_neq; // arc tag: s1 differs from the mate's s1
};

struct EvalContext {
  const Cube& cube;
  const GradedComplex& slice;
  int i;
  const Sq2Options& opt;

  // per-y data, fixed once per cocycle evaluation
  struct YData {
    std::vector<int> xs;       // support generators flowing into y (even count)
    std::vector<int> mate;     // pairing within xs (indices into xs)
    std::vector<uint8_t> s1;   // edge sign of x -> y
    std::vector<char> cap;     // pair is a same-sign cap through the Moore cell
  };
  std::unordered_map<int, YData> ys;

  std::unordered_map<uint64_t, Cube::LadybugMatching> ladybug_cache;

  int sign_of_edge(Vertex u, int k) const {
    int s = Cube::edge_sign(u, k);
    if (opt.corrupt_edge >= 0 && static_cast<int64_t>(u) * 32 + k == opt.corrupt_edge) s ^= 1;
    return s;
  }
};

int flip_bit(Vertex a, Vertex b) { return __builtin_ctz(a ^ b); }

// Gather the per-y support data; throws NotACocycle on odd counts.
void build_y_data(EvalContext& ctx, const F2Vector& cocycle) {
  const auto& rows = ctx.slice.differential(ctx.i);
  const auto& gi = ctx.slice.generators(ctx.i);
  const auto& gi1 = ctx.slice.generators(ctx.i + 1);
  cocycle.for_each_set([&](int x) {
    for (const auto& e : rows[x]) {
      auto& yd = ctx.ys[e.target];
      yd.xs.push_back(x);
      yd.s1.push_back(static_cast<uint8_t>(
          ctx.sign_of_edge(gi[x].v, flip_bit(gi[x].v, gi1[e.target].v))));
    }
  });
  for (auto& [y, yd] : ctx.ys) {
    size_t m = yd.xs.size();
    if (m % 2 != 0) throw NotACocycle("support does not close up at degree i+1");
    yd.mate.resize(m);
    yd.cap.assign(m, 0);
    std::vector<int> order(m);
    for (size_t t = 0; t < m; ++t) order[t] = static_cast<int>(t);
    if (ctx.opt.matching_shuffle_seed != 0) {
      // a per-y deterministic shuffle derived from the seed and y
      std::mt19937_64 local(ctx.opt.matching_shuffle_seed * 0x9e3779b97f4a7c15ull + y);
      std::shuffle(order.begin(), order.end(), local);
    }
    if (g_match_rule == 0) {
      for (size_t t = 0; t < m; t += 2) {
        yd.mate[order[t]] = order[t + 1];
        yd.mate[order[t + 1]] = order[t];
      }
    } else {
      // sign-structured matching: pair opposite signs first (parenthesis
      // nesting in the chosen order), remaining same-sign points pair
      // consecutively as caps through the Moore cell
      std::vector<int> stack_pos, stack_neg;
      std::vector<int> caps_pending;
      std::vector<char> used(m, 0);
      // nested opposite-sign matching
      for (size_t t = 0; t < m; ++t) {
        int p = order[t];
        if (yd.s1[p] == 0) {
          stack_pos.push_back(p);
        } else if (!stack_pos.empty()) {
          int q = stack_pos.back();
          stack_pos.pop_back();
          yd.mate[p] = q;
          yd.mate[q] = p;
          used[p] = used[q] = 1;
        } else {
          stack_neg.push_back(p);
        }
      }
      // leftover positives may still cancel later negatives handled above;
      // everything left in the stacks is same-signed excess
      std::vector<int> rest;
      for (size_t t = 0; t < m; ++t)
        if (!used[order[t]]) rest.push_back(order[t]);
      // pair remaining opposite signs first (positives left before negatives
      // cannot happen after the scan, but keep it safe), then same-sign caps
      for (size_t a = 0; a + 1 < rest.size(); a += 2) {
        int p = rest[a], q = rest[a + 1];
        yd.mate[p] = q;
        yd.mate[q] = p;
        int cap = (yd.s1[p] == yd.s1[q]) ? 1 : 0;
        yd.cap[p] = yd.cap[q] = static_cast<char>(cap);
      }
    }
  }
}

int tau_of(int a, int b) {
  switch (g_tau_rule) {
    case 1: return (!a && b) ? 1 : 0;
    case 2: return (a && !b) ? 1 : 0;
    case 3: return (a && b) ? 1 : 0;
    case 4: return (a || b) ? 1 : 0;
    default: return 0;
  }
}

// Interval matching for the flows of one source x into one target z.
// Flows arrive grouped by intermediate vertex; sizes (1,1) pair across, and
// the ladybug case (2,2) pairs via the distinguished circle bijection.
// Returns the total full-twist contribution of the new intervals.
int match_intervals(EvalContext& ctx, std::vector<Flow>& flows, const std::vector<int>& idx) {
  const auto& gi = ctx.slice.generators(ctx.i);
  const auto& gi1 = ctx.slice.generators(ctx.i + 1);
  Vertex u = gi[flows[idx[0]].x].v;
  {
    // full twists of the moduli intervals over this face
  }
  std::array<int, 4> via{};
  int nvia = 0;
  Vertex v1 = 0;
  for (int t : idx) {
    Vertex vy = gi1[flows[t].y].v;
    if (nvia == 0 || vy == v1) {
      if (nvia == 0) v1 = vy;
      via[nvia++] = t;  // collect v1 flows first
    }
  }
  if (static_cast<size_t>(nvia) == idx.size())
    throw Error("sq2: flows through a single intermediate vertex");

  std::array<int, 4> other{};
  int nother = 0;
  for (int t : idx) {
    Vertex vy = gi1[flows[t].y].v;
    if (vy != v1) other[nother++] = t;
  }

  Vertex vlow = gi1[flows[via[0]].y].v;
  Vertex vhigh = gi1[flows[other[0]].y].v;
  int kk = flip_bit(u, vlow), ll = flip_bit(u, vhigh);
  int klo2 = std::min(kk, ll), khi2 = std::max(kk, ll);
  int tau = tau_of(ctx.sign_of_edge(u, klo2), ctx.sign_of_edge(u, khi2));
  if (nvia == 1 && nother == 1) {
    flows[via[0]].ivl_mate = other[0];
    flows[other[0]].ivl_mate = via[0];
    return tau;
  }
  if (nvia != 2 || nother != 2) throw Error("sq2: unexpected flow multiplicity on a face");

  // ladybug: pair the X-circle of each v1 flow with its matched circle
  int k = flip_bit(u, v1);
  Vertex v2 = gi1[flows[other[0]].y].v;
  int l = flip_bit(u, v2);
  int klo = std::min(k, l), khi = std::max(k, l);
  uint64_t key = (static_cast<uint64_t>(u) << 10) | (klo << 5) | khi;
  ++g_sq2_ladybug_invocations;
  auto it = ctx.ladybug_cache.find(key);
  if (it == ctx.ladybug_cache.end()) {
    auto m = ctx.cube.ladybug_matching(u, klo, khi, ctx.opt.convention);
    it = ctx.ladybug_cache.emplace(key, m).first;
  }
  const auto& m = it->second;

  Cube::Edge ek, el;
  ctx.cube.edge(u, k, ek);
  ctx.cube.edge(u, l, el);
  auto x_circle = [&](const Cube::Edge& e, uint32_t mask) -> uint8_t {
    bool b1 = (mask >> e.s_dst1) & 1, b2 = (mask >> e.s_dst2) & 1;
    if (b1 == b2) throw Error("sq2: ladybug flow labels inconsistent");
    return b1 ? e.s_dst1 : e.s_dst2;
  };
  // matching pairs are (circle in resolve(u|1<<klo), circle in resolve(u|1<<khi))
  auto mate_of = [&](uint8_t c_lo) -> uint8_t {
    if (m.pairs[0].first == c_lo) return m.pairs[0].second;
    if (m.pairs[1].first == c_lo) return m.pairs[1].second;
    throw Error("sq2: ladybug matching missed a circle");
  };
  const Cube::Edge& e_lo = (k == klo) ? ek : el;
  const Cube::Edge& e_hi = (k == klo) ? el : ek;
  std::array<int, 2> lo_flows{}, hi_flows{};
  if (k == klo) {
    lo_flows = {via[0], via[1]};
    hi_flows = {other[0], other[1]};
  } else {
    lo_flows = {other[0], other[1]};
    hi_flows = {via[0], via[1]};
  }
  for (int a = 0; a < 2; ++a) {
    uint8_t c_lo = x_circle(e_lo, gi1[flows[lo_flows[a]].y].x_mask);
    uint8_t want = mate_of(c_lo);
    int mate = -1;
    for (int b = 0; b < 2; ++b)
      if (x_circle(e_hi, gi1[flows[hi_flows[b]].y].x_mask) == want) mate = hi_flows[b];
    if (mate < 0) throw Error("sq2: ladybug matching failed to pair");
    flows[lo_flows[a]].ivl_mate = mate;
    flows[mate].ivl_mate = lo_flows[a];
  }
  return 2 * tau;  // two intervals over the ladybug face
}

// Count the framed-circle classes of the glued 1-manifold over z; returns
// the F2 coefficient.  The moduli intervals are untwisted (their endpoint
// frames are opposite by the face sign rule); a boundary arc needs a
// half-twist exactly when its endpoint frames agree.  A circle assembled
// without twists carries the constant framing, which is the Lie framing.
int circle_count_classes(std::vector<Flow>& flows) {
  int coeff = 0;
  std::vector<char> used(flows.size(), 0);
  for (size_t start = 0; start < flows.size(); ++start) {
    if (used[start]) continue;
    int half_twists = 0;
    int cur = static_cast<int>(start);
    do {
      // traverse interval edge then arc edge
      used[cur] = 1;
      half_twists += g_interval_twist;
      int nxt = flows[cur].ivl_mate;
      used[nxt] = 1;
      if (g_count_equal)
        half_twists += flows[nxt].tag_neq ? 0 : 1;
      else
        half_twists += flows[nxt].tag_neq ? 1 : 0;
      cur = flows[nxt].arc_mate;
    } while (cur != static_cast<int>(start));
    if (half_twists % 2 != 0) throw Error("sq2: frame parity broken around a circle");
    coeff ^= g_class_base ^ ((half_twists / 2) & 1);
  }
  return coeff;
}

F2Vector sq2_eval(EvalContext& ctx, const F2Vector& cocycle, std::ostringstream* dump) {
  const auto& slice = ctx.slice;
  const int i = ctx.i;
  F2Vector out(slice.dim(i + 2));
  if (slice.dim(i + 2) == 0 || i + 1 > slice.i_max) return out;
  if (!apply_diff_f2(slice, i, cocycle).is_zero()) throw NotACocycle("sq2 input");

  build_y_data(ctx, cocycle);

  // bucket flows by target z
  std::unordered_map<int, std::vector<Flow>> buckets;
  std::unordered_map<int, int> extra;  // z -> correction bits
  const auto& gi_ = slice.generators(i + 1);
  const auto& gi2_ = slice.generators(i + 2);
  const auto& rows1 = slice.differential(i + 1);
  for (auto& [y, yd] : ctx.ys) {
    // integral half-degree of the lifted cocycle at y
    int kplus = 0, kminus = 0;
    for (auto s : yd.s1) (s ? kminus : kplus)++;
    int m_y = (kplus - kminus) / 2;          // d_y = 2 m_y
    int eps = m_y & 1;                        // bockstein cochain value at y
    int khalf = ((kplus + kminus) / 2) & 1;   // k_y/2 mod 2
    for (const auto& e : rows1[y]) {
      int s2 = ctx.sign_of_edge(gi_[y].v, flip_bit(gi_[y].v, gi2_[e.target].v));
      int add = 0;
      switch (g_bockstein_term) {
        case 1: add = eps & s2; break;
        case 2: add = eps & (1 ^ s2); break;
        case 3: add = khalf & s2; break;
        case 4: add = khalf & (1 ^ s2); break;
        case 5: add = (kminus & 1) & s2; break;
        case 6: add = (kminus & 1) & (1 ^ s2); break;
        default: break;
      }
      if (add) extra[e.target] ^= 1;
      auto& bucket = buckets[e.target];
      int base = static_cast<int>(bucket.size());
      int bit2 = flip_bit(gi_[y].v, gi2_[e.target].v);
      for (size_t t = 0; t < yd.xs.size(); ++t) {
        int bit1 = flip_bit(ctx.slice.generators(ctx.i)[yd.xs[t]].v, gi_[y].v);
        int chi = (bit1 < bit2) ? 1 : 0;
        uint8_t sg = (yd.s1[t] ^ s2 ^ (g_sigma_rule ? chi : 0)) & 1;
        uint8_t twist;
        if (g_match_rule == 0) {
          twist = static_cast<uint8_t>(yd.s1[t] == yd.s1[yd.mate[t]]);
        } else {
          switch (g_cap_rule) {
            case 0: twist = yd.cap[t]; break;                        // caps twist
            case 1: twist = yd.cap[t] && yd.s1[t] == 0; break;       // positive caps
            case 2: twist = yd.cap[t] && yd.s1[t] == 1; break;       // negative caps
            default: twist = 0; break;                               // caps flat
          }
        }
        bucket.push_back({yd.xs[t], y, base + yd.mate[t], -1, yd.s1[t], sg, twist});
      }
    }
  }
  for (auto& [z, bit] : extra)
    if (bit) out.flip(z);

  for (auto& [z, flows] : buckets) {
    // group by source x and match intervals
    std::map<int, std::vector<int>> by_x;
    for (size_t t = 0; t < flows.size(); ++t) by_x[flows[t].x].push_back(static_cast<int>(t));
    int tau_total = 0;
    for (auto& [x, idx] : by_x) tau_total ^= match_intervals(ctx, flows, idx) & 1;
    int coeff = circle_count_classes(flows) ^ tau_total;
    if (coeff) out.set(z, true);
    if (dump) {
      *dump << "z " << z << " flows " << flows.size() << " coeff " << coeff << "\n";
      for (auto& f : flows)
        *dump << "  x " << f.x << " y " << f.y << " s1 " << int(f.s1) << " ivl " << f.ivl_mate
              << " arc " << f.arc_mate << "\n";
    }
  }

  if (!g_skip_output_check && i + 2 < slice.i_max && !apply_diff_f2(slice, i + 2, out).is_zero())
    throw Error("sq2 output is not a cocycle");
  return out;
}

}  // namespace

F2Vector sq2_chain(const Cube& cube, const GradedComplex& slice, int i, const F2Vector& cocycle,
                   const Sq2Options& opt) {
  EvalContext ctx{cube, slice, i, opt};
  return sq2_eval(ctx, cocycle, nullptr);
}

std::string dump_sq2_evaluation(const Cube& cube, const GradedComplex& slice, int i,
                                const F2Vector& cocycle, const Sq2Options& opt) {
  EvalContext ctx{cube, slice, i, opt};
  std::ostringstream os;
  os << "# sq2 evaluation at i=" << i << " j=" << slice.j << "\n";
  sq2_eval(ctx, cocycle, &os);
  return os.str();
}

OpMatrix sq2(const Cube& cube, const GradedComplex& slice, const CohomologyBasis& src,
             const CohomologyBasis& dst, const Sq2Options& opt) {
  assert(dst.i() == src.i() + 2 && dst.j() == src.j());
  OpMatrix op;
  op.i_src = src.i();
  op.i_dst = dst.i();
  op.j = slice.j;
  op.m = F2Matrix(dst.dim(), src.dim());
  for (int c = 0; c < src.dim(); ++c) {
    F2Vector img = sq2_chain(cube, slice, src.i(), src.representatives()[c], opt);
    F2Vector cls = dst.project(img);
    for (int r = 0; r < dst.dim(); ++r)
      if (cls.get(r)) op.m.set(r, c, true);
  }
  return op;
}

Sq2VerifyReport verify_sq2_welldefined(const Cube& cube, const GradedComplex& slice,
                                       const CohomologyBasis& src, const CohomologyBasis& dst,
                                       int trials, uint64_t seed, const Sq2Options& opt) {
  Sq2VerifyReport report;
  report.trials = trials;
  F2Matrix base;
  try {
    base = sq2(cube, slice, src, dst, opt).m;
  } catch (const Error& e) {
    report.violations = trials;
    report.notes.push_back(std::string("base evaluation failed: ") + e.what());
    return report;
  }
  std::mt19937_64 rng(seed);
  int i = src.i();
  int dim_prev = (i - 1 >= slice.i_min) ? slice.dim(i - 1) : 0;
  for (int t = 0; t < trials; ++t) {
    Sq2Options o = opt;
    o.matching_shuffle_seed = rng() | 1;
    bool bad = false;
    for (int c = 0; c < src.dim() && !bad; ++c) {
      F2Vector rep = src.representatives()[c];
      if (dim_prev > 0) {
        F2Vector b(dim_prev);
        for (int s = 0; s < dim_prev; ++s)
          if (rng() & 1) b.set(s, true);
        rep ^= apply_diff_f2(slice, i - 1, b);
      }
      try {
        F2Vector cls = dst.project(sq2_chain(cube, slice, i, rep, o));
        for (int r = 0; r < dst.dim(); ++r)
          if (cls.get(r) != base.get(r, c)) bad = true;
      } catch (const Error& e) {
        bad = true;
        if (report.notes.size() < 8) report.notes.push_back(e.what());
      }
    }
    if (bad) report.violations++;
  }
  return report;
}

}  // namespace khst
