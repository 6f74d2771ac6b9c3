#include "khst/cube.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <queue>

namespace khst {

namespace {

// 0-smoothing joins slots 0-3 and 1-2; 1-smoothing joins 0-1 and 2-3.
inline int partner_slot(int slot, int bit) {
  static constexpr int p0[4] = {3, 2, 1, 0};
  static constexpr int p1[4] = {1, 0, 3, 2};
  return bit ? p1[slot] : p0[slot];
}

}  // namespace

Cube::Cube(const LinkDiagram& d) : diagram_(d) {
  const int n = diagram_.n();
  if (n > 22) throw TooLarge("cube with " + std::to_string(n) + " crossings");

  arc_ends_.assign(2 * n + 1, {});
  {
    std::vector<int> found(2 * n + 1, 0);
    for (int c = 0; c < n; ++c)
      for (int s = 0; s < 4; ++s) {
        int a = diagram_.crossings[c].arc[s];
        arc_ends_[a][found[a]++] = {c, s};
      }
  }

  // Original diagram faces as orbits of corners.  Corner j of a crossing is
  // the region between slots j and j+1.  Crossing the arc at slot j+1 and
  // arriving at slot s2 of the far crossing lands in corner s2 there.
  corner_face_.assign(4 * n, -1);
  for (int start = 0; start < 4 * n; ++start) {
    if (corner_face_[start] >= 0) continue;
    int id = num_orig_faces_++;
    int cur = start;
    do {
      corner_face_[cur] = id;
      int c = cur >> 2, j = cur & 3;
      int slot = (j + 1) & 3;
      int arc = diagram_.crossings[c].arc[slot];
      auto& e = arc_ends_[arc];
      auto other = (e[0][0] == c && e[0][1] == slot) ? e[1] : e[0];
      cur = 4 * other[0] + other[1];
    } while (cur != start);
  }

  // Planarity: V - E + F = 1 + #graph-components on the sphere.
  {
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (int a = 1; a <= 2 * n; ++a) uf[find(arc_ends_[a][0][0])] = find(arc_ends_[a][1][0]);
    int comps = 0;
    for (int i = 0; i < n; ++i)
      if (find(i) == i) ++comps;
    planar_ = (num_orig_faces_ == n + 1 + comps);
  }

  // Trace every resolution.
  const size_t stride = 2 * n + 1;
  circles_flat_.assign((size_t{1} << n) * stride, kNoCircle);
  counts_.assign(size_t{1} << n, 0);
  for (Vertex v = 0; v < num_vertices(); ++v) {
    uint8_t* circ = circles_flat_.data() + static_cast<size_t>(v) * stride;
    int count = 0;
    for (int a0 = 1; a0 <= 2 * n; ++a0) {
      if (circ[a0] != kNoCircle) continue;
      int id = count++;
      if (count > kMaxCircles) throw TooLarge("resolution with > 32 circles");
      int arc = a0, head = 0;
      do {
        circ[arc] = static_cast<uint8_t>(id);
        auto [c, s] = arc_ends_[arc][head];
        int s2 = partner_slot(s, (v >> c) & 1);
        int next = diagram_.crossings[c].arc[s2];
        auto& e = arc_ends_[next];
        head = (e[0][0] == c && e[0][1] == s2) ? 1 : 0;
        arc = next;
      } while (!(arc == a0 && head == 0));
    }
    counts_[v] = static_cast<uint8_t>(count);
  }
}

std::vector<Cube::DirectedArc> Cube::trace_circle(Vertex v, int arc0, int head0) const {
  std::vector<DirectedArc> out;
  int arc = arc0, head = head0;
  do {
    out.push_back({arc, head});
    auto [c, s] = arc_ends_[arc][head];
    int s2 = partner_slot(s, (v >> c) & 1);
    int next = diagram_.crossings[c].arc[s2];
    auto& e = arc_ends_[next];
    head = (e[0][0] == c && e[0][1] == s2) ? 1 : 0;
    arc = next;
  } while (!(arc == arc0 && head == head0));
  return out;
}

void Cube::edge(Vertex u, int k, Edge& out) const {
  if (k < 0 || k >= n() || ((u >> k) & 1))
    throw NotAnEdge("vertex " + std::to_string(u) + " bit " + std::to_string(k));
  Vertex w = u | (Vertex{1} << k);
  auto ru = resolve(u), rw = resolve(w);
  const auto& X = diagram_.crossings[k].arc;
  uint8_t ca = ru.circle_of_arc[X[0]], cb = ru.circle_of_arc[X[1]];

  out.src_to_dst.fill(kNoCircle);
  for (int a = 1; a <= 2 * n(); ++a) {
    uint8_t s = ru.circle_of_arc[a];
    if (out.src_to_dst[s] == kNoCircle) out.src_to_dst[s] = rw.circle_of_arc[a];
  }
  if (ca != cb) {
    out.is_merge = true;
    out.m_src1 = std::min(ca, cb);
    out.m_src2 = std::max(ca, cb);
    out.m_dst = rw.circle_of_arc[X[0]];
    out.src_to_dst[ca] = out.src_to_dst[cb] = out.m_dst;
  } else {
    out.is_merge = false;
    out.s_src = ca;
    out.s_dst1 = rw.circle_of_arc[X[0]];  // side of the new a-b pass
    out.s_dst2 = rw.circle_of_arc[X[2]];  // side of the new c-d pass
    out.src_to_dst[ca] = kNoCircle;
    // A self-surgery that does not split only happens for non-planar input.
    if (out.s_dst1 == out.s_dst2)
      throw Error("circle count unchanged along a cube edge: diagram is not planar");
  }
}

Cube::Face Cube::classify_face(Vertex u, int k, int l) const {
  if (k == l) throw NotAFace("equal coordinates");
  Face f{};
  edge(u, k, f.first_k);
  edge(u, l, f.first_l);
  edge(u | (Vertex{1} << k), l, f.then_l);
  edge(u | (Vertex{1} << l), k, f.then_k);
  bool mk = f.first_k.is_merge, ml = f.first_l.is_merge;
  if (mk && ml) {
    f.kind = f.then_l.is_merge ? FaceKind::TwoMerges : FaceKind::MergeThenSplit;
  } else if (!mk && !ml) {
    if (f.then_l.is_merge) {
      f.kind = FaceKind::Ladybug;
      assert(f.first_k.s_src == f.first_l.s_src);
    } else {
      f.kind = FaceKind::TwoSplits;
    }
  } else {
    uint8_t z = mk ? f.first_l.s_src : f.first_k.s_src;
    uint8_t a = mk ? f.first_k.m_src1 : f.first_l.m_src1;
    uint8_t b = mk ? f.first_k.m_src2 : f.first_l.m_src2;
    f.kind = (z == a || z == b) ? FaceKind::SplitThenMerge : FaceKind::Disjoint;
  }
  return f;
}

struct RegionData {
  std::vector<int> parent;
  std::vector<int> depth;
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

void Cube::compute_regions(Vertex u, RegionData& out) const {
  const int n = this->n();
  out.parent.resize(num_orig_faces_);
  for (int i = 0; i < num_orig_faces_; ++i) out.parent[i] = i;
  auto unite = [&](int a, int b) { out.parent[out.find(a)] = out.find(b); };
  for (int c = 0; c < n; ++c) {
    if ((u >> c) & 1)
      unite(corner_face_[4 * c + 1], corner_face_[4 * c + 3]);
    else
      unite(corner_face_[4 * c + 0], corner_face_[4 * c + 2]);
  }
  std::vector<std::vector<int>> adj(num_orig_faces_);
  for (int a = 1; a <= 2 * n; ++a) {
    auto [c, s] = arc_ends_[a][1];
    int left = out.find(corner_face_[4 * c + ((s + 3) & 3)]);
    int right = out.find(corner_face_[4 * c + s]);
    adj[left].push_back(right);
    adj[right].push_back(left);
  }
  out.depth.assign(num_orig_faces_, -1);
  int outer = out.find(corner_face_[0]);
  out.depth[outer] = 0;
  std::queue<int> bfs;
  bfs.push(outer);
  while (!bfs.empty()) {
    int r = bfs.front();
    bfs.pop();
    for (int t : adj[r])
      if (out.depth[t] < 0) {
        out.depth[t] = out.depth[r] + 1;
        bfs.push(t);
      }
  }
}

Cube::LadybugMatching Cube::ladybug_matching(Vertex u, int k, int l,
                                             LadybugConvention conv) const {
  Face f = classify_face(u, k, l);
  if (f.kind != FaceKind::Ladybug) throw NotAFace("not a ladybug face");

  const int n = this->n();
  RegionData reg;
  compute_regions(u, reg);
  auto find = [&](int x) { return reg.find(x); };
  auto& depth = reg.depth;
  auto ru = resolve(u);

  // Canonical direction of the splitting circle Z: smaller-depth side on the
  // right of the traversal.
  uint8_t zid = f.first_k.s_src;
  int start_arc = 0;
  for (int a = 1; a <= 2 * n && !start_arc; ++a)
    if (ru.circle_of_arc[a] == zid) start_arc = a;
  auto walk = trace_circle(u, start_arc, 1);
  {
    auto [c, s] = arc_ends_[walk[0].arc][walk[0].head_end];
    int left = find(corner_face_[4 * c + ((s + 3) & 3)]);
    int right = find(corner_face_[4 * c + s]);
    if (left == right) throw Error("ladybug matching needs a planar diagram");
    if (depth[right] > depth[left]) {
      std::reverse(walk.begin(), walk.end());
      for (auto& da : walk) da.head_end ^= 1;
    }
  }

  // Pass events of Z through k and l, in traversal order.
  struct Event {
    int pos;       // index into walk: event follows walk[pos]
    int crossing;  // k or l
    int in_slot;
  };
  std::vector<Event> events;
  for (int i = 0; i < static_cast<int>(walk.size()); ++i) {
    auto [c, s] = arc_ends_[walk[i].arc][walk[i].head_end];
    if (c == k || c == l) events.push_back({i, c, s});
  }
  if (events.size() != 4) throw Error("ladybug trace: expected 4 passes");

  // A crossing is on the inner side of Z iff its center region lies to the
  // left of the canonical traversal.
  auto inside_bit = [&](int c) {
    int center = find(corner_face_[4 * c + 0]);
    int val = -1;
    for (auto& e : events) {
      if (e.crossing != c) continue;
      int left = find(corner_face_[4 * c + ((e.in_slot + 3) & 3)]);
      int b = (left == center) ? 1 : 0;
      if (val < 0)
        val = b;
      else if (val != b)
        throw Error("ladybug trace: inconsistent sides");
    }
    return val;
  };
  int ik = inside_bit(k), il = inside_bit(l);
  if (ik == il) throw Error("ladybug matching needs a planar diagram");
  int A = ik ? k : l;  // inner crossing
  int B = ik ? l : k;

  for (int i = 0; i < 4; ++i)
    if (events[i].crossing == events[(i + 1) & 3].crossing)
      throw Error("ladybug trace: passes do not alternate");

  // Right pair: match across the arcs running from a B-pass to the next
  // A-pass; left pair uses the A-to-B arcs.
  int from = (conv == LadybugConvention::Right) ? B : A;
  LadybugMatching m{};
  auto rk = resolve(u | (Vertex{1} << k));
  auto rl = resolve(u | (Vertex{1} << l));
  int idx = 0;
  for (int i = 0; i < 4; ++i) {
    if (events[i].crossing != from) continue;
    int rep = walk[(events[i].pos + 1) % walk.size()].arc;
    m.pairs[idx++] = {rk.circle_of_arc[rep], rl.circle_of_arc[rep]};
  }
  assert(idx == 2);
  assert((m.pairs[0].first == f.first_k.s_dst1 && m.pairs[1].first == f.first_k.s_dst2) ||
         (m.pairs[0].first == f.first_k.s_dst2 && m.pairs[1].first == f.first_k.s_dst1));
  return m;
}

uint32_t Cube::face_geometry(Vertex u, int k, int l) const {
  Face f = classify_face(u, k, l);
  RegionData reg;
  compute_regions(u, reg);
  auto ru = resolve(u);

  auto center_class = [&](int c) { return reg.find(corner_face_[4 * c + 0]); };

  // canonical traversal of a circle: smaller-depth region on the right
  auto left_region_of_circle = [&](uint8_t zid) {
    int start_arc = 0;
    for (int a = 1; a <= 2 * n() && !start_arc; ++a)
      if (ru.circle_of_arc[a] == zid) start_arc = a;
    auto [c, s] = arc_ends_[start_arc][1];
    int left = reg.find(corner_face_[4 * c + ((s + 3) & 3)]);
    int right = reg.find(corner_face_[4 * c + s]);
    if (left == right) throw Error("face geometry needs a planar diagram");
    return (reg.depth[right] <= reg.depth[left]) ? left : right;
  };

  auto involved = [&](const Edge& e) {
    std::vector<uint8_t> out;
    if (e.is_merge) {
      out.push_back(e.m_src1);
      out.push_back(e.m_src2);
    } else {
      out.push_back(e.s_src);
    }
    return out;
  };

  uint32_t bits = 0;
  int shift = 0;
  for (auto [cr, eg] : {std::pair{k, &f.first_k}, std::pair{l, &f.first_l}}) {
    std::vector<uint8_t> circles = involved(*eg);
    std::sort(circles.begin(), circles.end());
    for (size_t t = 0; t < 2; ++t) {
      int bit = 0;
      if (t < circles.size()) bit = (center_class(cr) == left_region_of_circle(circles[t])) ? 1 : 0;
      bits |= static_cast<uint32_t>(bit) << shift++;
    }
  }
  if (center_class(k) == center_class(l)) bits |= 1u << 8;
  bits |= static_cast<uint32_t>(reg.depth[center_class(k)] & 1) << 9;
  bits |= static_cast<uint32_t>(reg.depth[center_class(l)] & 1) << 10;
  return bits;
}

}  // namespace khst
