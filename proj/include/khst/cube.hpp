#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "khst/pd.hpp"

namespace khst {

using Vertex = uint32_t;

// Which of the two pairings of split circles a ladybug face uses.
enum class LadybugConvention { Right, Left };

// The cube of resolutions of a diagram.  All 2^n resolutions are traced once
// and kept immutable; readers may share a Cube across threads.
//
// Smoothing conventions, with crossing slots (a,b,c,d) listed
// counterclockwise from the incoming under-strand:
//   0-smoothing joins a-d and b-c,  1-smoothing joins a-b and c-d.
// With these conventions the all-0 resolution of an all-positive diagram is
// the oriented (Seifert) resolution.
class Cube {
 public:
  static constexpr int kMaxCircles = 32;
  static constexpr uint8_t kNoCircle = 0xFF;

  explicit Cube(const LinkDiagram& d);

  const LinkDiagram& diagram() const { return diagram_; }
  int n() const { return diagram_.n(); }
  Vertex num_vertices() const { return Vertex{1} << n(); }

  struct ResolutionView {
    const uint8_t* circle_of_arc;  // 1-based by arc label
    int num_circles;               // circles are ordered by minimal arc label
  };
  ResolutionView resolve(Vertex v) const {
    return {circles_flat_.data() + static_cast<size_t>(v) * (2 * n() + 1), counts_[v]};
  }

  // Edge u -> u | 1<<k (bit k of u must be 0).
  struct Edge {
    bool is_merge;
    // merge: circles m_src1 != m_src2 of resolve(u) fuse into m_dst.
    // split: circle s_src of resolve(u) divides into s_dst1, s_dst2.
    uint8_t m_src1 = 0, m_src2 = 0, m_dst = 0;
    uint8_t s_src = 0, s_dst1 = 0, s_dst2 = 0;
    // src circle index -> dst circle index; kNoCircle for the split source.
    std::array<uint8_t, kMaxCircles> src_to_dst;
  };
  void edge(Vertex u, int k, Edge& out) const;

  enum class FaceKind { TwoMerges, TwoSplits, MergeThenSplit, SplitThenMerge, Disjoint, Ladybug };

  // Face classification for the square u -> u | 1<<k | 1<<l.
  //   TwoMerges/TwoSplits: circle count changes by -2/+2.
  //   MergeThenSplit: both crossings merge the same two circles at u; each
  //     path merges first and splits back.
  //   SplitThenMerge: one crossing merges and one splits at u, touching a
  //     common circle.
  //   Disjoint: one merges and one splits at u on disjoint circles.
  //   Ladybug: both crossings split one circle at u in the interleaved
  //     configuration and the second edge re-merges the two pieces.
  struct Face {
    FaceKind kind;
    Edge first_k, then_l;  // path u -> u|k -> w
    Edge first_l, then_k;  // path u -> u|l -> w
  };
  Face classify_face(Vertex u, int k, int l) const;

  // Planar data of a face: for each of the two crossings (k first) and each
  // involved circle at u (in increasing circle id), a bit recording whether
  // the crossing's center region lies to the left of the circle's canonical
  // traversal (smaller nesting depth on the right).  Bit 8 is set when the
  // two crossings share their center region at u.  Bits 9/10: parity of the
  // nesting depth of k's / l's center region.
  uint32_t face_geometry(Vertex u, int k, int l) const;

  // For a Ladybug face: the distinguished bijection between the two circles
  // created by flipping k and the two created by flipping l.
  // pairs[i] = {circle id in resolve(u|1<<k), circle id in resolve(u|1<<l)}.
  struct LadybugMatching {
    std::array<std::pair<uint8_t, uint8_t>, 2> pairs;
  };
  LadybugMatching ladybug_matching(Vertex u, int k, int l, LadybugConvention conv) const;

  // Sign of the edge u -> u|1<<k: parity of the number of 1-bits of u below
  // position k.  Every square face has odd total sign.
  static int edge_sign(Vertex u, int k) {
    return __builtin_parity(u & ((Vertex{1} << k) - 1));
  }

  // Euler-characteristic check of the rotation system.  Non-planar PD input
  // still yields well-defined resolutions, but edges may fail to merge or
  // split and the ladybug matching is undefined.
  bool is_planar() const { return planar_; }

 private:
  LinkDiagram diagram_;
  std::vector<std::array<std::array<int, 2>, 2>> arc_ends_;  // arc -> two (crossing, slot)
  std::vector<uint8_t> circles_flat_;
  std::vector<uint8_t> counts_;
  std::vector<int> corner_face_;  // 4*crossing + corner -> original face id
  int num_orig_faces_ = 0;
  bool planar_ = false;

  struct Regions;
  struct DirectedArc {
    int arc;
    int head_end;  // index into arc_ends_[arc]: the end we arrive at
  };
  void compute_regions(Vertex u, struct RegionData& out) const;
  // Trace the circle through (arc, arriving end) at resolution v; returns the
  // directed arc sequence.
  std::vector<DirectedArc> trace_circle(Vertex v, int arc, int head_end) const;

  friend struct CubeTestAccess;
};

}  // namespace khst
