#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "khst/errors.hpp"

namespace khst {

// One crossing of a planar diagram.  arc[0..3] are the arc labels in
// counterclockwise order starting from the incoming under-strand, so
// arc[0] is the under-strand entering and arc[2] the under-strand leaving.
// over_fwd records the over-strand direction: true means it runs
// arc[1] -> arc[3].  sign is +1 iff over_fwd.
struct Crossing {
  std::array<int, 4> arc;
  bool over_fwd = true;
  int sign = +1;
};

// An oriented link diagram.  Arc labels are normalized to 1..2n and each
// label appears in exactly two crossing slots.  Planarity of the input is
// not verified: a non-planar PD code still defines a chain complex, but its
// homology is then not a link invariant.
struct LinkDiagram {
  std::vector<Crossing> crossings;
  int n_plus = 0;
  int n_minus = 0;
  int components = 0;
  std::string name;

  int n() const { return static_cast<int>(crossings.size()); }
  int num_arcs() const { return 2 * n(); }
  int writhe() const { return n_plus - n_minus; }

  // Both slot positions of an arc label, in crossing-list order.
  // ends_of(a)[k] = {crossing index, slot 0..3}.
  std::array<std::array<int, 2>, 2> ends_of(int arc_label) const;
};

// Parse a PD code.  Grammar: `PD[` X(n,n,n,n) ( [,\s]+ X(...) )* `]`.
// The literal `UNKNOT` is an alias for PD[X(1,1,2,2)].
LinkDiagram parse_pd(const std::string& text);

// Parse a Dowker-Thistlethwaite code of a knot: whitespace/comma separated
// signed even integers, one per crossing.  A positive entry means the
// odd-numbered visit passes under.
LinkDiagram parse_dt(const std::string& text);

// Exchange over- and under-strands at every crossing.
LinkDiagram mirror(const LinkDiagram& d);

// Serialize back to PD text (canonical form, used by dumps and tests).
std::string to_pd_string(const LinkDiagram& d);

namespace detail {
// Shared finalization: validates arc labels, propagates orientations,
// computes signs and component count.  `crossings` carries slot labels only.
LinkDiagram finalize_diagram(std::vector<std::array<int, 4>> crossings, std::string name);
}  // namespace detail

}  // namespace khst
