#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "khst/homology.hpp"

namespace khst {

struct Sq2Options {
  LadybugConvention convention = LadybugConvention::Right;
  // 0 keeps the canonical per-y pairing (by generator order).  Any other
  // value shuffles the pairings; the induced map on cohomology must not
  // change (the choice is a null-homotopy choice).
  uint64_t matching_shuffle_seed = 0;
  // Test hook: flips the sign of cube edge u -> u|1<<k encoded as 32*u + k,
  // deliberately breaking the frame coherence.
  int64_t corrupt_edge = -1;
};

// Chain-level second Steenrod square of a cocycle at (i, slice.j), following
// the moduli-space bookkeeping of the Khovanov flow category: the broken
// flows from supp(c) into each target generator are glued into circles by
// the one-manifold interval matching (ladybug pairs included) and a per-y
// boundary matching; the coefficient is the number of circles carrying the
// nontrivial framing, which is 1 + (half-twist count)/2 per circle mod 2.
F2Vector sq2_chain(const Cube& cube, const GradedComplex& slice, int i, const F2Vector& cocycle,
                   const Sq2Options& opt = {});

// Sq^2 : Kh^{i,j}(F2) -> Kh^{i+2,j}(F2) in the stored bases.
OpMatrix sq2(const Cube& cube, const GradedComplex& slice, const CohomologyBasis& src,
             const CohomologyBasis& dst, const Sq2Options& opt = {});

struct Sq2VerifyReport {
  int trials = 0;
  int violations = 0;
  std::vector<std::string> notes;
};

// Randomized well-definedness harness: re-choose representatives (add random
// coboundaries) and re-draw the per-y matchings; the induced matrix on
// cohomology must be unchanged.  Frame-coherence failures surface as errors
// and are counted as violations.
Sq2VerifyReport verify_sq2_welldefined(const Cube& cube, const GradedComplex& slice,
                                       const CohomologyBasis& src, const CohomologyBasis& dst,
                                       int trials, uint64_t seed, const Sq2Options& opt = {});

// Text dump of one chain-level evaluation (flows, circles, classes) for
// diffing against other implementations.
std::string dump_sq2_evaluation(const Cube& cube, const GradedComplex& slice, int i,
                                const F2Vector& cocycle, const Sq2Options& opt = {});

}  // namespace khst
