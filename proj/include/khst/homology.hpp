#pragma once

#include <map>
#include <utility>
#include <vector>

#include "khst/f2la.hpp"
#include "khst/khcomplex.hpp"
#include "khst/zla.hpp"

namespace khst {

struct BigradedEntry {
  int free_rank = 0;                   // over Z
  std::vector<long long> torsion;      // invariant factors > 1, divisibility order
  int f2_dim = 0;                      // over F2
  bool trivial() const { return free_rank == 0 && torsion.empty() && f2_dim == 0; }
};

// Kh as a table (i,j) -> entry.  Over Z the f2_dim fields are zero and vice
// versa; kh() fills the fields matching its ring.
struct BigradedGroup {
  Ring ring = Ring::Z;
  std::map<std::pair<int, int>, BigradedEntry> entries;

  const BigradedEntry* find(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? nullptr : &it->second;
  }
  int f2_dim(int i, int j) const {
    auto* e = find(i, j);
    return e ? e->f2_dim : 0;
  }
};

BigradedGroup kh(const LinkDiagram& d, Ring ring);
BigradedGroup kh(const Cube& cube, Ring ring);

// Number of occupied diagonals j - 2i over F2.  The unknot has width 2.
int width_f2(const BigradedGroup& g);

// Representative-cocycle basis of Kh^{i,j}(F2) on the full cube complex of
// one quantum grading, with projection of arbitrary cocycles to basis
// coordinates.  Representatives are reduced-echelon kernel vectors modulo
// the image, so the basis is deterministic.
class CohomologyBasis {
 public:
  CohomologyBasis(const GradedComplex& slice, int i);

  int i() const { return i_; }
  int j() const { return j_; }
  int dim() const { return static_cast<int>(reps_.size()); }
  int chain_dim() const { return chain_dim_; }
  const std::vector<F2Vector>& representatives() const { return reps_; }

  // Coordinates of [v] in the representative basis; v must be a cocycle.
  F2Vector project(const F2Vector& v) const;

 private:
  int i_, j_, chain_dim_;
  std::vector<F2Vector> reps_;
  struct EchRow {
    F2Vector v;    // echelon vector over the chain group
    F2Vector tag;  // its class in the representative basis
    int pivot;
  };
  std::vector<EchRow> ech_;
};

// A cohomology operation in stored bases: column c is the image of source
// representative c.
struct OpMatrix {
  int i_src = 0, i_dst = 0, j = 0;
  F2Matrix m;  // (dim dst) x (dim src)
  int rank() const { return f2_rank(m); }
};

// Apply the slice differential over F2 to a chain vector at degree i.
F2Vector apply_diff_f2(const GradedComplex& slice, int i, const F2Vector& v);

// Sq^1 = reduction of the Bockstein: lift each representative to the 0/1
// integral cochain, compute D lift = 2 y exactly, and return [y mod 2].
OpMatrix sq1(const GradedComplex& slice, const CohomologyBasis& src, const CohomologyBasis& dst);

// Chain-level Bockstein of a single F2 cocycle (0/1 lift).
F2Vector sq1_chain(const GradedComplex& slice, int i, const F2Vector& cocycle);

}  // namespace khst
