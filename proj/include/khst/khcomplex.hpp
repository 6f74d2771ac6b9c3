#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "khst/cube.hpp"
#include "khst/laurent.hpp"

namespace khst {

enum class Ring { Z, F2 };

// Khovanov generator: a cube vertex with a circle labeling.  Bit i of x_mask
// set means circle i of the resolution carries the label x, clear means 1.
// Gradings: i = |v| - n_minus,  j = (#1 - #x) + |v| + n_plus - 2 n_minus.
struct KhGenerator {
  Vertex v;
  uint32_t x_mask;
  bool operator==(const KhGenerator& o) const { return v == o.v && x_mask == o.x_mask; }
  bool operator<(const KhGenerator& o) const {
    return v != o.v ? v < o.v : x_mask < o.x_mask;
  }
};

// One quantum grading of the Khovanov complex.  Generators in each
// homological degree are ordered by (vertex, labeling); differentials are
// stored per source generator with signs in {-1,+1}.  Over F2 the signs are
// ignored.  D_{i+1} D_i = 0 and no entry leaves the quantum grading.
struct GradedComplex {
  Ring ring = Ring::Z;
  int j = 0;
  int i_min = 0, i_max = 0;

  struct DiffEntry {
    int target;
    int8_t sign;
  };

  // index by i - i_min
  std::vector<std::vector<KhGenerator>> gens;
  std::vector<std::vector<std::vector<DiffEntry>>> diff;

  int dim(int i) const {
    if (i < i_min || i > i_max) return 0;
    return static_cast<int>(gens[i - i_min].size());
  }
  const std::vector<KhGenerator>& generators(int i) const { return gens[i - i_min]; }
  const std::vector<std::vector<DiffEntry>>& differential(int i) const { return diff[i - i_min]; }

  // position of g in generators(i), or -1
  int index_of(int i, const KhGenerator& g) const;
};

// Quantum gradings with at least one generator, ascending.
std::vector<int> occupied_quantum_gradings(const Cube& cube);

// Build the complex in one quantum grading.
GradedComplex build_slice(const Cube& cube, int j, Ring ring = Ring::Z);

// Build all (or the selected) quantum gradings.
std::vector<GradedComplex> build_complex(const Cube& cube, Ring ring,
                                         const std::optional<std::set<int>>& j_filter = {});

// Chain-level graded Euler characteristic: sum over (i,j) of (-1)^i q^j dim.
Laurent graded_euler_characteristic(const std::vector<GradedComplex>& complexes);

// Unnormalized Jones polynomial via the Kauffman bracket state sum, in the
// same variable convention as graded_euler_characteristic.  Independent of
// the complex machinery: own smoothing tables and circle counting.
Laurent kauffman_jones(const LinkDiagram& d);

// Debug dump of the differentials in sparse triple format `i row col value`,
// one grading per block.
std::string dump_complex(const GradedComplex& c);

}  // namespace khst
