#pragma once

#include <cstdint>
#include <vector>

#include "khst/errors.hpp"

namespace khst {

// Sparse integer matrix in sorted coordinate form.  No zero entries, no
// duplicate coordinates.
struct ZSparseMatrix {
  int rows = 0, cols = 0;
  struct Entry {
    int row, col;
    long long value;
  };
  std::vector<Entry> entries;  // sorted by (row, col)

  ZSparseMatrix() = default;
  ZSparseMatrix(int r, int c) : rows(r), cols(c) {}
  void add(int r, int c, long long v) {
    if (v != 0) entries.push_back({r, c, v});
  }
  void sort_entries();
  void validate() const;
};

struct SnfResult {
  std::vector<long long> invariant_factors;  // d1 | d2 | ... , all positive
  int rank = 0;                              // number of invariant factors
};

// Smith normal form via fraction-free sparse elimination on +-1 pivots,
// followed by a dense arbitrary-precision pass on the residual block.
SnfResult smith_normal_form(const ZSparseMatrix& m);

}  // namespace khst
