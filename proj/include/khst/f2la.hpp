#pragma once

#include <cstdint>
#include <vector>

#include "khst/errors.hpp"

namespace khst {

// Bit-packed vector over F2.  Words are little-endian within the vector:
// bit i lives at word i/64, bit position i%64.  Trailing bits are zero.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(int size) : size_(size), w_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool v) {
    uint64_t m = uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(int i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

  void operator^=(const F2Vector& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  }
  bool is_zero() const {
    for (uint64_t x : w_)
      if (x) return false;
    return true;
  }
  int popcount() const {
    int c = 0;
    for (uint64_t x : w_) c += __builtin_popcountll(x);
    return c;
  }
  // Index of the lowest set bit, or -1.
  int first_set() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k * 64 + __builtin_ctzll(w_[k]));
    return -1;
  }
  bool operator==(const F2Vector& o) const { return size_ == o.size_ && w_ == o.w_; }

  template <typename F>
  void for_each_set(F&& f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t x = w_[k];
      while (x) {
        f(static_cast<int>(k * 64 + __builtin_ctzll(x)));
        x &= x - 1;
      }
    }
  }

 private:
  int size_ = 0;
  std::vector<uint64_t> w_;
};

// Dense bit-packed matrix over F2, row-major.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows, F2Vector(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return row_[r].get(c); }
  void set(int r, int c, bool v) { row_[r].set(c, v); }
  F2Vector& row(int r) { return row_[r]; }
  const F2Vector& row(int r) const { return row_[r]; }

  static F2Matrix identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }
  static F2Matrix from_rows(const std::vector<F2Vector>& rows, int cols);

  // y = M x
  F2Vector apply(const F2Vector& x) const;
  F2Matrix multiply(const F2Matrix& o) const;
  F2Matrix transpose() const;
  bool operator==(const F2Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<F2Vector> row_;
};

// Row-reduction of a dense matrix with full pivot record.
//   rank + kernel + image + solving M x = b.
struct F2Decomposition {
  int rank = 0;
  F2Matrix rre;                // reduced row echelon form of M
  std::vector<int> pivot_col;  // pivot column of each of the first `rank` rows
  std::vector<int> free_col;   // non-pivot columns
  int rows = 0, cols = 0;

  std::vector<F2Vector> kernel_basis() const;  // basis of {x : M x = 0}

  // Is b in the column space?  If yes and x != nullptr, writes one solution.
  bool solve(const F2Vector& b, F2Vector* x) const;

 private:
  friend F2Decomposition f2_decompose(const F2Matrix& m);
  F2Matrix transform;  // rre = transform * M  (rows x rows)
};

F2Decomposition f2_decompose(const F2Matrix& m);

// Basis of the column space of M (as vectors of length M.rows()).
std::vector<F2Vector> f2_image_basis(const F2Matrix& m);

int f2_rank(const F2Matrix& m);

// Echelonize a list of vectors in place; returns an independent subset
// spanning the same space (reduced echelon rows, sorted by pivot).
std::vector<F2Vector> f2_span_basis(const std::vector<F2Vector>& vecs, int dim);

// Basis of span(A) intersect span(B) via the Zassenhaus construction.
// All vectors must have the same ambient dimension.
std::vector<F2Vector> subspace_intersection(const std::vector<F2Vector>& a,
                                            const std::vector<F2Vector>& b, int dim);

// --- Sparse elimination -----------------------------------------------------
//
// Row-reduction of a sparse F2 matrix, used for the chain-complex scale
// computations.  Rows are sorted index vectors.  Pivoting prefers short rows
// and short columns to limit fill.
class SparseF2 {
 public:
  SparseF2(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  // Entries must be added at most once per position.
  void add_entry(int r, int c) { row_[r].push_back(c); }
  void finish_row(int r) { std::sort(row_[r].begin(), row_[r].end()); }
  const std::vector<int>& row(int r) const { return row_[r]; }

  size_t nnz() const {
    size_t s = 0;
    for (auto& r : row_) s += r.size();
    return s;
  }

 private:
  friend class SparseF2Elim;
  int rows_, cols_;
  std::vector<std::vector<int>> row_;
};

// Reduced row echelon of a SparseF2 matrix.
class SparseF2Elim {
 public:
  explicit SparseF2Elim(SparseF2 m);

  int rank() const { return rank_; }
  int cols() const { return cols_; }
  const std::vector<int>& pivot_cols() const { return pivot_cols_; }
  const std::vector<int>& free_cols() const { return free_cols_; }

  // Kernel basis vector attached to free column f (dense, length cols).
  F2Vector kernel_vector(int free_col) const;

  // All nonzero reduced rows (dense); spans the row space.
  std::vector<F2Vector> reduced_rows() const;

 private:
  int cols_;
  int rank_ = 0;
  std::vector<std::vector<int>> rows_;  // reduced rows, sorted, paired with pivot_cols_
  std::vector<int> pivot_cols_;
  std::vector<int> free_cols_;
  std::vector<int> pivot_of_col_;  // col -> row index or -1
};

}  // namespace khst
