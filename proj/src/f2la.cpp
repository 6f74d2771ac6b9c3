#include "khst/f2la.hpp"

#include <algorithm>
#include <cassert>

namespace khst {

F2Matrix F2Matrix::from_rows(const std::vector<F2Vector>& rows, int cols) {
  F2Matrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.row_[i] = rows[i];
  return m;
}

F2Vector F2Matrix::apply(const F2Vector& x) const {
  F2Vector y(rows_);
  for (int r = 0; r < rows_; ++r) {
    int parity = 0;
    row_[r].for_each_set([&](int c) { parity ^= x.get(c) ? 1 : 0; });
    if (parity) y.set(r, true);
  }
  return y;
}

F2Matrix F2Matrix::multiply(const F2Matrix& o) const {
  assert(cols_ == o.rows_);
  F2Matrix out(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r) {
    row_[r].for_each_set([&](int k) { out.row_[r] ^= o.row_[k]; });
  }
  return out;
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    row_[r].for_each_set([&](int c) { out.set(c, r, true); });
  return out;
}

F2Decomposition f2_decompose(const F2Matrix& m) {
  F2Decomposition d;
  d.rows = m.rows();
  d.cols = m.cols();
  d.rre = m;
  d.transform = F2Matrix::identity(m.rows());
  std::vector<char> col_used(m.cols(), 0);
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (d.rre.get(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(d.rre.row(piv), d.rre.row(r));
    std::swap(d.transform.row(piv), d.transform.row(r));
    for (int i = 0; i < m.rows(); ++i)
      if (i != r && d.rre.get(i, c)) {
        d.rre.row(i) ^= d.rre.row(r);
        d.transform.row(i) ^= d.transform.row(r);
      }
    d.pivot_col.push_back(c);
    col_used[c] = 1;
    ++r;
  }
  d.rank = r;
  for (int c = 0; c < m.cols(); ++c)
    if (!col_used[c]) d.free_col.push_back(c);
  return d;
}

std::vector<F2Vector> F2Decomposition::kernel_basis() const {
  std::vector<F2Vector> out;
  out.reserve(free_col.size());
  for (int f : free_col) {
    F2Vector v(cols);
    v.set(f, true);
    for (int p = 0; p < rank; ++p)
      if (rre.get(p, f)) v.set(pivot_col[p], true);
    out.push_back(std::move(v));
  }
  return out;
}

bool F2Decomposition::solve(const F2Vector& b, F2Vector* x) const {
  // transform * M = rre, so M x = b iff rre x = transform b.
  F2Vector tb(rows);
  for (int r = 0; r < rows; ++r) {
    int parity = 0;
    transform.row(r).for_each_set([&](int c) { parity ^= b.get(c) ? 1 : 0; });
    if (parity) tb.set(r, true);
  }
  for (int r = rank; r < rows; ++r)
    if (tb.get(r)) return false;
  if (x) {
    F2Vector sol(cols);
    for (int p = 0; p < rank; ++p)
      if (tb.get(p)) sol.set(pivot_col[p], true);
    *x = std::move(sol);
  }
  return true;
}

std::vector<F2Vector> f2_image_basis(const F2Matrix& m) {
  auto d = f2_decompose(m);
  std::vector<F2Vector> out;
  out.reserve(d.rank);
  for (int p : d.pivot_col) {
    F2Vector col(m.rows());
    for (int r = 0; r < m.rows(); ++r)
      if (m.get(r, p)) col.set(r, true);
    out.push_back(std::move(col));
  }
  return out;
}

int f2_rank(const F2Matrix& m) { return f2_decompose(m).rank; }

std::vector<F2Vector> f2_span_basis(const std::vector<F2Vector>& vecs, int dim) {
  std::vector<std::pair<int, F2Vector>> ech;  // (pivot, row), kept mutually reduced
  for (const auto& v0 : vecs) {
    if (v0.size() != dim) throw DimensionMismatch("f2_span_basis");
    F2Vector v = v0;
    for (auto& [p, row] : ech)
      if (v.get(p)) v ^= row;
    int p = v.first_set();
    if (p < 0) continue;
    for (auto& [q, row] : ech)
      if (row.get(p)) row ^= v;
    ech.push_back({p, std::move(v)});
  }
  std::sort(ech.begin(), ech.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<F2Vector> out;
  out.reserve(ech.size());
  for (auto& [p, row] : ech) out.push_back(std::move(row));
  return out;
}

std::vector<F2Vector> subspace_intersection(const std::vector<F2Vector>& a,
                                            const std::vector<F2Vector>& b, int dim) {
  for (auto& v : a)
    if (v.size() != dim) throw DimensionMismatch("subspace_intersection");
  for (auto& v : b)
    if (v.size() != dim) throw DimensionMismatch("subspace_intersection");
  // Zassenhaus: echelonize rows [v | v] for v in A and [w | 0] for w in B.
  // Combinations with zero left half have right half in span(A) cap span(B).
  struct Row {
    F2Vector left, right;
  };
  std::vector<Row> ech;
  std::vector<F2Vector> inter;
  auto insert = [&](F2Vector l, F2Vector r) {
    for (auto& e : ech) {
      int p = e.left.first_set();
      if (p >= 0 && l.get(p)) {
        l ^= e.left;
        r ^= e.right;
      }
    }
    if (l.is_zero()) {
      if (!r.is_zero()) inter.push_back(std::move(r));
      return;
    }
    ech.push_back({std::move(l), std::move(r)});
  };
  for (const auto& v : a) insert(v, v);
  for (const auto& w : b) insert(w, F2Vector(dim));
  return f2_span_basis(inter, dim);
}

// --- sparse -----------------------------------------------------------------

SparseF2Elim::SparseF2Elim(SparseF2 m) : cols_(m.cols()) {
  const int nr = m.rows();
  auto& row = m.row_;
  for (auto& r : row) std::sort(r.begin(), r.end());

  // column -> row occupancy, with lazily discarded stale entries
  std::vector<std::vector<int>> col_rows(cols_);
  for (int r = 0; r < nr; ++r)
    for (int c : row[r]) col_rows[c].push_back(r);

  std::vector<char> done(nr, 0);

  // bucket queue of candidate pivot rows by current length
  size_t max_len = 1;
  for (auto& r : row) max_len = std::max(max_len, r.size());
  std::vector<std::vector<int>> bucket(max_len + 1);
  for (int r = 0; r < nr; ++r)
    if (!row[r].empty()) bucket[row[r].size()].push_back(r);
  size_t cur = 1;

  auto push_row = [&](int r) {
    size_t len = row[r].size();
    if (len == 0) return;
    if (len >= bucket.size()) bucket.resize(len + 1);
    bucket[len].push_back(r);
    if (len < cur) cur = len;
  };

  auto xor_rows = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
  };

  std::vector<int> pivot_row_order;
  for (;;) {
    int pr = -1;
    while (cur < bucket.size()) {
      while (!bucket[cur].empty()) {
        int r = bucket[cur].back();
        bucket[cur].pop_back();
        if (!done[r] && row[r].size() == cur) {
          pr = r;
          break;
        }
      }
      if (pr >= 0) break;
      ++cur;
    }
    if (pr < 0) break;

    // pivot column: least live occupancy among this row's columns
    int pc = -1;
    size_t pc_len = static_cast<size_t>(-1);
    for (int c : row[pr]) {
      auto& cr = col_rows[c];
      cr.erase(std::remove_if(cr.begin(), cr.end(),
                              [&](int r) {
                                return done[r] ||
                                       !std::binary_search(row[r].begin(), row[r].end(), c);
                              }),
               cr.end());
      std::sort(cr.begin(), cr.end());
      cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
      if (cr.size() < pc_len) {
        pc = c;
        pc_len = cr.size();
      }
    }
    done[pr] = 1;
    pivot_cols_.push_back(pc);
    pivot_row_order.push_back(pr);

    for (int r : col_rows[pc]) {
      if (done[r] || r == pr) continue;
      row[r] = xor_rows(row[r], row[pr]);
      for (int c : row[pr])
        if (c != pc && std::binary_search(row[r].begin(), row[r].end(), c))
          col_rows[c].push_back(r);
      push_row(r);
    }
    col_rows[pc].clear();
  }

  rank_ = static_cast<int>(pivot_cols_.size());
  rows_.reserve(rank_);
  for (int i = 0; i < rank_; ++i) rows_.push_back(std::move(row[pivot_row_order[i]]));
  pivot_of_col_.assign(cols_, -1);
  for (int i = 0; i < rank_; ++i) pivot_of_col_[pivot_cols_[i]] = i;
  for (int c = 0; c < cols_; ++c)
    if (pivot_of_col_[c] < 0) free_cols_.push_back(c);
}

F2Vector SparseF2Elim::kernel_vector(int free_col) const {
  // Rows are in elimination order: row i's pivot column may appear only in
  // rows j < i, so back-substitute in reverse order.
  F2Vector v(cols_);
  v.set(free_col, true);
  for (int i = rank_ - 1; i >= 0; --i) {
    int parity = 0;
    for (int c : rows_[i])
      if (c != pivot_cols_[i] && v.get(c)) parity ^= 1;
    if (parity) v.set(pivot_cols_[i], true);
  }
  return v;
}

std::vector<F2Vector> SparseF2Elim::reduced_rows() const {
  std::vector<F2Vector> out;
  out.reserve(rank_);
  for (int i = 0; i < rank_; ++i) {
    F2Vector v(cols_);
    for (int c : rows_[i]) v.set(c, true);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace khst
