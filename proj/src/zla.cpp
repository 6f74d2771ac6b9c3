#include "khst/zla.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <climits>
#include <cstdlib>
#include <utility>

namespace khst {

void ZSparseMatrix::sort_entries() {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
}

void ZSparseMatrix::validate() const {
  for (size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e.value == 0) throw Error("ZSparseMatrix: zero entry stored");
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
      throw Error("ZSparseMatrix: entry out of range");
    if (i > 0) {
      const auto& p = entries[i - 1];
      if (!(p.row < e.row || (p.row == e.row && p.col < e.col)))
        throw Error("ZSparseMatrix: entries not strictly sorted");
    }
  }
}

namespace {

constexpr long long kEscalateLimit = 1ll << 62;

// Dense Smith normal form over arbitrary precision integers.
std::vector<mpz_class> dense_snf(std::vector<std::vector<mpz_class>> a) {
  std::vector<mpz_class> factors;
  if (a.empty()) return factors;
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  int t = 0;
  while (t < rows && t < cols) {
    // find entry of smallest absolute value in the remaining block
    int pi = -1, pj = -1;
    mpz_class best;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          mpz_class v = abs(a[i][j]);
          if (pi < 0 || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
    if (pi < 0) break;
    std::swap(a[t], a[pi]);
    for (int i = t; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

    bool again = true;
    while (again) {
      again = false;
      // clear the pivot column
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q = a[i][t] / a[t][t];  // truncated division
        if (q != 0)
          for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {  // remainder smaller than pivot: swap up
          std::swap(a[t], a[i]);
          again = true;
        }
      }
      if (again) continue;
      // clear the pivot row
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q = a[t][j] / a[t][t];
        if (q != 0)
          for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (int i = t; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          again = true;
        }
      }
      if (again) continue;
      // pivot must divide every remaining entry; if not, fold that row in
      for (int i = t + 1; i < rows && !again; ++i)
        for (int j = t + 1; j < cols && !again; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            again = true;
          }
    }
    factors.push_back(abs(a[t][t]));
    ++t;
  }
  return factors;
}

struct SparseRow {
  std::vector<std::pair<int, long long>> e;  // sorted by column
};

}  // namespace

SnfResult smith_normal_form(const ZSparseMatrix& m) {
  m.validate();
  const int nr = m.rows;
  std::vector<SparseRow> row(nr);
  for (const auto& e : m.entries) row[e.row].e.push_back({e.col, e.value});

  std::vector<std::vector<int>> col_rows(m.cols);
  for (int r = 0; r < nr; ++r)
    for (auto& [c, v] : row[r].e) col_rows[c].push_back(r);

  std::vector<char> done(nr, 0);
  int unit_pivots = 0;
  bool escalate = false;

  // bucket queue by row length over rows that still contain a +-1 entry
  auto has_unit = [&](int r) {
    for (auto& [c, v] : row[r].e)
      if (v == 1 || v == -1) return true;
    return false;
  };
  size_t max_len = 1;
  for (auto& r : row) max_len = std::max(max_len, r.e.size());
  std::vector<std::vector<int>> bucket(max_len + 1);
  for (int r = 0; r < nr; ++r)
    if (!row[r].e.empty()) bucket[row[r].e.size()].push_back(r);
  size_t cur = 1;
  auto push_row = [&](int r) {
    size_t len = row[r].e.size();
    if (len == 0) return;
    if (len >= bucket.size()) bucket.resize(len + 1);
    bucket[len].push_back(r);
    if (len < cur) cur = len;
  };

  auto find_in_row = [&](int r, int c) -> long long {
    auto& e = row[r].e;
    auto it = std::lower_bound(e.begin(), e.end(), std::make_pair(c, LLONG_MIN));
    return (it != e.end() && it->first == c) ? it->second : 0;
  };

  while (!escalate) {
    int pr = -1;
    while (cur < bucket.size()) {
      while (!bucket[cur].empty()) {
        int r = bucket[cur].back();
        bucket[cur].pop_back();
        if (!done[r] && row[r].e.size() == cur && has_unit(r)) {
          pr = r;
          break;
        }
        // rows without a unit entry are re-queued only if modified later
      }
      if (pr >= 0) break;
      ++cur;
    }
    if (pr < 0) {
      // no short row with a unit entry readily available: rescan
      for (int r = 0; r < nr && pr < 0; ++r)
        if (!done[r] && !row[r].e.empty() && has_unit(r)) pr = r;
      if (pr < 0) break;  // no unit pivots remain anywhere
    }

    // pivot column: unit-valued entry with least live occupancy
    int pc = -1;
    size_t pc_len = static_cast<size_t>(-1);
    long long pv = 0;
    for (auto& [c, v] : row[pr].e) {
      if (v != 1 && v != -1) continue;
      auto& cr = col_rows[c];
      cr.erase(std::remove_if(cr.begin(), cr.end(),
                              [&](int r) { return done[r] || find_in_row(r, c) == 0; }),
               cr.end());
      std::sort(cr.begin(), cr.end());
      cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
      if (cr.size() < pc_len) {
        pc = c;
        pc_len = cr.size();
        pv = v;
      }
    }
    done[pr] = 1;

    for (int r : col_rows[pc]) {
      if (done[r] || r == pr) continue;
      long long vr = find_in_row(r, pc);
      if (vr == 0) continue;
      // row_r -= (vr * pv) * row_pr   (pv is its own inverse)
      __int128 mult = static_cast<__int128>(vr) * pv;
      std::vector<std::pair<int, long long>> out;
      out.reserve(row[r].e.size() + row[pr].e.size());
      auto ia = row[r].e.begin(), ea = row[r].e.end();
      auto ib = row[pr].e.begin(), eb = row[pr].e.end();
      bool over = false;
      while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
          out.push_back(*ia++);
        } else if (ia == ea || ib->first < ia->first) {
          __int128 nv = -mult * ib->second;
          if (nv > kEscalateLimit || nv < -kEscalateLimit) {
            over = true;
            break;
          }
          out.push_back({ib->first, static_cast<long long>(nv)});
          ++ib;
        } else {
          __int128 nv = static_cast<__int128>(ia->second) - mult * ib->second;
          if (nv > kEscalateLimit || nv < -kEscalateLimit) {
            over = true;
            break;
          }
          if (nv != 0) out.push_back({ia->first, static_cast<long long>(nv)});
          ++ia;
          ++ib;
        }
      }
      if (over) {
        done[pr] = 0;  // keep the pivot row for the dense phase
        escalate = true;
        break;
      }
      row[r].e = std::move(out);
      for (auto& [c, v] : row[r].e) col_rows[c].push_back(r);
      push_row(r);
    }
    if (escalate) break;
    ++unit_pivots;
    row[pr].e.clear();
    col_rows[pc].clear();
  }

  // Residual block to dense arbitrary-precision SNF.
  std::vector<int> live;
  for (int r = 0; r < nr; ++r)
    if (!done[r] && !row[r].e.empty()) live.push_back(r);
  std::vector<long long> factors;
  if (!live.empty()) {
    std::vector<int> cols_used;
    for (int r : live)
      for (auto& [c, v] : row[r].e) cols_used.push_back(c);
    std::sort(cols_used.begin(), cols_used.end());
    cols_used.erase(std::unique(cols_used.begin(), cols_used.end()), cols_used.end());
    std::vector<int> col_idx(m.cols, -1);
    for (size_t i = 0; i < cols_used.size(); ++i) col_idx[cols_used[i]] = static_cast<int>(i);
    std::vector<std::vector<mpz_class>> dense(live.size(),
                                              std::vector<mpz_class>(cols_used.size(), 0));
    for (size_t i = 0; i < live.size(); ++i)
      for (auto& [c, v] : row[live[i]].e) dense[i][col_idx[c]] = static_cast<long>(v);
    for (auto& f : dense_snf(std::move(dense))) {
      if (!f.fits_slong_p()) throw Error("invariant factor exceeds long long");
      factors.push_back(f.get_si());
    }
  }

  SnfResult out;
  out.invariant_factors.assign(unit_pivots, 1);
  out.invariant_factors.insert(out.invariant_factors.end(), factors.begin(), factors.end());
  out.rank = static_cast<int>(out.invariant_factors.size());
  for (size_t i = 1; i < out.invariant_factors.size(); ++i)
    assert(out.invariant_factors[i] % out.invariant_factors[i - 1] == 0);
  return out;
}

}  // namespace khst
