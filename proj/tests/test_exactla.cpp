#include <random>

#include "doctest.h"
#include "khst/f2la.hpp"
#include "khst/zla.hpp"

using namespace khst;

namespace {

// Naive single-bit Gaussian elimination rank oracle, no packing.
int naive_rank(std::vector<std::vector<int>> m) {
  if (m.empty()) return 0;
  int rows = m.size(), cols = m[0].size(), rank = 0;
  for (int c = 0; c < cols; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < rows; ++r)
      if (r != rank && m[r][c])
        for (int cc = 0; cc < cols; ++cc) m[r][cc] ^= m[rank][cc];
    ++rank;
  }
  return rank;
}

F2Matrix random_matrix(std::mt19937& rng, int rows, int cols, double density = 0.5) {
  F2Matrix m(rows, cols);
  std::bernoulli_distribution bit(density);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (bit(rng)) m.set(r, c, true);
  return m;
}

std::vector<std::vector<int>> unpack(const F2Matrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols(), 0));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
  return out;
}

}  // namespace

TEST_CASE("identity and zero decompositions") {
  auto id = f2_decompose(F2Matrix::identity(5));
  CHECK(id.rank == 5);
  CHECK(id.kernel_basis().empty());
  auto z = f2_decompose(F2Matrix(3, 4));
  CHECK(z.rank == 0);
  CHECK(z.kernel_basis().size() == 4);
}

TEST_CASE("random ranks match the naive oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto m = random_matrix(rng, 6, 9);
    auto d = f2_decompose(m);
    CHECK(d.rank == naive_rank(unpack(m)));
    CHECK(d.rank + static_cast<int>(d.kernel_basis().size()) == 9);
    for (auto& k : d.kernel_basis()) CHECK(m.apply(k).is_zero());
  }
}

TEST_CASE("solve recovers solutions and rejects non-members") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto m = random_matrix(rng, 7, 5);
    F2Vector x(5);
    for (int c = 0; c < 5; ++c) x.set(c, rng() & 1);
    auto b = m.apply(x);
    auto d = f2_decompose(m);
    F2Vector sol;
    REQUIRE(d.solve(b, &sol));
    CHECK(m.apply(sol) == b);
  }
}

TEST_CASE("subspace intersection examples") {
  F2Vector e1(4), e2(4);
  e1.set(0, true);
  e2.set(1, true);
  auto same = subspace_intersection({e1}, {e1}, 4);
  REQUIRE(same.size() == 1);
  CHECK(same[0] == e1);
  CHECK(subspace_intersection({e1}, {e2}, 4).empty());
  CHECK_THROWS_AS(subspace_intersection({e1}, {F2Vector(3)}, 4), DimensionMismatch);
}

TEST_CASE("subspace intersection dimension formula on random subspaces") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<F2Vector> a, b;
    for (int i = 0; i < 4; ++i) a.push_back(random_matrix(rng, 1, 8, 0.5).row(0));
    for (int i = 0; i < 5; ++i) b.push_back(random_matrix(rng, 1, 8, 0.5).row(0));
    auto basisA = f2_span_basis(a, 8), basisB = f2_span_basis(b, 8);
    auto inter = subspace_intersection(a, b, 8);
    std::vector<F2Vector> uni = basisA;
    uni.insert(uni.end(), basisB.begin(), basisB.end());
    int dim_sum = static_cast<int>(f2_span_basis(uni, 8).size());
    CHECK(static_cast<int>(inter.size()) ==
          static_cast<int>(basisA.size()) + static_cast<int>(basisB.size()) - dim_sum);
    // membership in both spans, by brute-force span enumeration (2^dim <= 2^8)
    for (auto& v : inter) {
      for (auto basis : {&basisA, &basisB}) {
        bool member = false;
        int k = static_cast<int>(basis->size());
        for (int mask = 0; mask < (1 << k) && !member; ++mask) {
          F2Vector acc(8);
          for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1) acc ^= (*basis)[i];
          if (acc == v) member = true;
        }
        CHECK(member);
      }
    }
  }
}

TEST_CASE("smith normal form: stated examples") {
  {
    ZSparseMatrix m(3, 3);
    for (int i = 0; i < 3; ++i) m.add(i, i, 1);
    m.sort_entries();
    auto s = smith_normal_form(m);
    CHECK(s.invariant_factors == std::vector<long long>{1, 1, 1});
  }
  {
    ZSparseMatrix m(2, 2);
    m.add(0, 0, 2);
    m.add(0, 1, 4);
    m.add(1, 0, 6);
    m.add(1, 1, 8);
    m.sort_entries();
    auto s = smith_normal_form(m);
    CHECK(s.invariant_factors == std::vector<long long>{2, 4});
  }
  {
    ZSparseMatrix m(2, 2);
    m.add(0, 0, 6);
    m.add(1, 1, 4);
    m.sort_entries();
    auto s = smith_normal_form(m);
    CHECK(s.invariant_factors == std::vector<long long>{2, 12});
  }
  {
    ZSparseMatrix m(3, 4);
    auto s = smith_normal_form(m);
    CHECK(s.rank == 0);
  }
}

TEST_CASE("smith normal form is invariant under unimodular operations") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<long long>> a(4, std::vector<long long>(4, 0));
    std::uniform_int_distribution<int> val(-4, 4);
    for (auto& row : a)
      for (auto& v : row) v = val(rng);
    auto snf_of = [](const std::vector<std::vector<long long>>& m) {
      ZSparseMatrix z(m.size(), m[0].size());
      for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < m[0].size(); ++c) z.add(r, c, m[r][c]);
      z.sort_entries();
      return smith_normal_form(z).invariant_factors;
    };
    auto before = snf_of(a);
    // random unimodular row/column operations
    std::uniform_int_distribution<int> idx(0, 3), coef(-2, 2);
    for (int op = 0; op < 12; ++op) {
      int i = idx(rng), j = idx(rng), k = coef(rng);
      if (i == j) continue;
      if (op & 1)
        for (int c = 0; c < 4; ++c) a[i][c] += k * a[j][c];
      else
        for (int r = 0; r < 4; ++r) a[r][i] += k * a[r][j];
    }
    CHECK(snf_of(a) == before);
  }
}

TEST_CASE("sparse elimination agrees with dense decomposition") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    int rows = 20, cols = 24;
    auto m = random_matrix(rng, rows, cols, 0.15);
    SparseF2 s(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (m.get(r, c)) s.add_entry(r, c);
    SparseF2Elim elim(std::move(s));
    auto d = f2_decompose(m);
    CHECK(elim.rank() == d.rank);
    CHECK(static_cast<int>(elim.free_cols().size()) == cols - d.rank);
    for (int f : elim.free_cols()) {
      auto k = elim.kernel_vector(f);
      CHECK(m.apply(k).is_zero());
    }
    // row space spans match: each reduced row is in the row space of m
    auto mt = m.transpose();
    auto dt = f2_decompose(mt);
    for (auto& r : elim.reduced_rows()) {
      CHECK(dt.solve(r, nullptr));
    }
  }
}
