#include "khst/homology.hpp"

#include <algorithm>
#include <cassert>

namespace khst {

namespace {

SparseF2 diff_as_sparse_f2(const GradedComplex& c, int i) {
  // rows = targets (equations), cols = sources
  SparseF2 m(c.dim(i + 1), c.dim(i));
  const auto& rows = c.differential(i);
  for (size_t s = 0; s < rows.size(); ++s)
    for (const auto& e : rows[s]) m.add_entry(e.target, static_cast<int>(s));
  return m;
}

ZSparseMatrix diff_as_sparse_z(const GradedComplex& c, int i) {
  ZSparseMatrix m(c.dim(i + 1), c.dim(i));
  const auto& rows = c.differential(i);
  for (size_t s = 0; s < rows.size(); ++s)
    for (const auto& e : rows[s]) m.add(e.target, static_cast<int>(s), e.sign);
  m.sort_entries();
  return m;
}

}  // namespace

F2Vector apply_diff_f2(const GradedComplex& slice, int i, const F2Vector& v) {
  F2Vector out(slice.dim(i + 1));
  if (i < slice.i_min || i >= slice.i_max) return out;
  const auto& rows = slice.differential(i);
  v.for_each_set([&](int s) {
    for (const auto& e : rows[s]) out.flip(e.target);
  });
  return out;
}

BigradedGroup kh(const Cube& cube, Ring ring) {
  BigradedGroup out;
  out.ring = ring;
  for (int j : occupied_quantum_gradings(cube)) {
    auto slice = build_slice(cube, j, ring);
    if (ring == Ring::F2) {
      std::vector<int> rank(slice.i_max - slice.i_min + 2, 0);
      for (int i = slice.i_min; i < slice.i_max; ++i) {
        SparseF2Elim elim(diff_as_sparse_f2(slice, i));
        rank[i - slice.i_min + 1] = elim.rank();
      }
      for (int i = slice.i_min; i <= slice.i_max; ++i) {
        int d = slice.dim(i) - rank[i - slice.i_min + 1] - rank[i - slice.i_min];
        if (d > 0) out.entries[{i, j}].f2_dim = d;
      }
    } else {
      std::vector<int> rank(slice.i_max - slice.i_min + 2, 0);
      std::vector<std::vector<long long>> tors(slice.i_max - slice.i_min + 2);
      for (int i = slice.i_min; i < slice.i_max; ++i) {
        auto snf = smith_normal_form(diff_as_sparse_z(slice, i));
        rank[i - slice.i_min + 1] = snf.rank;
        for (long long f : snf.invariant_factors)
          if (f > 1) tors[i - slice.i_min + 1].push_back(f);
      }
      for (int i = slice.i_min; i <= slice.i_max; ++i) {
        int free = slice.dim(i) - rank[i - slice.i_min + 1] - rank[i - slice.i_min];
        auto& torsion = tors[i - slice.i_min];
        if (free > 0 || !torsion.empty()) {
          auto& e = out.entries[{i, j}];
          e.free_rank = free;
          e.torsion = torsion;
        }
      }
    }
  }
  return out;
}

BigradedGroup kh(const LinkDiagram& d, Ring ring) { return kh(Cube(d), ring); }

int width_f2(const BigradedGroup& g) {
  if (g.entries.empty()) throw EmptyGroup("width of an empty group");
  std::vector<int> diags;
  for (auto& [ij, e] : g.entries)
    if (e.f2_dim > 0 || e.free_rank > 0 || !e.torsion.empty())
      diags.push_back(ij.second - 2 * ij.first);
  std::sort(diags.begin(), diags.end());
  diags.erase(std::unique(diags.begin(), diags.end()), diags.end());
  if (diags.empty()) throw EmptyGroup("width of an empty group");
  return static_cast<int>(diags.size());
}

CohomologyBasis::CohomologyBasis(const GradedComplex& slice, int i)
    : i_(i), j_(slice.j), chain_dim_(slice.dim(i)) {
  if (chain_dim_ == 0) return;

  int rank_in = 0;
  std::vector<F2Vector> image;
  if (i > slice.i_min && slice.dim(i - 1) > 0) {
    // rows of the previous differential span the image
    SparseF2 m(slice.dim(i - 1), chain_dim_);
    const auto& rows = slice.differential(i - 1);
    for (size_t s = 0; s < rows.size(); ++s)
      for (const auto& e : rows[s]) m.add_entry(static_cast<int>(s), e.target);
    SparseF2Elim elim(std::move(m));
    rank_in = elim.rank();
    image = elim.reduced_rows();
  }

  // at the top degree every chain is a cocycle: empty equation system
  SparseF2Elim cocycles(i < slice.i_max ? diff_as_sparse_f2(slice, i)
                                        : SparseF2(0, chain_dim_));
  int h_dim = chain_dim_ - cocycles.rank() - rank_in;
  assert(h_dim >= 0);

  // Seed the echelon with the image (class 0), then pull kernel vectors
  // until the quotient is spanned.
  auto reduce = [&](F2Vector v, F2Vector* tag_out) -> F2Vector {
    for (const auto& row : ech_) {
      if (v.get(row.pivot)) {
        v ^= row.v;
        if (tag_out) *tag_out ^= row.tag;
      }
    }
    return v;
  };
  for (auto& b : image) {
    F2Vector v = reduce(std::move(b), nullptr);
    int p = v.first_set();
    if (p >= 0) ech_.push_back({std::move(v), F2Vector(h_dim), p});
  }
  int found = 0;
  for (int f : cocycles.free_cols()) {
    if (found == h_dim) break;
    F2Vector acc(h_dim);
    F2Vector v = reduce(cocycles.kernel_vector(f), &acc);
    int p = v.first_set();
    if (p < 0) continue;
    // compensate for tags picked up from earlier representative rows so
    // that project(reps_[c]) == e_c exactly
    acc.flip(found);
    reps_.push_back(cocycles.kernel_vector(f));
    ech_.push_back({std::move(v), std::move(acc), p});
    ++found;
  }
  assert(found == h_dim);
}

F2Vector CohomologyBasis::project(const F2Vector& v) const {
  F2Vector cur = v;
  F2Vector tag(dim());
  for (const auto& row : ech_) {
    if (cur.get(row.pivot)) {
      cur ^= row.v;
      tag ^= row.tag;
    }
  }
  if (!cur.is_zero()) throw Error("projection: vector not in cocycle span");
  return tag;
}

F2Vector sq1_chain(const GradedComplex& slice, int i, const F2Vector& cocycle) {
  F2Vector out(slice.dim(i + 1));
  if (i < slice.i_min || i >= slice.i_max) return out;
  std::vector<int> y(slice.dim(i + 1), 0);
  const auto& rows = slice.differential(i);
  cocycle.for_each_set([&](int s) {
    for (const auto& e : rows[s]) y[e.target] += e.sign;
  });
  for (size_t t = 0; t < y.size(); ++t) {
    if (y[t] % 2 != 0) throw Error("bockstein: integral image not divisible by 2");
    if ((y[t] / 2) & 1) out.set(static_cast<int>(t), true);
  }
  return out;
}

OpMatrix sq1(const GradedComplex& slice, const CohomologyBasis& src, const CohomologyBasis& dst) {
  assert(dst.i() == src.i() + 1 && dst.j() == src.j());
  OpMatrix op;
  op.i_src = src.i();
  op.i_dst = dst.i();
  op.j = src.j();
  op.m = F2Matrix(dst.dim(), src.dim());
  for (int c = 0; c < src.dim(); ++c) {
    F2Vector y = sq1_chain(slice, src.i(), src.representatives()[c]);
    // y must be a cocycle at i+1
    if (!apply_diff_f2(slice, dst.i(), y).is_zero())
      throw Error("bockstein image is not a cocycle");
    F2Vector cls = dst.project(y);
    for (int r = 0; r < dst.dim(); ++r)
      if (cls.get(r)) op.m.set(r, c, true);
  }
  return op;
}

}  // namespace khst
