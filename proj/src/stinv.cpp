#include "khst/stinv.hpp"

#include <algorithm>
#include <condition_variable>
#include <mutex>
#include <queue>
#include <sstream>
#include <thread>

namespace khst {

std::string StTable::canonical() const {
  std::vector<std::pair<std::pair<int, int>, StEntry>> rows(entries.begin(), entries.end());
  std::sort(rows.begin(), rows.end(), [](auto& a, auto& b) {
    if (a.first.second != b.first.second) return a.first.second < b.first.second;
    return a.first.first < b.first.first;
  });
  std::ostringstream os;
  for (auto& [ij, e] : rows)
    os << ij.first << "," << ij.second << ":" << e.a << "," << e.b << "," << e.c << "," << e.d
       << ";";
  return os.str();
}

RankProfile rank_profile(const OpMatrix& sq1_i, const OpMatrix& sq1_i1, const OpMatrix& sq2_m) {
  if (sq1_i.m.cols() != sq2_m.m.cols() || sq1_i.m.rows() != sq1_i1.m.cols() ||
      sq1_i1.m.rows() != sq2_m.m.rows())
    throw DimensionMismatch("rank_profile operands");

  RankProfile p;
  p.r1 = f2_rank(sq2_m.m);

  // Sq^2 restricted to ker Sq^1_(i)
  auto ker = f2_decompose(sq1_i.m).kernel_basis();
  F2Matrix ker_cols = F2Matrix::from_rows(ker, sq2_m.m.cols());  // rows = kernel vectors
  F2Matrix restricted = sq2_m.m.multiply(ker_cols.transpose());  // images of kernel basis
  p.r2 = f2_rank(restricted);

  int amb = sq2_m.m.rows();
  auto cols_of = [amb](const F2Matrix& m) {
    std::vector<F2Vector> out;
    for (int c = 0; c < m.cols(); ++c) {
      F2Vector v(amb);
      for (int r = 0; r < amb; ++r)
        if (m.get(r, c)) v.set(r, true);
      out.push_back(std::move(v));
    }
    return out;
  };
  auto im_sq1 = cols_of(sq1_i1.m);
  auto im_sq2 = cols_of(sq2_m.m);
  auto im_sq2_res = cols_of(restricted);
  p.r3 = static_cast<int>(subspace_intersection(im_sq1, im_sq2, amb).size());
  p.r4 = static_cast<int>(subspace_intersection(im_sq1, im_sq2_res, amb).size());
  return p;
}

StEntry st_entry(const RankProfile& p) {
  StEntry e{p.r2 - p.r4, p.r1 - p.r2 - p.r3 + p.r4, p.r4, p.r3 - p.r4};
  if (e.a < 0 || e.b < 0 || e.c < 0 || e.d < 0) {
    std::ostringstream os;
    os << "profile (" << p.r1 << "," << p.r2 << "," << p.r3 << "," << p.r4 << ") -> (" << e.a
       << "," << e.b << "," << e.c << "," << e.d << ")";
    throw NegativeComponent(os.str());
  }
  return e;
}

StTable st_table(const LinkDiagram& d, LadybugConvention conv) {
  Cube cube(d);
  auto khf2 = kh(cube, Ring::F2);
  StTable table;
  Sq2Options opt;
  opt.convention = conv;

  // quantum gradings where some Sq^2 can be nonzero
  std::map<int, std::vector<int>> candidates;  // j -> list of i
  for (auto& [ij, e] : khf2.entries) {
    auto [i, j] = ij;
    if (e.f2_dim > 0 && khf2.f2_dim(i + 2, j) > 0) candidates[j].push_back(i);
  }

  for (auto& [j, is] : candidates) {
    auto slice = build_slice(cube, j, Ring::F2);
    std::map<int, CohomologyBasis> bases;
    auto basis_at = [&](int i) -> const CohomologyBasis& {
      auto it = bases.find(i);
      if (it == bases.end()) it = bases.emplace(i, CohomologyBasis(slice, i)).first;
      return it->second;
    };
    for (int i : is) {
      const auto& bi = basis_at(i);
      const auto& bi1 = basis_at(i + 1);
      const auto& bi2 = basis_at(i + 2);
      auto op1 = sq1(slice, bi, bi1);
      auto op11 = sq1(slice, bi1, bi2);
      auto op2 = sq2(cube, slice, bi, bi2, opt);
      StEntry e = st_entry(rank_profile(op1, op11, op2));
      if (!e.zero()) table.entries[{i, j}] = e;
    }
  }
  return table;
}

std::string kh_key(const BigradedGroup& kh_z) {
  std::ostringstream os;
  for (auto& [ij, e] : kh_z.entries) {
    if (e.free_rank == 0 && e.torsion.empty()) continue;
    os << ij.first << "," << ij.second << ":" << e.free_rank;
    auto t = e.torsion;
    std::sort(t.begin(), t.end());
    for (long long f : t) os << "/" << f;
    os << ";";
  }
  return os.str();
}

LinkInvariants compute_invariants(const CensusEntry& e, LadybugConvention conv) {
  LinkInvariants out;
  out.name = e.name;
  out.kh_key = kh_key(kh(e.diagram, Ring::Z));
  out.st = st_table(e.diagram, conv);
  return out;
}

namespace {

// Run f(index) over a small worker pool; results land in out[index].
template <typename F>
void parallel_for(int count, int workers, F&& f) {
  if (workers <= 1) {
    for (int t = 0; t < count; ++t) f(t);
    return;
  }
  std::mutex mu;
  int next = 0;
  auto worker = [&] {
    for (;;) {
      int t;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= count) return;
        t = next++;
      }
      f(t);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace

CompareReport census_compare(const std::vector<CensusEntry>& entries, LadybugConvention conv,
                             int workers) {
  CompareReport report;
  std::vector<LinkInvariants> results(entries.size());
  std::vector<std::string> errors(entries.size());
  parallel_for(static_cast<int>(entries.size()), workers, [&](int t) {
    try {
      results[t] = compute_invariants(entries[t], conv);
    } catch (const Error& err) {
      errors[t] = err.what();
    } catch (const std::exception& err) {
      errors[t] = err.what();
    }
  });

  std::map<std::string, std::vector<int>> by_key;
  for (size_t t = 0; t < entries.size(); ++t) {
    if (!errors[t].empty()) {
      report.failures.push_back({entries[t].name, errors[t]});
      continue;
    }
    ++report.computed;
    by_key[results[t].kh_key].push_back(static_cast<int>(t));
  }
  for (auto& [key, members] : by_key) {
    if (members.size() < 2) continue;
    CompareReport::Group g;
    g.kh_key = key;
    std::map<std::string, std::vector<std::string>> by_st;
    for (int t : members) {
      g.names.push_back(results[t].name);
      by_st[results[t].st.canonical()].push_back(results[t].name);
    }
    std::sort(g.names.begin(), g.names.end());
    for (auto& [st, names] : by_st) {
      auto sorted = names;
      std::sort(sorted.begin(), sorted.end());
      g.st_classes.push_back(std::move(sorted));
    }
    std::sort(g.st_classes.begin(), g.st_classes.end());
    report.groups.push_back(std::move(g));
  }
  std::sort(report.groups.begin(), report.groups.end(),
            [](auto& a, auto& b) { return a.names < b.names; });
  std::sort(report.failures.begin(), report.failures.end());
  return report;
}

MutantReport mutant_check(const std::vector<CensusEntry>& census,
                          const std::vector<std::vector<std::string>>& pair_groups,
                          LadybugConvention conv, int workers) {
  std::map<std::string, const CensusEntry*> index;
  for (auto& e : census) index[e.name] = &e;

  std::vector<std::string> needed;
  for (auto& g : pair_groups)
    for (auto& name : g) {
      if (!index.count(name)) throw UnknownName(name);
      needed.push_back(name);
    }
  std::sort(needed.begin(), needed.end());
  needed.erase(std::unique(needed.begin(), needed.end()), needed.end());

  std::map<std::string, StTable> st_of;
  std::mutex mu;
  parallel_for(static_cast<int>(needed.size()), workers, [&](int t) {
    StTable st = st_table(index[needed[t]]->diagram, conv);
    std::lock_guard<std::mutex> lock(mu);
    st_of[needed[t]] = std::move(st);
  });

  MutantReport report;
  for (auto& g : pair_groups) {
    MutantReport::Group out;
    out.names = g;
    out.st_agree = true;
    for (size_t t = 1; t < g.size(); ++t)
      if (!(st_of[g[t]] == st_of[g[0]])) out.st_agree = false;
    (out.st_agree ? report.agree : report.disagree)++;
    report.groups.push_back(std::move(out));
  }
  return report;
}

Cp2Report cp2_count(const StTable& st) {
  Cp2Report out;
  for (auto& [ij, e] : st.entries) {
    out.a_of[ij] = e.a;
    if (e.a > 0) out.any_nonzero = true;
  }
  return out;
}

}  // namespace khst
