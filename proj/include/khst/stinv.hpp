#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "khst/steenrod.hpp"

namespace khst {

// Ranks entering the St invariant at one bidegree:
//   r1 = rank Sq^2
//   r2 = rank Sq^2 restricted to ker Sq^1_(i)
//   r3 = dim( im Sq^1_(i+1)  cap  im Sq^2 )
//   r4 = dim( im Sq^1_(i+1)  cap  im (Sq^2 restricted to ker Sq^1_(i)) )
struct RankProfile {
  int r1 = 0, r2 = 0, r3 = 0, r4 = 0;
};

struct StEntry {
  int a = 0, b = 0, c = 0, d = 0;
  bool zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool operator==(const StEntry& o) const = default;
};

struct StTable {
  std::map<std::pair<int, int>, StEntry> entries;  // all-zero entries omitted

  // canonical serialization: entries sorted by (j, i), components comma
  // separated; the grouping key used by the census comparison
  std::string canonical() const;
  bool operator==(const StTable& o) const { return entries == o.entries; }
};

RankProfile rank_profile(const OpMatrix& sq1_i, const OpMatrix& sq1_i1, const OpMatrix& sq2_m);

// St(i,j) = (r2 - r4, r1 - r2 - r3 + r4, r4, r3 - r4); throws
// NegativeComponent if the profile is inconsistent.
StEntry st_entry(const RankProfile& p);

StTable st_table(const LinkDiagram& d, LadybugConvention conv = LadybugConvention::Right);

// Canonical fingerprint of integral Khovanov homology: sorted list of
// (i, j, free rank, invariant factors).
std::string kh_key(const BigradedGroup& kh_z);

// --- census harnesses -------------------------------------------------------

struct CensusEntry {
  std::string name;
  LinkDiagram diagram;
};

struct LinkInvariants {
  std::string name;
  std::string kh_key;
  StTable st;
};

LinkInvariants compute_invariants(const CensusEntry& e, LadybugConvention conv);

struct CompareReport {
  struct Group {
    std::string kh_key;
    std::vector<std::string> names;                     // sorted
    std::vector<std::vector<std::string>> st_classes;   // partition by StTable
    bool split() const { return st_classes.size() > 1; }
  };
  std::vector<Group> groups;                                  // KhKey groups of size >= 2
  std::vector<std::pair<std::string, std::string>> failures;  // name -> error
  int computed = 0;
};

// Partition by KhKey, then refine by St.  Groups where the refinement is
// strictly finer witness that St sees more than integral Khovanov homology.
CompareReport census_compare(const std::vector<CensusEntry>& entries,
                             LadybugConvention conv = LadybugConvention::Right, int workers = 1);

struct MutantReport {
  struct Group {
    std::vector<std::string> names;
    bool st_agree = false;
  };
  std::vector<Group> groups;
  int agree = 0, disagree = 0;
};

MutantReport mutant_check(const std::vector<CensusEntry>& census,
                          const std::vector<std::vector<std::string>>& pair_groups,
                          LadybugConvention conv = LadybugConvention::Right, int workers = 1);

struct Cp2Report {
  std::map<std::pair<int, int>, int> a_of;
  bool any_nonzero = false;
};

Cp2Report cp2_count(const StTable& st);

}  // namespace khst
