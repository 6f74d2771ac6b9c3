#pragma once

#include <string>
#include <vector>

#include "khst/pd.hpp"

namespace khst {

// Constructs link diagrams from combinatorial descriptions and emits PD
// codes.  Crossings have four ports
//   0 = TL, 1 = TR, 2 = BL, 3 = BR,
// with strands TL-BR and TR-BL; over_tlbr marks the TL-BR strand as the
// over-strand.  Used by the census generator and the test fixtures.
class DiagramBuilder {
 public:
  int add_crossing(bool over_tlbr);
  // Connect two ports by an arc.  Each port is used exactly once.
  void connect(int c1, int p1, int c2, int p2);

  // Greedy Reidemeister I/II reduction of the port structure.  Closed
  // components that lose all their crossings are dropped and counted.
  void simplify();

  int live_crossings() const;
  int dropped_unknots() const { return dropped_unknots_; }

  // Trace strands and emit the diagram.  A builder with no live crossings
  // yields the one-crossing unknot diagram.
  LinkDiagram build(std::string name) const;

 private:
  struct Crossing {
    bool over;
    bool dead = false;
  };
  std::vector<Crossing> crossings_;
  std::vector<int> mate_;  // global port id 4c+p -> connected port id, -1 open
  int dropped_unknots_ = 0;

  static int diag(int p) { return p ^ 3; }  // TL<->BR, TR<->BL
  bool try_r1(int c);
  bool try_r2(int c);
  void reconnect(int end1, int end2);
  void splice(const std::vector<int>& term, const std::vector<int>& ext);
};

// Closure of a braid word on `strands` strands; letter +k / -k is the
// positive / negative crossing of positions k, k+1 (1-based).
LinkDiagram braid_closure(int strands, const std::vector<int>& word, std::string name);

// Torus link T(p,q) as the closure of (s1 s2 ... s_{p-1})^q.
LinkDiagram torus_link(int p, int q, std::string name = "");

// Pretzel link P(t1, ..., tk): vertical twist regions joined left to right.
LinkDiagram pretzel_link(const std::vector<int>& twists, std::string name = "");

// Two-bridge knot/link from a positive continued fraction [a1, ..., am]:
// alternating horizontal and vertical twist regions, numerator closure.
// The determinant equals the continued-fraction numerator.
LinkDiagram rational_link(const std::vector<int>& cf, std::string name = "");
int rational_determinant(const std::vector<int>& cf);

// Grid diagram: markers O and X in column c at rows o_rows[c], x_rows[c]
// (permutations of 0..n-1); vertical strands pass over horizontal ones.
// The result is simplified with R1/R2 before emission.
LinkDiagram grid_diagram(const std::vector<int>& o_rows, const std::vector<int>& x_rows,
                         std::string name = "");

}  // namespace khst
