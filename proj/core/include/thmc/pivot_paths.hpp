#pragma once

#include <array>
#include <vector>

#include "thmc/design.hpp"
#include "thmc/words.hpp"

namespace thmc {

enum class PivotKind { type1, type2 };

// A pair of loop-free paths whose Model (d) columns differ in exactly two
// transitions. type1: +1 at (j,i), -1 at (k,i). type2: +1 at (k,i), -1 at (k,j).
struct PivotPathPair {
  Word P;
  Word Q;
  PivotKind kind = PivotKind::type1;
  int i = 0, j = 0, k = 0;
  std::array<int, 2> plus{};   // transition with +1
  std::array<int, 2> minus{};  // transition with -1
};

// Throws invalid_indices unless i, j, k are pairwise distinct states of [S] and T >= 4.
PivotPathPair pivot_paths(int S, int i, int j, int k, int T, PivotKind kind);

// The pair written with superscript (a,b) and subscript (c,d): +1 at ab, -1 at cd.
PivotPathPair pivot_pair_by_transitions(int S, int a, int b, int c, int d, int T);

// Column difference A(P) - A(Q) in Model (d) row order.
IntVec pivot_difference(const PivotPathPair& pair, int S, int T);

// Pairs whose differences add up to e_12 - e_ij, for any transition (i,j) other than (1,2).
std::vector<PivotPathPair> pivot_composition(int S, int i, int j, int T);

}  // namespace thmc
