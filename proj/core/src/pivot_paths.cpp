#include "thmc/pivot_paths.hpp"

#include <array>

namespace thmc {

namespace {

void append_alternating(std::vector<int>& w, int a, int b, int length) {
  for (int t = 0; t < length; ++t) w.push_back(t % 2 == 0 ? a : b);
}

void check_pair(const PivotPathPair& pair, int S, int T) {
  const WordSpace space{S, T, true};
  require(is_valid(pair.P, space) && is_valid(pair.Q, space), ErrorCode::internal,
          "pivot path is not a loop-free word of length T");
  IntVec v = pivot_difference(pair, S, T);
  IntVec expected(v.size(), 0);
  expected[transition_row(Model::D, S, pair.plus[0], pair.plus[1])] = 1;
  expected[transition_row(Model::D, S, pair.minus[0], pair.minus[1])] = -1;
  require(v == expected, ErrorCode::internal, "pivot path difference has the wrong pattern");
}

}  // namespace

PivotPathPair pivot_paths(int S, int i, int j, int k, int T, PivotKind kind) {
  require(S >= 3 && T >= 4, ErrorCode::invalid_indices, "pivot paths need S >= 3 and T >= 4");
  for (int s : {i, j, k}) require(s >= 1 && s <= S, ErrorCode::invalid_indices, "state out of range");
  require(i != j && j != k && i != k, ErrorCode::invalid_indices, "pivot states must be pairwise distinct");
  PivotPathPair pair;
  pair.kind = kind;
  pair.i = i;
  pair.j = j;
  pair.k = k;
  std::vector<int> p, q;
  const bool even = T % 2 == 0;
  if (kind == PivotKind::type1) {
    if (even) {
      append_alternating(p, i, j, T - 1);
      p.push_back(k);
      q = {i, k};
      append_alternating(q, i, j, T - 2);
    } else {
      p = {i, k};
      append_alternating(p, j, i, T - 3);
      p.push_back(k);
      q = {i, k, i, k};
      append_alternating(q, j, i, T - 4);
    }
    pair.plus = {j, i};
    pair.minus = {k, i};
  } else {
    if (even) {
      p = {k};
      append_alternating(p, i, j, T - 1);
      q = {k};
      append_alternating(q, j, i, T - 1);
    } else {
      p = {k, i, k};
      append_alternating(p, j, i, T - 3);
      q = {k, j, i, k};
      append_alternating(q, j, i, T - 4);
    }
    pair.plus = {k, i};
    pair.minus = {k, j};
  }
  pair.P = Word(std::move(p));
  pair.Q = Word(std::move(q));
  check_pair(pair, S, T);
  return pair;
}

PivotPathPair pivot_pair_by_transitions(int S, int a, int b, int c, int d, int T) {
  if (b == d && a != c) return pivot_paths(S, b, a, c, T, PivotKind::type1);
  if (a == c && b != d) return pivot_paths(S, b, d, a, T, PivotKind::type2);
  fail(ErrorCode::invalid_indices, "transitions " + std::to_string(a) + std::to_string(b) + " and " + std::to_string(c) +
                                       std::to_string(d) + " do not share a head or a tail");
}

IntVec pivot_difference(const PivotPathPair& pair, int S, int T) {
  return subtract(column_of_word(Model::D, S, T, pair.P), column_of_word(Model::D, S, T, pair.Q));
}

std::vector<PivotPathPair> pivot_composition(int S, int i, int j, int T) {
  require(i != j && !(i == 1 && j == 2), ErrorCode::invalid_indices, "no pivot composition for this transition");
  require(i >= 1 && i <= S && j >= 1 && j <= S, ErrorCode::invalid_indices, "state out of range");
  std::vector<PivotPathPair> out;
  if (i == 1) {
    out.push_back(pivot_pair_by_transitions(S, 1, 2, 1, j, T));
  } else if (j == 1) {
    // +ik -i1, then +1k -ik, then +12 -1k; the last step vanishes when k = 2.
    int k = 2;
    if (i == 2) k = 3;
    out.push_back(pivot_pair_by_transitions(S, i, k, i, 1, T));
    out.push_back(pivot_pair_by_transitions(S, 1, k, i, k, T));
    if (k != 2) out.push_back(pivot_pair_by_transitions(S, 1, 2, 1, k, T));
  } else if (j == 2) {
    out.push_back(pivot_pair_by_transitions(S, 1, 2, i, 2, T));
  } else {
    out.push_back(pivot_pair_by_transitions(S, 1, j, i, j, T));
    out.push_back(pivot_pair_by_transitions(S, 1, 2, 1, j, T));
  }
  return out;
}

}  // namespace thmc
