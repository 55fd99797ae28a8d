#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "thmc/design.hpp"
#include "thmc/types.hpp"
#include "thmc/words.hpp"

namespace thmc {

// Directed multigraph on states 1..S. Edge multiplicities live in a dense
// row-major S*S matrix; marks (initial-state counts) are optional.
class StateGraph {
 public:
  StateGraph() = default;
  explicit StateGraph(int S);

  int S() const noexcept { return S_; }
  std::int64_t edges(int i, int j) const { return x_[index(i, j)]; }
  void set_edges(int i, int j, std::int64_t count);
  void add_edges(int i, int j, std::int64_t count = 1);

  std::int64_t out_degree(int i) const;
  std::int64_t in_degree(int i) const;
  std::int64_t edge_count() const;
  bool has_self_loops() const;

  const std::optional<IntVec>& marks() const noexcept { return marks_; }
  void set_marks(IntVec marks);

  friend bool operator==(const StateGraph&, const StateGraph&) = default;

 private:
  std::size_t index(int i, int j) const;

  int S_ = 0;
  IntVec x_;
  std::optional<IntVec> marks_;
};

StateGraph graph_of_multiset(const PathMultiset& W, bool marked);
StateGraph graph_of_word(const Word& w, int S);

// Inverse of the transition part of a design column (any model).
StateGraph graph_of_column(Model model, int S, std::span<const std::int64_t> column);

// Requires equal S, T, loop policy and number of paths.
bool fiber_equivalent(Model model, const PathMultiset& W, const PathMultiset& Wbar);

// S = 3, loop-free, every |out - in| <= 1. The returned word consumes every edge once.
Word eulerian_path(const StateGraph& G);

struct CycleDecomposition {
  std::int64_t m = 0;
  std::int64_t n = 0;
  StateGraph leftover;
};

CycleDecomposition cycle_decomposition(const StateGraph& G);

struct GmnClass {
  std::int64_t m = 0;
  std::int64_t n = 0;
  bool member_of_script_G = false;
};

GmnClass classify_Gmn(const StateGraph& G);

std::int64_t f_T(std::int64_t T, std::int64_t t);

// The graphs of G_{m, f_T(m)}, sorted; empty when 2m > T-1.
std::vector<StateGraph> enumerate_Gmn(int T, std::int64_t m);

nlohmann::ordered_json graph_to_json(const StateGraph& G);
std::string graph_to_dot(const StateGraph& G, const std::string& name = "G");

}  // namespace thmc
