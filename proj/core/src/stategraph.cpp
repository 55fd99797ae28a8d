#include "thmc/stategraph.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace thmc {

StateGraph::StateGraph(int S) : S_(S), x_(static_cast<std::size_t>(S) * static_cast<std::size_t>(S), 0) {
  require(S >= 1, ErrorCode::invalid_dimension, "state graph needs S >= 1");
}

std::size_t StateGraph::index(int i, int j) const {
  require(i >= 1 && i <= S_ && j >= 1 && j <= S_, ErrorCode::invalid_indices, "state out of range");
  return static_cast<std::size_t>((i - 1) * S_ + (j - 1));
}

void StateGraph::set_edges(int i, int j, std::int64_t count) {
  require(count >= 0, ErrorCode::invalid_argument, "negative edge multiplicity");
  x_[index(i, j)] = count;
}

void StateGraph::add_edges(int i, int j, std::int64_t count) {
  auto& e = x_[index(i, j)];
  e = checked_add(e, count);
  require(e >= 0, ErrorCode::invalid_argument, "negative edge multiplicity");
}

std::int64_t StateGraph::out_degree(int i) const {
  std::int64_t d = 0;
  for (int j = 1; j <= S_; ++j) d += edges(i, j);
  return d;
}

std::int64_t StateGraph::in_degree(int i) const {
  std::int64_t d = 0;
  for (int j = 1; j <= S_; ++j) d += edges(j, i);
  return d;
}

std::int64_t StateGraph::edge_count() const { return sum(x_); }

bool StateGraph::has_self_loops() const {
  for (int i = 1; i <= S_; ++i) {
    if (edges(i, i) > 0) return true;
  }
  return false;
}

void StateGraph::set_marks(IntVec marks) {
  require(marks.size() == static_cast<std::size_t>(S_), ErrorCode::dimension_mismatch, "marks must have length S");
  marks_ = std::move(marks);
}

StateGraph graph_of_multiset(const PathMultiset& W, bool marked) {
  require(!W.empty(), ErrorCode::inconsistent_words, "empty path multiset");
  StateGraph G(W.space().S);
  IntVec marks(static_cast<std::size_t>(W.space().S), 0);
  for (const auto& [w, n] : W.counts()) {
    for (int t = 0; t + 1 < w.length(); ++t) G.add_edges(w[static_cast<std::size_t>(t)], w[static_cast<std::size_t>(t + 1)], n);
    marks[static_cast<std::size_t>(w.front() - 1)] += n;
  }
  if (marked) G.set_marks(std::move(marks));
  return G;
}

StateGraph graph_of_word(const Word& w, int S) {
  StateGraph G(S);
  for (int t = 0; t + 1 < w.length(); ++t) G.add_edges(w[static_cast<std::size_t>(t)], w[static_cast<std::size_t>(t + 1)]);
  return G;
}

StateGraph graph_of_column(Model model, int S, std::span<const std::int64_t> column) {
  require(column.size() == row_count(model, S), ErrorCode::dimension_mismatch, "column length does not match the model");
  StateGraph G(S);
  for (int i = 1; i <= S; ++i) {
    for (int j = 1; j <= S; ++j) {
      if (forbids_loops(model) && i == j) continue;
      G.set_edges(i, j, column[transition_row(model, S, i, j)]);
    }
  }
  if (has_initial_rows(model)) G.set_marks(IntVec(column.begin(), column.begin() + S));
  return G;
}

bool fiber_equivalent(Model model, const PathMultiset& W, const PathMultiset& Wbar) {
  require(W.space() == Wbar.space(), ErrorCode::inconsistent_words, "multisets live in different word spaces");
  require(W.total() == Wbar.total(), ErrorCode::inconsistent_words, "multisets have different numbers of paths");
  require(W.space().no_loops == forbids_loops(model), ErrorCode::inconsistent_words,
          "multiset loop policy does not match the model");
  const bool marked = has_initial_rows(model);
  return graph_of_multiset(W, marked) == graph_of_multiset(Wbar, marked);
}

namespace {

// Euler circuit of the component of `G` through `start`, consuming its edges.
// Always follows the lowest-numbered available successor.
std::vector<int> euler_circuit(StateGraph& G, int start) {
  std::vector<int> stack{start};
  std::vector<int> circuit;
  while (!stack.empty()) {
    int v = stack.back();
    int next = 0;
    for (int j = 1; j <= G.S(); ++j) {
      if (G.edges(v, j) > 0) {
        next = j;
        break;
      }
    }
    if (next == 0) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      G.add_edges(v, next, -1);
      stack.push_back(next);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

}  // namespace

Word eulerian_path(const StateGraph& G) {
  require(G.S() == 3, ErrorCode::no_eulerian_path, "eulerian_path is implemented for S = 3");
  require(!G.has_self_loops(), ErrorCode::no_eulerian_path, "graph has self-loops");
  require(G.edge_count() >= 1, ErrorCode::no_eulerian_path, "graph has no edges");
  int source = 0;
  int sink = 0;
  for (int i = 1; i <= 3; ++i) {
    std::int64_t d = G.out_degree(i) - G.in_degree(i);
    require(d >= -1 && d <= 1, ErrorCode::no_eulerian_path, "degree imbalance larger than one at state " + std::to_string(i));
    if (d == 1) source = i;
    if (d == -1) sink = i;
  }

  StateGraph rest = G;
  std::vector<int> rho;
  if (source != 0) {
    if (rest.edges(source, sink) > 0) {
      rest.add_edges(source, sink, -1);
      rho = {source, sink};
    } else {
      int via = 6 - source - sink;
      require(rest.edges(source, via) > 0 && rest.edges(via, sink) > 0, ErrorCode::no_eulerian_path,
              "no imbalance-fixing path");
      rest.add_edges(source, via, -1);
      rest.add_edges(via, sink, -1);
      rho = {source, via, sink};
    }
  } else {
    for (int i = 1; i <= 3 && rho.empty(); ++i) {
      if (rest.out_degree(i) > 0) rho = {i};
    }
  }

  std::vector<int> states;
  for (int v : rho) {
    if (rest.out_degree(v) > 0) {
      std::vector<int> circuit = euler_circuit(rest, v);
      states.insert(states.end(), circuit.begin(), circuit.end() - 1);
    }
    states.push_back(v);
  }
  require(rest.edge_count() == 0, ErrorCode::no_eulerian_path, "graph is not connected");
  Word w(std::move(states));
  StateGraph check = graph_of_word(w, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      require(check.edges(i, j) == G.edges(i, j), ErrorCode::internal, "eulerian path does not reproduce the graph");
  return w;
}

namespace {

constexpr std::array<std::array<int, 2>, 3> kClockwise{{{1, 2}, {2, 3}, {3, 1}}};
constexpr std::array<std::array<int, 2>, 3> kCounter{{{1, 3}, {3, 2}, {2, 1}}};

std::int64_t triangle_min(const StateGraph& G, const std::array<std::array<int, 2>, 3>& tri) {
  std::int64_t m = G.edges(tri[0][0], tri[0][1]);
  for (const auto& e : tri) m = std::min(m, G.edges(e[0], e[1]));
  return m;
}

void require_three_loop_free(const StateGraph& G) {
  require(G.S() == 3, ErrorCode::invalid_dimension, "cycle machinery is defined for S = 3");
  require(!G.has_self_loops(), ErrorCode::loop_violation, "graph has self-loops");
}

}  // namespace

CycleDecomposition cycle_decomposition(const StateGraph& G) {
  require_three_loop_free(G);
  CycleDecomposition out;
  out.leftover = StateGraph(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) out.leftover.set_edges(i, j, G.edges(i, j));
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      std::int64_t c = std::min(G.edges(i, j), G.edges(j, i));
      out.m += c;
      out.leftover.add_edges(i, j, -c);
      out.leftover.add_edges(j, i, -c);
    }
  }
  for (const auto* tri : {&kClockwise, &kCounter}) {
    std::int64_t c = triangle_min(out.leftover, *tri);
    out.n += c;
    for (const auto& e : *tri) out.leftover.add_edges(e[0], e[1], -c);
  }
  return out;
}

GmnClass classify_Gmn(const StateGraph& G) {
  require_three_loop_free(G);
  CycleDecomposition d = cycle_decomposition(G);
  int pair_types = 0;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      if (std::min(G.edges(i, j), G.edges(j, i)) > 0) ++pair_types;
  bool both_orientations = triangle_min(G, kClockwise) > 0 && triangle_min(G, kCounter) > 0;
  return {d.m, d.n, pair_types <= 1 && !both_orientations};
}

std::int64_t f_T(std::int64_t T, std::int64_t t) {
  require(T >= 1, ErrorCode::invalid_dimension, "f_T needs T >= 1");
  if (t < 0 || 2 * t > T - 1) return 0;
  return (T - 1 - 2 * t) / 3;
}

std::vector<StateGraph> enumerate_Gmn(int T, std::int64_t m) {
  require(T >= 1, ErrorCode::invalid_dimension, "enumerate_Gmn needs T >= 1");
  if (m < 0 || 2 * m > T - 1) return {};
  const std::int64_t n = f_T(T, m);
  const std::int64_t rest = T - 1 - 2 * m - 3 * n;
  std::set<IntVec> seen;
  std::vector<StateGraph> out;
  constexpr std::array<std::array<int, 2>, 3> pairs{{{1, 2}, {2, 3}, {1, 3}}};
  for (const auto& pair : pairs) {
    for (const auto* tri : {&kClockwise, &kCounter}) {
      for (std::size_t place = 0; place < 3; ++place) {
        StateGraph G(3);
        G.add_edges(pair[0], pair[1], m);
        G.add_edges(pair[1], pair[0], m);
        for (const auto& e : *tri) G.add_edges(e[0], e[1], n);
        // The leftover edges follow the triangle's orientation as a path.
        for (std::int64_t r = 0; r < rest; ++r) {
          const auto& e = (*tri)[(place + static_cast<std::size_t>(r)) % 3];
          G.add_edges(e[0], e[1], 1);
        }
        if (G.edge_count() != T - 1) continue;
        bool balanced = true;
        for (int i = 1; i <= 3; ++i) balanced = balanced && std::abs(G.out_degree(i) - G.in_degree(i)) <= 1;
        if (!balanced) continue;
        GmnClass c = classify_Gmn(G);
        if (!c.member_of_script_G || c.m != m || c.n != n) continue;
        IntVec key;
        for (int i = 1; i <= 3; ++i)
          for (int j = 1; j <= 3; ++j) key.push_back(G.edges(i, j));
        if (seen.insert(key).second) out.push_back(G);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const StateGraph& a, const StateGraph& b) {
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (a.edges(i, j) != b.edges(i, j)) return a.edges(i, j) < b.edges(i, j);
    return false;
  });
  return out;
}

nlohmann::ordered_json graph_to_json(const StateGraph& G) {
  nlohmann::ordered_json j;
  j["S"] = G.S();
  auto edges = nlohmann::ordered_json::array();
  for (int i = 1; i <= G.S(); ++i)
    for (int k = 1; k <= G.S(); ++k)
      if (G.edges(i, k) > 0) edges.push_back({i, k, G.edges(i, k)});
  j["edges"] = edges;
  if (G.marks()) j["marks"] = *G.marks();
  return j;
}

std::string graph_to_dot(const StateGraph& G, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int i = 1; i <= G.S(); ++i) {
    out << "  " << i;
    if (G.marks()) out << " [label=\"" << i << " (" << (*G.marks())[static_cast<std::size_t>(i - 1)] << ")\"]";
    out << ";\n";
  }
  for (int i = 1; i <= G.S(); ++i)
    for (int k = 1; k <= G.S(); ++k)
      if (G.edges(i, k) > 0) out << "  " << i << " -> " << k << " [label=\"" << G.edges(i, k) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace thmc
