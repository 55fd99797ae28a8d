#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "thmc/polyhedra.hpp"
#include "thmc/stategraph.hpp"
#include "thmc/types.hpp"

// Structure of the loop-free, initial-free column polytope for S = 3.
namespace thmc {

struct DilationReport {
  int T = 0;
  std::int64_t k = 0;
  std::size_t samples = 0;
  std::size_t inside = 0;  // points found in kP
  std::vector<IntVec> counterexamples;  // scaled by `denominator`
  std::int64_t denominator = 1;
  bool ok() const { return counterexamples.empty(); }
};

// Samples exact rational points on and around H_k and checks
// x in kP  <=>  x in C and sum x = k(T-1), both sides by LP.
DilationReport verify_dilation_slice(int T, std::int64_t k, std::size_t samples, std::uint64_t seed = 1);

struct IntegerPointReport {
  int T = 0;
  std::size_t box_points = 0;  // integer points with sum T-1
  std::size_t in_polytope = 0;
  std::size_t columns = 0;
  std::vector<IntVec> extra;    // in P but not a column
  std::vector<IntVec> missing;  // column not found in P
  bool equal() const { return extra.empty() && missing.empty(); }
};

IntegerPointReport integer_points_report(int T);
bool integer_points_equal_columns(int T);

struct DegreeBalance {
  std::int64_t k = 0;
  bool divisible = false;
  bool ok = false;
};

DegreeBalance check_degree_balance(std::span<const std::int64_t> x, int T);

struct VertexClass {
  IntVec vertex;
  GmnClass cls;
  bool middle = false;  // 3 <= m <= p - 3
};

struct VertexClassification {
  int T = 0;
  std::int64_t p = 0;
  std::vector<VertexClass> vertices;
  std::size_t middle_count = 0;
  std::size_t outside_script_G = 0;  // vertices with two two-cycle types
  std::size_t lp_vertex_count = 0;   // cross-check by per-point LP, 0 if skipped
};

VertexClassification classify_vertices(int T, bool lp_cross_check = false);

// Middle-class graphs x in G_{q,f(q)} written as (y + z)/2 with y in
// G_{q+3,f(q+3)} and z in G_{q-3,f(q-3)}, both columns.
struct DecompositionReport {
  int T = 0;
  std::size_t checked = 0;
  std::size_t failures = 0;
};

struct Decomposition {
  StateGraph x, y, z;
};

std::optional<Decomposition> middle_class_decomposition(const StateGraph& x);
DecompositionReport verify_middle_class_decompositions(int T);

struct StabilizationReport {
  std::vector<std::pair<int, FVector>> rows;
  std::vector<std::pair<int, int>> repeats;  // T1 < T2 with equal f-vectors
};

StabilizationReport fvector_stabilization_report(int T_min, int T_max);

nlohmann::ordered_json classification_to_json(const VertexClassification& c);
nlohmann::ordered_json stabilization_to_json(const StabilizationReport& r);

}  // namespace thmc
