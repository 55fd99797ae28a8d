#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "thmc/fixtures.hpp"
#include "thmc/polyhedra.hpp"

namespace thmc {

struct SuiteOptions {
  std::vector<std::string> only;  // criterion ids; empty runs all
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  nlohmann::ordered_json data;
};

struct SuiteResult {
  std::vector<CriterionResult> results;
  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

struct CriterionInfo {
  std::string_view id;
  std::string_view title;
};

const std::vector<CriterionInfo>& criteria();

// Unknown ids throw invalid_argument.
CriterionResult run_criterion(std::string_view id, const SuiteOptions& options);
SuiteResult run_suite(const SuiteOptions& options);

// Individual checks shared with the command-line tool.

struct DesignCheck {
  bool shape_ok = false;
  std::size_t mismatched_entries = 0;
  // words whose reference column differs from the computed one
  std::vector<std::string> mismatched_columns;
  // reference columns are the computed columns in some other order
  bool same_column_multiset = false;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool ok() const { return shape_ok && mismatched_entries == 0; }
};

DesignCheck check_design_fixture(const fixtures::DesignFixture& f);

struct TableCheck {
  int T = 0;
  std::int64_t hilbert = 0;
  FVector f;
  bool normal = false;
  bool matches = false;
};

TableCheck check_table_row(Model model, const fixtures::TableRow& expected);

struct AppendixCheck {
  int T = 0;
  std::size_t facets = 0;
  std::size_t nonnegativity = 0;
  HyperplaneComparison comparison;
};

// Model C or D, S = 3.
AppendixCheck check_appendix(Model model, const fixtures::AppendixBlock& block);

// Invariant factors of A = A(model, S, T), with U A V = D checked on the
// way. Small matrices go through a full Smith form, larger ones through a
// lattice basis of the distinct columns.
struct SnfDiagonal {
  std::vector<Int> diagonal;  // non-zero invariant factors
  bool full_matrix = false;
  std::size_t columns = 0;
};

SnfDiagonal design_invariant_factors(Model model, int S, int T, std::size_t full_cap = 512);

}  // namespace thmc
