#include "thmc/suite.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "thmc/design.hpp"
#include "thmc/hilbert.hpp"
#include "thmc/lattice.hpp"
#include "thmc/markov.hpp"
#include "thmc/parallel.hpp"
#include "thmc/polytope_d.hpp"
#include "thmc/snf.hpp"
#include "thmc/stategraph.hpp"

namespace thmc {

bool SuiteResult::passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

nlohmann::ordered_json SuiteResult::to_json() const {
  nlohmann::ordered_json j;
  j["passed"] = passed();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["title"] = r.title;
    c["passed"] = r.passed;
    c["detail"] = r.detail;
    c["seconds"] = r.seconds;
    if (!r.data.is_null()) c["data"] = r.data;
    arr.push_back(c);
  }
  j["criteria"] = arr;
  return j;
}

DesignCheck check_design_fixture(const fixtures::DesignFixture& f) {
  DesignCheck out;
  const DesignMatrix A = build_design_matrix(f.model, f.S, f.T);
  out.rows = A.row_count();
  out.cols = A.column_count();
  out.shape_ok = f.rows.size() == A.row_count() && f.words.size() == A.column_count();
  if (!out.shape_ok) return out;
  for (std::size_t j = 0; j < A.column_count(); ++j)
    if (format_word(A.word(j), f.S) != f.words[j]) out.shape_ok = false;
  for (std::size_t i = 0; i < A.row_count(); ++i)
    if (A.rows()[i].str() != f.labels[i]) out.shape_ok = false;
  std::multiset<IntVec> computed, reference;
  for (std::size_t j = 0; j < A.column_count(); ++j) {
    IntVec ref(A.row_count());
    std::size_t diff = 0;
    for (std::size_t i = 0; i < A.row_count(); ++i) {
      ref[i] = f.rows[i][j];
      diff += A.entry(i, j) != ref[i];
    }
    out.mismatched_entries += diff;
    if (diff) out.mismatched_columns.push_back(f.words[j]);
    const auto col = A.column(j);
    computed.insert(IntVec(col.begin(), col.end()));
    reference.insert(std::move(ref));
  }
  out.same_column_multiset = computed == reference;
  return out;
}

TableCheck check_table_row(Model model, const fixtures::TableRow& expected) {
  TableCheck out;
  out.T = expected.T;
  const auto hb = hilbert_basis(model, 3, expected.T);
  out.hilbert = static_cast<std::int64_t>(hb.elements.size());
  out.normal = hb.normal;
  out.f = f_vector(distinct_columns(model, 3, expected.T));
  out.matches = out.hilbert == expected.hilbert && out.f.f == expected.f && out.f.satisfies_euler();
  return out;
}

AppendixCheck check_appendix(Model model, const fixtures::AppendixBlock& block) {
  require(model == Model::C || model == Model::D, ErrorCode::invalid_argument, "appendix data exists for models c and d");
  AppendixCheck out;
  out.T = block.T;
  const auto cols = distinct_columns(model, 3, block.T);
  const ConeStructure cone = analyze_cone(cols);
  out.facets = cone.hrep.inequalities.size();
  const auto nonneg = nonnegativity_facets(cone.hrep.inequalities, cols);
  out.nonnegativity = nonneg.size();
  out.comparison = compare_hyperplanes(cone.hrep.inequalities, block.normals, cols, nonneg);
  return out;
}

SnfDiagonal design_invariant_factors(Model model, int S, int T, std::size_t full_cap) {
  SnfDiagonal out;
  const WordSpace space = word_space(model, S, T);
  if (space.size() <= full_cap) {
    const DesignMatrix A = build_design_matrix(model, S, T);
    std::vector<IntVec> cols;
    for (std::size_t j = 0; j < A.column_count(); ++j) cols.emplace_back(A.column(j).begin(), A.column(j).end());
    const SnfResult r = smith_normal_form(IntMat::from_columns(cols));
    out.diagonal.assign(r.diagonal.begin(), r.diagonal.begin() + static_cast<std::ptrdiff_t>(r.rank));
    out.full_matrix = true;
    out.columns = cols.size();
    return out;
  }
  const auto cols = distinct_columns(model, S, T);
  out.columns = cols.size();
  if (cols.size() <= full_cap) {
    const SnfResult r = smith_normal_form(IntMat::from_columns(cols));
    out.diagonal.assign(r.diagonal.begin(), r.diagonal.begin() + static_cast<std::ptrdiff_t>(r.rank));
    return out;
  }
  const Lattice L = Lattice::from_generators(cols);
  out.diagonal = L.diagonal();
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Collector {
  std::mutex mutex;
  std::vector<std::string> failures;
  void fail(std::string s) {
    std::lock_guard<std::mutex> lock(mutex);
    failures.push_back(std::move(s));
  }
};

std::string join_failures(std::vector<std::string> f, std::size_t limit = 8) {
  std::sort(f.begin(), f.end());
  std::ostringstream out;
  for (std::size_t i = 0; i < f.size() && i < limit; ++i) out << (i ? "; " : "") << f[i];
  if (f.size() > limit) out << "; ... (" << f.size() << " total)";
  return out.str();
}

std::string ints(const std::vector<std::int64_t>& v) { return format_vector(v, " "); }

void run_design(CriterionResult& r, const SuiteOptions&) {
  std::vector<std::string> bad;
  std::size_t entries = 0;
  for (Model m : {Model::A, Model::B, Model::C, Model::D}) {
    const auto f = fixtures::design(m);
    const auto c = check_design_fixture(f);
    entries += c.rows * c.cols;
    if (!c.ok()) {
      std::string msg = std::string(1, model_letter(m)) + ": ";
      if (!c.shape_ok) {
        msg += "shape/labels differ";
      } else {
        msg += std::to_string(c.mismatched_entries) + " entries in " + std::to_string(c.mismatched_columns.size()) + " columns differ";
        if (c.same_column_multiset) msg += ", reference columns are a permutation of the computed ones";
      }
      bad.push_back(msg);
    }
    r.data[std::string(1, model_letter(m))] = {{"rows", c.rows},
                                               {"cols", c.cols},
                                               {"ok", c.ok()},
                                               {"mismatched_entries", c.mismatched_entries},
                                               {"mismatched_columns", c.mismatched_columns},
                                               {"same_column_multiset", c.same_column_multiset}};
  }
  r.passed = bad.empty();
  r.detail = r.passed ? "4 matrices, " + std::to_string(entries) + " entries equal" : join_failures(bad);
}

void run_snf(CriterionResult& r, const SuiteOptions& opt) {
  std::vector<std::tuple<Model, int, int>> cases;
  for (int S : {2, 3, 4})
    for (int T = 3; T <= 10; ++T) cases.emplace_back(Model::B, S, T);
  for (int T = 4; T <= 12; ++T) cases.emplace_back(Model::D, 3, T);
  Collector c;
  std::vector<SnfDiagonal> results(cases.size());
  parallel_for(cases.size(), opt.jobs, [&](std::size_t i) {
    auto [m, S, T] = cases[i];
    results[i] = design_invariant_factors(m, S, T);
    const std::size_t expect_rank = row_count(m, S);
    std::vector<Int> want(expect_rank, Int(1));
    want.back() = T - 1;
    if (results[i].diagonal != want) {
      std::ostringstream s;
      s << model_letter(m) << " S=" << S << " T=" << T << " diagonal";
      for (const auto& d : results[i].diagonal) s << ' ' << d;
      c.fail(s.str());
    }
  });
  std::size_t full = 0;
  for (const auto& d : results) full += d.full_matrix;
  r.passed = c.failures.empty();
  r.detail = r.passed ? std::to_string(cases.size()) + " cases with diagonal (1,...,1,T-1); " + std::to_string(full) +
                            " via the full matrix, the rest via distinct columns"
                      : join_failures(c.failures);
  r.data["cases"] = cases.size();
  r.data["full_matrix"] = full;
}

void run_lattice(CriterionResult& r, const SuiteOptions& opt) {
  std::vector<std::tuple<Model, int, int>> cases;
  for (int T = 4; T <= 10; ++T) {
    cases.emplace_back(Model::B, 2, T);
    cases.emplace_back(Model::B, 3, T);
    cases.emplace_back(Model::D, 3, T);
  }
  Collector c;
  std::vector<std::size_t> members(cases.size());
  parallel_for(cases.size(), opt.jobs, [&](std::size_t i) {
    auto [m, S, T] = cases[i];
    const auto cols = distinct_columns(m, S, T);
    const Lattice L = Lattice::from_generators(cols);
    std::optional<SnfResult> snf;
    if (cols.size() <= 512) snf = smith_normal_form(IntMat::from_columns(cols));
    std::mt19937_64 rng(opt.seed * 1000003 + i);
    std::uniform_int_distribution<std::int64_t> entry(-3 * T, 3 * T);
    for (int s = 0; s < 500; ++s) {
      IntVec y(row_count(m, S));
      for (auto& v : y) v = entry(rng);
      // Half of the samples are pushed onto the residue class of zero.
      if (s % 2 == 0) y[0] -= ((sum(y) % (T - 1)) + (T - 1)) % (T - 1);
      const bool expect = residue_test(y, T);
      const bool got = L.contains(y);
      members[i] += got;
      if (got != expect || (snf && lattice_membership(*snf, y) != expect)) {
        c.fail(std::string(1, model_letter(m)) + " S=" + std::to_string(S) + " T=" + std::to_string(T) + " y=" + ints(y));
      }
    }
  });
  std::size_t total_members = 0;
  for (auto n : members) total_members += n;
  r.passed = c.failures.empty();
  r.detail = r.passed ? std::to_string(cases.size() * 500) + " samples agree (" + std::to_string(total_members) + " lattice points)"
                      : join_failures(c.failures);
}

void run_witnesses(CriterionResult& r, const SuiteOptions& opt) {
  std::vector<std::tuple<Model, int, int>> cases;
  for (int T = 4; T <= 8; ++T) cases.emplace_back(Model::A, 3, T);
  for (int S : {2, 3})
    for (int T = 3; T <= 8; ++T) cases.emplace_back(Model::B, S, T);
  Collector c;
  parallel_for(cases.size(), opt.jobs, [&](std::size_t i) {
    auto [m, S, T] = cases[i];
    const std::string tag = std::string(1, model_letter(m)) + " S=" + std::to_string(S) + " T=" + std::to_string(T);
    try {
      if (!nonnormality_witness(m, S, T).verified()) c.fail(tag);
    } catch (const Error& e) {
      c.fail(tag + ": " + e.what());
    }
  });
  r.passed = c.failures.empty();
  r.detail = r.passed ? std::to_string(cases.size()) + " witnesses: in cone, in lattice, not in semigroup" : join_failures(c.failures);
}

void run_table(CriterionResult& r, const SuiteOptions& opt, Model m) {
  const auto rows = fixtures::table(m);
  std::vector<TableCheck> checks(rows.size());
  parallel_for(rows.size(), opt.jobs, [&](std::size_t i) { checks[i] = check_table_row(m, rows[i]); });
  std::vector<std::string> bad;
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& k = checks[i];
    arr.push_back({{"T", k.T}, {"hilbert", k.hilbert}, {"f", k.f.f}, {"normal", k.normal}, {"match", k.matches}});
    if (!k.matches)
      bad.push_back("T=" + std::to_string(k.T) + " got " + std::to_string(k.hilbert) + "; " + ints(k.f.f) + " want " +
                    std::to_string(rows[i].hilbert) + "; " + ints(rows[i].f));
  }
  r.data["rows"] = arr;
  r.passed = bad.empty() && !rows.empty();
  r.detail = r.passed ? std::to_string(rows.size()) + " rows equal (T=" + std::to_string(rows.front().T) + ".." +
                            std::to_string(rows.back().T) + ")"
                      : join_failures(bad);
}

void run_hyperplanes(CriterionResult& r, const SuiteOptions& opt) {
  const auto table = fixtures::table(Model::D);
  const auto blocks = fixtures::appendix(Model::D);
  std::vector<AppendixCheck> checks(blocks.size());
  parallel_for(blocks.size(), opt.jobs, [&](std::size_t i) { checks[i] = check_appendix(Model::D, blocks[i]); });
  std::vector<std::string> bad;
  for (const auto& k : checks) {
    std::int64_t f_last = -1;
    for (const auto& row : table)
      if (row.T == k.T) f_last = row.f.back();
    const auto& cmp = k.comparison;
    if (!cmp.equal() || cmp.listed_invalid != 0 || k.nonnegativity != 6 ||
        static_cast<std::int64_t>(k.facets) != f_last) {
      bad.push_back("T=" + std::to_string(k.T) + " matched " + std::to_string(cmp.matched) + "/" +
                    std::to_string(cmp.listed) + ", missing " + std::to_string(cmp.missing.size()) + ", unexpected " +
                    std::to_string(cmp.unexpected.size()) + ", facets " + std::to_string(k.facets) + " vs f " +
                    std::to_string(f_last));
    }
  }
  // Model c: reported, not asserted.
  const auto cblocks = fixtures::appendix(Model::C);
  std::vector<AppendixCheck> cchecks(cblocks.size());
  parallel_for(cblocks.size(), opt.jobs, [&](std::size_t i) { cchecks[i] = check_appendix(Model::C, cblocks[i]); });
  auto report = nlohmann::ordered_json::array();
  std::size_t c_matched = 0, c_listed = 0;
  for (const auto& k : cchecks) {
    const auto& cmp = k.comparison;
    c_matched += cmp.matched;
    c_listed += cmp.listed;
    report.push_back({{"T", k.T},
                      {"facets", k.facets},
                      {"nonnegativity", k.nonnegativity},
                      {"listed", cmp.listed},
                      {"matched", cmp.matched},
                      {"missing", cmp.missing.size()},
                      {"unexpected", cmp.unexpected.size()},
                      {"listed_invalid", cmp.listed_invalid}});
  }
  r.data["model_c_report"] = report;
  r.passed = bad.empty() && blocks.size() == 12;
  r.detail = (r.passed ? "model d: " + std::to_string(blocks.size()) + " blocks equal, facet counts match f_4"
                       : join_failures(bad)) +
             "; model c (report): " + std::to_string(c_matched) + "/" + std::to_string(c_listed) + " listed normals are facets";
}

void run_polytope(CriterionResult& r, const SuiteOptions& opt) {
  Collector c;
  std::vector<int> Ts{4, 5, 6, 7, 8};
  parallel_for(Ts.size(), opt.jobs, [&](std::size_t i) {
    const auto rep = integer_points_report(Ts[i]);
    if (!rep.equal()) c.fail("integer points T=" + std::to_string(Ts[i]));
  });
  std::vector<std::pair<int, int>> dil;
  for (int T : Ts)
    for (int k = 1; k <= 3; ++k) dil.emplace_back(T, k);
  std::vector<std::size_t> inside(dil.size());
  parallel_for(dil.size(), opt.jobs, [&](std::size_t i) {
    const auto rep = verify_dilation_slice(dil[i].first, dil[i].second, 200, opt.seed);
    inside[i] = rep.inside;
    if (!rep.ok())
      c.fail("dilation T=" + std::to_string(dil[i].first) + " k=" + std::to_string(dil[i].second) + ": " +
             std::to_string(rep.counterexamples.size()) + " counterexamples");
  });
  std::vector<int> big;
  for (int T = 13; T <= 25; ++T) big.push_back(T);
  std::vector<VertexClassification> cls(big.size());
  parallel_for(big.size(), opt.jobs, [&](std::size_t i) {
    cls[i] = classify_vertices(big[i], big[i] == 13);
    const auto dec = verify_middle_class_decompositions(big[i]);
    const std::string tag = "T=" + std::to_string(big[i]);
    if (cls[i].middle_count != 0) c.fail("middle-class vertices at " + tag);
    if (cls[i].outside_script_G != 0) c.fail("vertices with two two-cycle types at " + tag);
    if (dec.failures != 0) c.fail("decomposition failures at " + tag);
  });
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : cls) arr.push_back(classification_to_json(v));
  r.data["classification"] = arr;
  std::size_t in_total = 0;
  for (auto n : inside) in_total += n;
  r.passed = c.failures.empty();
  r.detail = r.passed ? "integer points = columns for T=4..8; " + std::to_string(dil.size() * 200) +
                            " slice samples agree (" + std::to_string(in_total) +
                            " inside kP); no middle-class vertices for T=13..25"
                      : join_failures(c.failures);
}

void run_euler(CriterionResult& r, const SuiteOptions& opt) {
  std::vector<int> Ts{4, 5, 6, 7, 8, 9, 10};
  Collector c;
  std::vector<std::size_t> counts(Ts.size());
  parallel_for(Ts.size(), opt.jobs, [&](std::size_t i) {
    const int T = Ts[i];
    for_each_column(Model::D, 3, T, [&](const Word& w, const IntVec& col) {
      ++counts[i];
      try {
        const Word back = eulerian_path(graph_of_column(Model::D, 3, col));
        if (back.length() != T || column_of_word(Model::D, 3, T, back) != col)
          c.fail("T=" + std::to_string(T) + " word " + format_word(w, 3));
      } catch (const Error& e) {
        c.fail("T=" + std::to_string(T) + " word " + format_word(w, 3) + ": " + e.what());
      }
    });
  });
  std::size_t total = 0;
  for (auto n : counts) total += n;
  r.passed = c.failures.empty();
  r.detail = r.passed ? std::to_string(total) + " columns reconstructed" : join_failures(c.failures);
}

void run_stabilization(CriterionResult& r, const SuiteOptions&) {
  const auto rep = fvector_stabilization_report(4, 15);
  std::map<int, std::vector<std::int64_t>> f;
  for (const auto& [T, fv] : rep.rows) f[T] = fv.f;
  std::map<int, std::vector<std::int64_t>> want;
  for (const auto& row : fixtures::table(Model::D)) want[row.T] = row.f;
  std::vector<std::string> bad;
  if (f[12] != f[14]) bad.push_back("f(12) != f(14)");
  if (f[11] != f[15]) bad.push_back("f(11) != f(15)");
  for (int T : {11, 12, 14, 15})
    if (f[T] != want[T]) bad.push_back("f(" + std::to_string(T) + ") differs from the table");
  for (const auto& [a, b] : rep.repeats)
    if (b <= 7) bad.push_back("unexpected repeat " + std::to_string(a) + "=" + std::to_string(b));
  r.data = stabilization_to_json(rep);
  r.passed = bad.empty();
  std::string reps;
  for (const auto& [a, b] : rep.repeats) reps += (reps.empty() ? "" : ", ") + std::to_string(a) + "=" + std::to_string(b);
  r.detail = r.passed ? "repeats among T=4..15: " + reps : join_failures(bad);
}

void run_hilbert_oracle(CriterionResult& r, const SuiteOptions& opt) {
  std::vector<std::pair<Model, int>> cases{{Model::D, 4}, {Model::D, 5}, {Model::D, 6}, {Model::C, 4}, {Model::C, 5}};
  Collector c;
  std::vector<std::size_t> sizes(cases.size());
  parallel_for(cases.size(), opt.jobs, [&](std::size_t i) {
    auto [m, T] = cases[i];
    const auto hb = hilbert_basis(m, 3, T);
    const auto oracle = hilbert_basis_bruteforce_oracle(m, 3, T, 3);
    sizes[i] = hb.elements.size();
    if (hb.elements != oracle)
      c.fail(std::string(1, model_letter(m)) + " T=" + std::to_string(T) + ": " + std::to_string(hb.elements.size()) +
             " vs oracle " + std::to_string(oracle.size()));
  });
  r.passed = c.failures.empty();
  std::string s;
  for (std::size_t i = 0; i < cases.size(); ++i)
    s += (i ? ", " : "") + std::string(1, model_letter(cases[i].first)) + std::to_string(cases[i].second) + ":" +
         std::to_string(sizes[i]);
  r.detail = r.passed ? "equal sets " + s : join_failures(c.failures);
}

void run_markov(CriterionResult& r, const SuiteOptions& opt) {
  struct Case {
    int S, T;
    std::int64_t D, bound;
  };
  std::vector<Case> cases;
  for (int T = 4; T <= 8; ++T) cases.push_back({3, T, 3, 6});
  cases.push_back({4, 3, 2, 3});
  cases.push_back({5, 3, 2, 4});
  std::vector<ConnectivityReport> reps(cases.size());
  parallel_for(cases.size(), opt.jobs, [&](std::size_t i) {
    reps[i] = minimal_connecting_degree(Model::D, cases[i].S, cases[i].T, cases[i].D);
  });
  std::vector<std::string> bad;
  auto arr = nlohmann::ordered_json::array();
  std::string summary;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& rep = reps[i];
    const std::string tag = "S=" + std::to_string(cases[i].S) + " T=" + std::to_string(cases[i].T);
    if (!rep.moves_sound())
      bad.push_back(tag + ": kernel " + std::to_string(rep.kernel_violations) + ", walk " +
                    std::to_string(rep.walk_violations) + ", balance " + std::to_string(rep.balance_violations));
    arr.push_back({{"S", rep.S},
                   {"T", rep.T},
                   {"D", rep.D},
                   {"minimal_k", rep.minimal_k},
                   {"expected_at_most", cases[i].bound},
                   {"within_expectation", rep.minimal_k <= cases[i].bound},
                   {"fibers_checked", rep.fibers_checked},
                   {"moves_verified", rep.moves_verified}});
    summary += (i ? ", " : "") + tag + " k=" + std::to_string(rep.minimal_k);
  }
  r.data["reports"] = arr;
  r.passed = bad.empty();
  r.detail = r.passed ? "all moves in the kernel with non-negative walks; " + summary : join_failures(bad);
}

struct Entry {
  CriterionInfo info;
  std::function<void(CriterionResult&, const SuiteOptions&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {{"design", "design matrices equal the reference fixtures"}, run_design},
      {{"snf", "Smith normal form diagonal (1,...,1,T-1)"}, run_snf},
      {{"lattice", "lattice membership agrees with the residue test"}, run_lattice},
      {{"witnesses", "non-normality witnesses verify"}, run_witnesses},
      {{"table_d", "Hilbert basis sizes and f-vectors, model d"},
       [](CriterionResult& r, const SuiteOptions& o) { run_table(r, o, Model::D); }},
      {{"table_c", "Hilbert basis sizes and f-vectors, model c"},
       [](CriterionResult& r, const SuiteOptions& o) { run_table(r, o, Model::C); }},
      {{"hyperplanes", "facet normals equal the reference hyperplanes"}, run_hyperplanes},
      {{"polytope", "integer points, dilations and vertex classes"}, run_polytope},
      {{"euler", "Eulerian path round trip"}, run_euler},
      {{"stabilization", "f-vector repeats"}, run_stabilization},
      {{"hilbert_oracle", "Hilbert basis equals the brute-force oracle"}, run_hilbert_oracle},
      {{"markov", "Markov degree probes"}, run_markov},
  };
  return entries;
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> infos = [] {
    std::vector<CriterionInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

CriterionResult run_criterion(std::string_view id, const SuiteOptions& options) {
  for (const auto& e : registry()) {
    if (e.info.id != id) continue;
    CriterionResult r;
    r.id = std::string(e.info.id);
    r.title = std::string(e.info.title);
    const auto start = Clock::now();
    try {
      e.run(r, options);
    } catch (const std::exception& ex) {
      r.passed = false;
      r.detail = std::string("error: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
  }
  fail(ErrorCode::invalid_argument, "unknown criterion '" + std::string(id) + "'");
}

SuiteResult run_suite(const SuiteOptions& options) {
  for (const auto& id : options.only) {
    bool known = std::any_of(criteria().begin(), criteria().end(), [&](const auto& c) { return c.id == id; });
    require(known, ErrorCode::invalid_argument, "unknown criterion '" + id + "'");
  }
  SuiteResult out;
  for (const auto& c : criteria()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), c.id) == options.only.end())
      continue;
    out.results.push_back(run_criterion(c.id, options));
  }
  return out;
}

}  // namespace thmc
