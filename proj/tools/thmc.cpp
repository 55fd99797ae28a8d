#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "thmc/design.hpp"
#include "thmc/fixtures.hpp"
#include "thmc/hilbert.hpp"
#include "thmc/markov.hpp"
#include "thmc/parallel.hpp"
#include "thmc/polytope_d.hpp"
#include "thmc/stategraph.hpp"
#include "thmc/suite.hpp"

using namespace thmc;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    long long n = std::stoll(v);
    if (n > 0) return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(name) + " must be a positive integer");
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int t = std::stoi(text);
      return {t, t};
    }
    int a = std::stoi(text.substr(0, dots));
    int b = std::stoi(text.substr(dots + 2));
    if (a > b) throw UsageError("empty T range '" + text + "'");
    return {a, b};
  } catch (const std::invalid_argument&) {
    throw UsageError("bad T range '" + text + "'");
  }
}

Model model_arg(const std::string& s) {
  try {
    return parse_model(s);
  } catch (const Error&) {
    throw UsageError("unknown model '" + s + "' (expected a, b, c or d)");
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct Common {
  std::string model = "d";
  int S = 3;
  std::string T = "4";
  std::string format = "text";
  std::string output;
  unsigned jobs = 0;
};

unsigned jobs_of(const Common& c) {
  if (c.jobs > 0) return c.jobs;
  return static_cast<unsigned>(env_size("THMC_JOBS", std::max(1u, std::thread::hardware_concurrency())));
}

int single_T(const Common& c) {
  auto [a, b] = parse_range(c.T);
  if (a != b) throw UsageError("this command takes a single T");
  return a;
}

int cmd_design(const Common& c, bool check_fixture) {
  const Model m = model_arg(c.model);
  const int T = single_T(c);
  const auto A = build_design_matrix(m, c.S, T, env_size("THMC_MAX_COLUMNS", kDefaultMaxColumns));
  Output out(c.output);
  if (c.format == "json")
    out.stream() << design_to_json(A).dump(2) << '\n';
  else
    out.stream() << design_to_csv(A);
  if (!check_fixture) return kOk;
  const auto f = fixtures::design(m);
  if (f.S != c.S || f.T != T) {
    std::cerr << "no fixture for model " << model_letter(m) << " S=" << c.S << " T=" << T << '\n';
    return kUsage;
  }
  const auto check = check_design_fixture(f);
  std::cerr << (check.ok() ? "PASS" : "FAIL") << " design " << model_letter(m) << ' ' << check.rows << 'x' << check.cols
            << ", " << check.mismatched_entries << " entries differ\n";
  return check.ok() ? kOk : kFailed;
}

int cmd_tables(const Common& c, const std::string& fixture_file) {
  const Model m = model_arg(c.model);
  if (m != Model::C && m != Model::D) throw UsageError("tables exist for models c and d");
  auto [a, b] = parse_range(c.T);
  std::vector<fixtures::TableRow> rows;
  if (fixture_file.empty()) {
    rows = fixtures::table(m);
  } else {
    std::ifstream in(fixture_file);
    if (!in) throw UsageError("cannot open " + fixture_file);
    std::stringstream ss;
    ss << in.rdbuf();
    rows = fixtures::parse_table(ss.str());
  }
  std::vector<fixtures::TableRow> wanted;
  for (int T = a; T <= b; ++T) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.T == T; });
    if (it == rows.end()) throw UsageError("no table row for T=" + std::to_string(T));
    wanted.push_back(*it);
  }
  std::vector<TableCheck> checks(wanted.size());
  parallel_for(wanted.size(), jobs_of(c), [&](std::size_t i) { checks[i] = check_table_row(m, wanted[i]); });
  Output out(c.output);
  bool all = true;
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& k = checks[i];
    all = all && k.matches;
    if (c.format == "json") {
      j.push_back({{"T", k.T}, {"hilbert", k.hilbert}, {"f", k.f.f}, {"normal", k.normal}, {"pass", k.matches}});
    } else {
      out.stream() << (k.matches ? "PASS" : "FAIL") << " T=" << k.T << " HB=" << k.hilbert << " f=("
                   << format_vector(k.f.f, ",") << ")";
      if (!k.matches)
        out.stream() << " expected HB=" << wanted[i].hilbert << " f=(" << format_vector(wanted[i].f, ",") << ")";
      out.stream() << '\n';
    }
  }
  if (c.format == "json") out.stream() << j.dump(2) << '\n';
  return all ? kOk : kFailed;
}

int cmd_verify(const Common& c, const std::vector<std::string>& only, std::uint64_t seed) {
  SuiteOptions opt;
  opt.only = only;
  opt.seed = seed;
  opt.jobs = jobs_of(c);
  for (const auto& id : only) {
    if (std::none_of(criteria().begin(), criteria().end(), [&](const auto& k) { return k.id == id; }))
      throw UsageError("unknown criterion '" + id + "'");
  }
  const auto res = run_suite(opt);
  Output out(c.output);
  if (c.format == "json") {
    out.stream() << res.to_json().dump(2) << '\n';
  } else {
    for (const auto& r : res.results)
      out.stream() << (r.passed ? "PASS" : "FAIL") << ' ' << r.id << " (" << std::fixed << std::setprecision(1)
                   << r.seconds << "s): " << r.detail << '\n';
  }
  return res.passed() ? kOk : kFailed;
}

int cmd_hyperplanes(const Common& c, bool check_fixture) {
  const Model m = model_arg(c.model);
  if (m != Model::C && m != Model::D) throw UsageError("hyperplanes are available for models c and d");
  if (c.S != 3) throw UsageError("hyperplanes need S = 3");
  const int T = single_T(c);
  const auto cols = distinct_columns(m, 3, T);
  const auto cone = analyze_cone(cols);
  Output out(c.output);
  if (c.format == "json")
    out.stream() << hrep_to_json(cone.hrep).dump(2) << '\n';
  else
    out.stream() << normals_as_columns(cone.hrep.inequalities);
  if (!check_fixture) return kOk;
  auto block = fixtures::appendix_block(m, T);
  if (!block) throw UsageError("no reference hyperplanes for T=" + std::to_string(T));
  const auto k = check_appendix(m, *block);
  const auto& cmp = k.comparison;
  const bool ok = cmp.equal() && cmp.listed_invalid == 0;
  std::cerr << (m == Model::D ? (ok ? "PASS" : "FAIL") : "REPORT") << " hyperplanes " << model_letter(m) << " T=" << T
            << ": facets " << k.facets << " (" << k.nonnegativity << " non-negativity), listed " << cmp.listed
            << ", matched " << cmp.matched << ", missing " << cmp.missing.size() << ", unexpected "
            << cmp.unexpected.size() << ", invalid " << cmp.listed_invalid << '\n';
  if (m == Model::C) return kOk;
  return ok ? kOk : kFailed;
}

int cmd_hilbert(const Common& c, bool no_range) {
  const Model m = model_arg(c.model);
  HilbertOptions opt;
  opt.enforce_range = !no_range;
  const auto r = hilbert_basis(m, c.S, single_T(c), opt);
  Output out(c.output);
  if (c.format == "csv")
    out.stream() << vectors_to_csv(r.elements);
  else
    out.stream() << hilbert_to_json(r).dump(2) << '\n';
  return kOk;
}

int cmd_witness(const Common& c) {
  const Model m = model_arg(c.model);
  const auto w = nonnormality_witness(m, c.S, single_T(c));
  Output out(c.output);
  nlohmann::ordered_json j;
  j["model"] = std::string(1, model_letter(m));
  j["S"] = w.S;
  j["T"] = w.T;
  j["h"] = w.h;
  j["in_cone"] = w.in_cone;
  j["in_lattice"] = w.in_lattice;
  j["not_in_semigroup"] = w.not_in_semigroup;
  out.stream() << j.dump(2) << '\n';
  return w.verified() ? kOk : kFailed;
}

int cmd_markov(const Common& c, std::int64_t D, std::int64_t moves_k) {
  const Model m = model_arg(c.model);
  MarkovCaps caps;
  caps.max_degree = static_cast<std::int64_t>(env_size("THMC_MAX_FIBER_DEGREE", 4));
  caps.max_words = env_size("THMC_MAX_WORDS", caps.max_words);
  const int T = single_T(c);
  Output out(c.output);
  if (moves_k > 0) {
    out.stream() << moves_to_text(moves_up_to_degree(m, c.S, T, moves_k, caps));
    return kOk;
  }
  const auto rep = minimal_connecting_degree(m, c.S, T, D, caps);
  if (c.format == "json") {
    out.stream() << connectivity_to_json(rep).dump(2) << '\n';
  } else {
    out.stream() << "model " << model_letter(m) << " S=" << c.S << " T=" << T << " D=" << D << ": minimal_k "
                 << rep.minimal_k << " over " << rep.fibers_checked << " fibers (degree-capped evidence), "
                 << rep.moves_verified << " moves checked\n";
  }
  return rep.moves_sound() ? kOk : kFailed;
}

int cmd_graph(const Common& c, const std::string& word, const std::string& format) {
  const Word w = parse_word(word);
  const StateGraph G = graph_of_word(w, c.S);
  Output out(c.output);
  if (format == "dot") {
    out.stream() << graph_to_dot(G);
    return kOk;
  }
  auto j = graph_to_json(G);
  if (c.S == 3 && !G.has_self_loops()) {
    const auto cls = classify_Gmn(G);
    j["m"] = cls.m;
    j["n"] = cls.n;
    j["one_two_cycle_type"] = cls.member_of_script_G;
    j["eulerian_path"] = format_word(eulerian_path(G), 3);
  }
  out.stream() << j.dump(2) << '\n';
  return kOk;
}

int cmd_snf(const Common& c) {
  const Model m = model_arg(c.model);
  const int T = single_T(c);
  const auto d = design_invariant_factors(m, c.S, T);
  Output out(c.output);
  nlohmann::ordered_json j;
  j["model"] = std::string(1, model_letter(m));
  j["S"] = c.S;
  j["T"] = T;
  std::vector<std::string> diag;
  for (const auto& x : d.diagonal) diag.push_back(x.get_str());
  j["diagonal"] = diag;
  j["full_matrix"] = d.full_matrix;
  out.stream() << j.dump(2) << '\n';
  return kOk;
}

int cmd_polytope(const Common& c) {
  auto [a, b] = parse_range(c.T);
  Output out(c.output);
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  bool ok = true;
  for (int T = a; T <= b; ++T) {
    const auto cls = classify_vertices(T);
    ok = ok && (T < 13 || cls.middle_count == 0);
    j.push_back(classification_to_json(cls));
  }
  nlohmann::ordered_json top;
  top["classification"] = j;
  if (b > a) top["stabilization"] = stabilization_to_json(fvector_stabilization_report(std::max(a, 4), b));
  out.stream() << top.dump(2) << '\n';
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric homogeneous Markov chain models: design matrices, polyhedra, Hilbert and Markov bases"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* sub, bool range) {
    sub->add_option("--model", c.model, "model letter a, b, c or d")->capture_default_str();
    sub->add_option("--S", c.S, "number of states")->capture_default_str();
    sub->add_option("--T", c.T, range ? "path length or range a..b" : "path length")->capture_default_str();
    sub->add_option("--format", c.format, "output format")->capture_default_str();
    sub->add_option("-o,--output", c.output, "write to a file instead of stdout");
    sub->add_option("--jobs", c.jobs, "worker threads (default: THMC_JOBS or all cores)");
  };

  bool check_fixture = false;
  auto* design = app.add_subcommand("design", "write a design matrix (csv or json)");
  common(design, false);
  design->add_flag("--check-fixture", check_fixture, "compare with the shipped reference matrix");

  std::string fixture_file;
  auto* tables = app.add_subcommand("tables", "recompute Hilbert basis sizes and f-vectors and compare with the reference tables");
  common(tables, true);
  tables->add_option("--fixture", fixture_file, "read the reference table from this file");

  std::vector<std::string> only;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  common(verify, true);
  verify->add_option("--only", only, "criterion ids")->delimiter(',');
  verify->add_option("--seed", seed, "seed for sampled checks")->capture_default_str();

  auto* hyper = app.add_subcommand("hyperplanes", "facet normals of the transition cone");
  common(hyper, false);
  hyper->add_flag("--check-fixture", check_fixture, "compare with the shipped reference hyperplanes");

  bool no_range = false;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis (csv or json)");
  common(hilbert, false);
  hilbert->add_flag("--no-range-check", no_range, "allow T outside the default range");

  auto* witness = app.add_subcommand("witness", "non-normality witness for models a and b");
  common(witness, false);

  std::int64_t D = 2, moves_k = 0;
  auto* markov = app.add_subcommand("markov", "fiber connectivity probe");
  common(markov, false);
  markov->add_option("--D", D, "largest fiber degree")->capture_default_str();
  markov->add_option("--moves", moves_k, "print all moves up to this degree instead");

  std::string word, graph_format = "json";
  auto* graph = app.add_subcommand("graph", "state graph of a word");
  common(graph, false);
  graph->add_option("--word", word, "word such as 123131")->required();
  graph->add_option("--graph-format", graph_format, "json or dot")->capture_default_str();

  auto* snf = app.add_subcommand("snf", "invariant factors of a design matrix");
  common(snf, false);

  auto* polytope = app.add_subcommand("polytope", "vertex classes of the model d polytope for S = 3");
  common(polytope, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*design) return cmd_design(c, check_fixture);
    if (*tables) return cmd_tables(c, fixture_file);
    if (*verify) return cmd_verify(c, only, seed);
    if (*hyper) return cmd_hyperplanes(c, check_fixture);
    if (*hilbert) return cmd_hilbert(c, no_range);
    if (*witness) return cmd_witness(c);
    if (*markov) return cmd_markov(c, D, moves_k);
    if (*graph) return cmd_graph(c, word, graph_format);
    if (*snf) return cmd_snf(c);
    if (*polytope) return cmd_polytope(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::witness_verification_failed:
      case ErrorCode::internal:
        return kFailed;
      default:
        return kUsage;
    }
  }
  return kUsage;
}
