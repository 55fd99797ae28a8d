#include "thmc/polytope_d.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <map>
#include <set>

#include "thmc/design.hpp"
#include "thmc/exact_lp.hpp"

namespace thmc {

namespace {

constexpr int kS = 3;

std::vector<IntVec> columns_of(int T) {
  require(T >= 4, ErrorCode::invalid_dimension, "the polytope checks need T >= 4");
  return distinct_columns(Model::D, kS, T);
}

IntVec column_of_graph(const StateGraph& G) {
  IntVec x(row_count(Model::D, kS), 0);
  for (int i = 1; i <= kS; ++i)
    for (int j = 1; j <= kS; ++j)
      if (i != j) x[transition_row(Model::D, kS, i, j)] = G.edges(i, j);
  return x;
}

std::vector<IntVec> scaled(const std::vector<IntVec>& cols, std::int64_t k) {
  std::vector<IntVec> out = cols;
  for (auto& c : out)
    for (auto& v : c) v = checked_mul(v, k);
  return out;
}

constexpr std::array<std::array<int, 3>, 2> kTriangles{{{1, 2, 3}, {1, 3, 2}}};

void add_triangle(StateGraph& G, const std::array<int, 3>& t, std::int64_t c) {
  for (int e = 0; e < 3; ++e) G.add_edges(t[static_cast<std::size_t>(e)], t[static_cast<std::size_t>((e + 1) % 3)], c);
}

std::int64_t triangle_count(const StateGraph& G, const std::array<int, 3>& t) {
  std::int64_t c = G.edges(t[0], t[1]);
  c = std::min(c, G.edges(t[1], t[2]));
  return std::min(c, G.edges(t[2], t[0]));
}

}  // namespace

DilationReport verify_dilation_slice(int T, std::int64_t k, std::size_t samples, std::uint64_t seed) {
  require(k >= 1, ErrorCode::invalid_argument, "dilation factor must be positive");
  const auto cols = columns_of(T);
  const auto kcols = scaled(cols, k);
  DilationReport rep;
  rep.T = T;
  rep.k = k;
  rep.samples = samples;
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(T) << 32) ^ static_cast<std::uint64_t>(k));
  std::uniform_int_distribution<std::size_t> pick(0, cols.size() - 1);
  std::uniform_int_distribution<int> weight(1, 9);
  const std::size_t dim = cols.front().size();
  const std::int64_t level = k * (T - 1);

  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Rational> x(dim, Rational(0));
    const int mode = static_cast<int>(s % 3);
    if (mode == 0) {
      // Convex combination of a few dilated columns.
      std::vector<std::pair<std::size_t, int>> terms;
      int total = 0;
      for (int t = 0; t < 4; ++t) {
        terms.emplace_back(pick(rng), weight(rng));
        total += terms.back().second;
      }
      for (auto [c, w] : terms)
        for (std::size_t i = 0; i < dim; ++i) x[i] += Rational(w * kcols[c][i], total);
    } else if (mode == 1) {
      // Conic combination of columns, rescaled onto H_k.
      std::vector<Rational> y(dim, Rational(0));
      for (int t = 0; t < 5; ++t) {
        const auto& c = cols[pick(rng)];
        const int w = weight(rng);
        for (std::size_t i = 0; i < dim; ++i) y[i] += Rational(w * c[i]);
      }
      Rational total = 0;
      for (const auto& v : y) total += v;
      for (std::size_t i = 0; i < dim; ++i) x[i] = y[i] * Rational(level) / total;
    } else {
      // Point of H_k near the cone: a column combination moved along a direction of H_k.
      const auto& c = kcols[pick(rng)];
      for (std::size_t i = 0; i < dim; ++i) x[i] = Rational(c[i]);
      std::uniform_int_distribution<std::size_t> coord(0, dim - 1);
      std::size_t a = coord(rng), b = coord(rng);
      if (a == b) b = (a + 1) % dim;
      Rational shift(weight(rng), 3);
      x[a] += shift;
      x[b] -= shift;
    }
    for (auto& v : x) v.canonicalize();

    const bool in_kP = in_convex_hull(kcols, x);
    const bool in_C = conic_combination(cols, x).has_value();
    Rational sum = 0;
    for (const auto& v : x) sum += v;
    const bool on_H = sum == Rational(level);
    if (in_kP) ++rep.inside;
    if (in_kP != (in_C && on_H)) {
      mpz_class den = 1;
      for (const auto& v : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
      IntVec out;
      for (const auto& v : x) out.push_back(mpz_class(v * den).get_si());
      rep.counterexamples.push_back(out);
      rep.denominator = den.get_si();
    }
  }
  return rep;
}

IntegerPointReport integer_points_report(int T) {
  const auto cols = columns_of(T);
  const std::size_t dim = cols.front().size();
  IntegerPointReport rep;
  rep.T = T;
  rep.columns = cols.size();
  std::set<IntVec> found;
  IntVec x(dim, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i + 1 == dim) {
      x[i] = left;
      ++rep.box_points;
      if (in_convex_hull(cols, x)) found.insert(x);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      x[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, T - 1);
  rep.in_polytope = found.size();
  const std::set<IntVec> colset(cols.begin(), cols.end());
  std::set_difference(found.begin(), found.end(), colset.begin(), colset.end(), std::back_inserter(rep.extra));
  std::set_difference(colset.begin(), colset.end(), found.begin(), found.end(), std::back_inserter(rep.missing));
  return rep;
}

bool integer_points_equal_columns(int T) { return integer_points_report(T).equal(); }

DegreeBalance check_degree_balance(std::span<const std::int64_t> x, int T) {
  require(x.size() == row_count(Model::D, kS), ErrorCode::dimension_mismatch, "expected a vector of length 6");
  require(T >= 2, ErrorCode::invalid_dimension, "T must be at least 2");
  DegreeBalance out;
  const std::int64_t total = sum(x);
  out.divisible = total % (T - 1) == 0;
  out.k = total / (T - 1);
  out.ok = out.divisible && is_nonnegative(x);
  for (int i = 1; i <= kS && out.ok; ++i) {
    std::int64_t outgoing = 0, incoming = 0;
    for (int j = 1; j <= kS; ++j) {
      if (i == j) continue;
      outgoing += x[transition_row(Model::D, kS, i, j)];
      incoming += x[transition_row(Model::D, kS, j, i)];
    }
    out.ok = std::abs(outgoing - incoming) <= out.k;
  }
  return out;
}

VertexClassification classify_vertices(int T, bool lp_cross_check) {
  const auto cols = columns_of(T);
  VertexClassification rep;
  rep.T = T;
  rep.p = (T - 1) / 2;
  const ConeStructure cone = analyze_cone(cols);
  for (auto e : cone.extreme) {
    VertexClass v;
    v.vertex = cone.generators[e];
    v.cls = classify_Gmn(graph_of_column(Model::D, kS, v.vertex));
    v.middle = v.cls.m >= 3 && v.cls.m <= rep.p - 3;
    if (v.middle) ++rep.middle_count;
    if (!v.cls.member_of_script_G) ++rep.outside_script_G;
    rep.vertices.push_back(std::move(v));
  }
  if (lp_cross_check) {
    const VRep lp = polytope_vertices(cols);
    rep.lp_vertex_count = lp.points.size();
    std::vector<IntVec> dd;
    for (const auto& v : rep.vertices) dd.push_back(v.vertex);
    std::sort(dd.begin(), dd.end());
    auto lp_sorted = lp.points;
    std::sort(lp_sorted.begin(), lp_sorted.end());
    require(dd == lp_sorted, ErrorCode::internal, "vertex sets from the cone and from LP disagree");
  }
  return rep;
}

std::optional<Decomposition> middle_class_decomposition(const StateGraph& x) {
  const GmnClass c = classify_Gmn(x);
  if (!c.member_of_script_G || c.m < 3 || c.n < 2) return std::nullopt;
  int a = 0, b = 0;
  for (int i = 1; i <= kS; ++i)
    for (int j = i + 1; j <= kS; ++j)
      if (std::min(x.edges(i, j), x.edges(j, i)) > 0) {
        a = i;
        b = j;
      }
  const std::array<int, 3>* tri = nullptr;
  for (const auto& t : kTriangles)
    if (triangle_count(x, t) >= 2) tri = &t;
  if (tri == nullptr || a == 0) return std::nullopt;
  Decomposition d{x, x, x};
  // y trades two three-cycles for three two-cycles, z does the reverse.
  add_triangle(d.y, *tri, -2);
  d.y.add_edges(a, b, 3);
  d.y.add_edges(b, a, 3);
  add_triangle(d.z, *tri, 2);
  d.z.add_edges(a, b, -3);
  d.z.add_edges(b, a, -3);
  for (const auto* g : {&d.y, &d.z})
    for (int i = 1; i <= kS; ++i)
      for (int j = 1; j <= kS; ++j)
        if (g->edges(i, j) < 0) return std::nullopt;
  return d;
}

DecompositionReport verify_middle_class_decompositions(int T) {
  require(T >= 13, ErrorCode::invalid_dimension, "middle classes are non-empty only for T >= 13");
  DecompositionReport rep;
  rep.T = T;
  const auto cols = columns_of(T);
  const std::set<IntVec> colset(cols.begin(), cols.end());
  const std::int64_t p = (T - 1) / 2;
  for (std::int64_t q = 3; q <= p - 3; ++q) {
    for (const auto& x : enumerate_Gmn(T, q)) {
      ++rep.checked;
      auto d = middle_class_decomposition(x);
      bool ok = d.has_value();
      if (ok) {
        const IntVec cx = column_of_graph(d->x), cy = column_of_graph(d->y), cz = column_of_graph(d->z);
        ok = colset.count(cx) && colset.count(cy) && colset.count(cz) && add(cy, cz) == add(cx, cx);
        const GmnClass gy = classify_Gmn(d->y), gz = classify_Gmn(d->z);
        ok = ok && gy.m == q + 3 && gy.n == f_T(T, q + 3) && gz.m == q - 3 && gz.n == f_T(T, q - 3);
      }
      if (!ok) ++rep.failures;
    }
  }
  return rep;
}

StabilizationReport fvector_stabilization_report(int T_min, int T_max) {
  require(T_min >= 4 && T_min <= T_max, ErrorCode::invalid_argument, "bad T range");
  StabilizationReport rep;
  for (int T = T_min; T <= T_max; ++T) rep.rows.emplace_back(T, f_vector(columns_of(T)));
  for (std::size_t i = 0; i < rep.rows.size(); ++i)
    for (std::size_t j = i + 1; j < rep.rows.size(); ++j)
      if (rep.rows[i].second == rep.rows[j].second) rep.repeats.emplace_back(rep.rows[i].first, rep.rows[j].first);
  return rep;
}

nlohmann::ordered_json classification_to_json(const VertexClassification& c) {
  nlohmann::ordered_json j;
  j["T"] = c.T;
  j["p"] = c.p;
  j["vertices"] = c.vertices.size();
  j["middle"] = c.middle_count;
  j["outside_script_G"] = c.outside_script_G;
  std::map<std::pair<std::int64_t, std::int64_t>, int> counts;
  for (const auto& v : c.vertices) ++counts[{v.cls.m, v.cls.n}];
  auto classes = nlohmann::ordered_json::array();
  for (const auto& [mn, n] : counts) classes.push_back({{"m", mn.first}, {"n", mn.second}, {"count", n}});
  j["classes"] = classes;
  return j;
}

nlohmann::ordered_json stabilization_to_json(const StabilizationReport& r) {
  nlohmann::ordered_json j;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [T, f] : r.rows) rows.push_back({{"T", T}, {"f", f.f}});
  j["rows"] = rows;
  auto reps = nlohmann::ordered_json::array();
  for (const auto& [a, b] : r.repeats) reps.push_back({a, b});
  j["repeats"] = reps;
  return j;
}

}  // namespace thmc
