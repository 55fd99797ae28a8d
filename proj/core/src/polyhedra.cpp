#include "thmc/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "thmc/double_description.hpp"
#include "thmc/exact_lp.hpp"

namespace thmc {

std::int64_t FVector::euler_sum() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * f[i];
  return s;
}

std::vector<IntVec> distinct_sorted(std::span<const IntVec> points) {
  std::vector<IntVec> out(points.begin(), points.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConeStructure analyze_cone(std::span<const IntVec> input) {
  ConeStructure cs;
  cs.generators = distinct_sorted(input);
  std::erase_if(cs.generators, [](const IntVec& g) { return std::all_of(g.begin(), g.end(), [](auto x) { return x == 0; }); });
  require(!cs.generators.empty(), ErrorCode::degenerate_input, "all generators are zero");
  cs.ambient_dim = cs.generators.front().size();
  const Lattice L = Lattice::from_generators(cs.generators);
  cs.dimension = L.rank();
  const bool full = cs.dimension == cs.ambient_dim;

  std::vector<IntVec> coords;
  coords.reserve(cs.generators.size());
  for (const auto& g : cs.generators) coords.push_back(full ? g : L.coordinates(g));
  DualRays dual = double_description(coords);

  std::vector<std::pair<IntVec, DynBitset>> facets;
  for (std::size_t f = 0; f < dual.normals.size(); ++f) {
    IntVec n = full ? dual.normals[f] : L.pull_back_functional(dual.normals[f]);
    facets.emplace_back(std::move(n), dual.incidence[f]);
  }
  std::sort(facets.begin(), facets.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [n, inc] : facets) {
    cs.hrep.inequalities.push_back(n);
    cs.incidence.push_back(inc);
  }
  if (!full) cs.hrep.equations = L.equations();

  // Generator g spans an extreme ray iff its tight facets have rank dimension - 1.
  for (std::size_t g = 0; g < cs.generators.size(); ++g) {
    std::vector<IntVec> tight;
    for (std::size_t f = 0; f < dual.normals.size(); ++f)
      if (dual.incidence[f].test(g)) tight.push_back(dual.normals[f]);
    if (cs.dimension == 1 || vector_rank(tight) + 1 == cs.dimension) cs.extreme.push_back(g);
  }
  // Multiples of one ray: keep the first generator on each ray.
  std::vector<std::size_t> kept;
  std::set<IntVec> seen;
  for (std::size_t g : cs.extreme)
    if (seen.insert(make_primitive(cs.generators[g])).second) kept.push_back(g);
  cs.extreme = std::move(kept);

  for (std::size_t f = 0; f < cs.hrep.inequalities.size(); ++f) {
    for (std::size_t g = 0; g < cs.generators.size(); ++g) {
      const std::int64_t v = dot(cs.hrep.inequalities[f], cs.generators[g]);
      require(v >= 0 && (v == 0) == cs.incidence[f].test(g), ErrorCode::internal, "facet inconsistent with generators");
    }
  }
  return cs;
}

VRep polytope_vertices(std::span<const IntVec> input) {
  auto pts = distinct_sorted(input);
  require(!pts.empty(), ErrorCode::degenerate_input, "no points");
  VRep out;
  if (pts.size() == 1) {
    out.points = pts;
    return out;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<IntVec> others;
    others.reserve(pts.size() - 1);
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!in_convex_hull(others, pts[i])) out.points.push_back(pts[i]);
  }
  return out;
}

HRep cone_facets(std::span<const IntVec> generators) { return analyze_cone(generators).hrep; }

FVector f_vector(std::span<const IntVec> input) {
  auto pts = distinct_sorted(input);
  require(!pts.empty(), ErrorCode::degenerate_input, "no points");
  std::vector<IntVec> lifted;
  for (const auto& p : pts) {
    IntVec q = p;
    q.push_back(1);
    lifted.push_back(std::move(q));
  }
  ConeStructure cs = analyze_cone(lifted);
  const int d = static_cast<int>(cs.dimension) - 1;
  require(d >= 1, ErrorCode::degenerate_input, "polytope has dimension 0");
  // Re-index incidences over the vertices only.
  std::vector<DynBitset> facets;
  for (const auto& inc : cs.incidence) {
    DynBitset b(cs.extreme.size());
    for (std::size_t v = 0; v < cs.extreme.size(); ++v)
      if (inc.test(cs.extreme[v])) b.set(v);
    facets.push_back(std::move(b));
  }
  return f_vector_from_incidence(cs.extreme.size(), facets, d);
}

IntVec evaluation_key(std::span<const std::int64_t> normal, std::span<const IntVec> generators) {
  IntVec key;
  key.reserve(generators.size());
  for (const auto& g : generators) key.push_back(dot(normal, g));
  return make_primitive(std::move(key));
}

std::vector<IntVec> nonnegativity_facets(const std::vector<IntVec>& normals, std::span<const IntVec> generators) {
  if (normals.empty()) return {};
  const std::size_t d = normals.front().size();
  std::set<IntVec> unit_keys;
  for (std::size_t i = 0; i < d; ++i) {
    IntVec e(d, 0);
    e[i] = 1;
    unit_keys.insert(evaluation_key(e, generators));
  }
  std::vector<IntVec> out;
  for (const auto& n : normals)
    if (unit_keys.count(evaluation_key(n, generators))) out.push_back(n);
  return out;
}

HyperplaneComparison compare_hyperplanes(const std::vector<IntVec>& computed, const std::vector<IntVec>& listed,
                                         std::span<const IntVec> generators, const std::vector<IntVec>& omitted) {
  HyperplaneComparison cmp;
  std::set<IntVec> omit;
  for (const auto& n : omitted) omit.insert(n);
  std::map<IntVec, IntVec> want;  // key -> computed normal
  for (const auto& n : computed) {
    if (omit.count(n)) continue;
    want.emplace(evaluation_key(n, generators), n);
  }
  cmp.computed = want.size();
  cmp.listed = listed.size();
  std::set<IntVec> hit;
  for (const auto& n : listed) {
    IntVec key = evaluation_key(n, generators);
    if (std::any_of(key.begin(), key.end(), [](auto v) { return v < 0; })) ++cmp.listed_invalid;
    auto it = want.find(key);
    if (it == want.end()) {
      cmp.unexpected.push_back(n);
    } else if (!hit.insert(key).second) {
      ++cmp.listed_duplicates;
    } else {
      ++cmp.matched;
    }
  }
  for (const auto& [key, n] : want)
    if (!hit.count(key)) cmp.missing.push_back(n);
  return cmp;
}

nlohmann::ordered_json hrep_to_json(const HRep& h) {
  nlohmann::ordered_json j;
  j["inequalities"] = h.inequalities;
  j["equations"] = h.equations;
  return j;
}

nlohmann::ordered_json vrep_to_json(const VRep& v) {
  nlohmann::ordered_json j;
  j["points"] = v.points;
  return j;
}

nlohmann::ordered_json fvector_to_json(const FVector& f) {
  nlohmann::ordered_json j;
  j["dimension"] = f.dimension;
  j["f"] = f.f;
  j["euler"] = f.satisfies_euler();
  return j;
}

std::string normals_as_columns(const std::vector<IntVec>& normals) {
  std::ostringstream out;
  if (normals.empty()) return {};
  const std::size_t d = normals.front().size();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t c = 0; c < normals.size(); ++c) out << (c ? " " : "") << normals[c][i];
    out << '\n';
  }
  return out.str();
}

}  // namespace thmc
