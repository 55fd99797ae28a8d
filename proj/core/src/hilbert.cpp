#include "thmc/hilbert.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "thmc/double_description.hpp"
#include "thmc/exact_lp.hpp"
#include "thmc/intmat.hpp"
#include "thmc/lattice.hpp"
#include "thmc/polyhedra.hpp"

namespace thmc {

HilbertRange default_hilbert_range(Model model, int S) {
  switch (model) {
    case Model::C: return S == 3 ? HilbertRange{4, 9} : HilbertRange{3, 5};
    case Model::D: return S == 3 ? HilbertRange{4, 15} : HilbertRange{3, 5};
    case Model::A: return S == 2 ? HilbertRange{2, 30} : HilbertRange{2, 4};
    case Model::B: return S == 2 ? HilbertRange{2, 12} : HilbertRange{2, 4};
  }
  return {};
}

std::int64_t hilbert_degree(Model model, int T, std::span<const std::int64_t> y) {
  return sum(y) / column_sum(model, T);
}

namespace {

// Integer normal of the hyperplane through k-1 vectors in Z^k (cofactor expansion).
IntVec hyperplane_normal(const std::vector<const IntVec*>& vs, std::size_t k) {
  IntVec n(k);
  for (std::size_t drop = 0; drop < k; ++drop) {
    IntMat m(k - 1, k - 1);
    for (std::size_t r = 0; r < vs.size(); ++r) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (j == drop) continue;
        m(r, c++) = static_cast<long>((*vs[r])[j]);
      }
    }
    Int det = k == 1 ? Int(1) : determinant(m);
    if (drop % 2 == 1) det = -det;
    n[drop] = to_int64(det);
  }
  return make_primitive(std::move(n));
}

using Simplex = std::vector<std::size_t>;

// Placing triangulation of the pointed full-dimensional cone spanned by `rays`.
std::vector<Simplex> placing_triangulation(const std::vector<IntVec>& rays, std::size_t k) {
  std::vector<std::size_t> initial;
  {
    std::vector<IntVec> chosen;
    for (std::size_t r = 0; r < rays.size() && initial.size() < k; ++r) {
      chosen.push_back(rays[r]);
      if (vector_rank(chosen) == chosen.size()) {
        initial.push_back(r);
      } else {
        chosen.pop_back();
      }
    }
  }
  require(initial.size() == k, ErrorCode::internal, "rays do not span the cone");

  struct FacetInfo {
    int count = 0;
    std::size_t opposite = 0;
    IntVec normal;  // positive towards `opposite`
  };
  std::map<Simplex, FacetInfo> facets;
  std::vector<Simplex> simplices;

  auto add_simplex = [&](Simplex s) {
    std::sort(s.begin(), s.end());
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f;
      for (std::size_t t = 0; t < s.size(); ++t)
        if (t != drop) f.push_back(s[t]);
      auto [it, fresh] = facets.try_emplace(f);
      it->second.count += 1;
      if (fresh) {
        std::vector<const IntVec*> vs;
        for (auto idx : f) vs.push_back(&rays[idx]);
        IntVec n = hyperplane_normal(vs, k);
        if (dot(n, rays[s[drop]]) < 0)
          for (auto& x : n) x = -x;
        it->second.normal = std::move(n);
        it->second.opposite = s[drop];
      }
    }
    simplices.push_back(std::move(s));
  };

  add_simplex(initial);
  std::vector<bool> used(rays.size(), false);
  for (auto r : initial) used[r] = true;
  for (std::size_t r = 0; r < rays.size(); ++r) {
    if (used[r]) continue;
    std::vector<Simplex> visible;
    for (const auto& [f, info] : facets)
      if (info.count == 1 && dot(info.normal, rays[r]) < 0) visible.push_back(f);
    require(!visible.empty(), ErrorCode::internal, "ray is not extreme");
    for (auto& f : visible) {
      Simplex s = f;
      s.push_back(r);
      add_simplex(std::move(s));
    }
  }
  return simplices;
}

// Lattice points of the half-open parallelepiped spanned by the simplex rays.
void parallelepiped_points(const std::vector<IntVec>& rays, const Simplex& s, std::size_t k,
                           std::unordered_set<IntVec, IntVecHash>& out) {
  IntMat G(k, k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < k; ++i) G(i, c) = static_cast<long>(rays[s[c]][i]);
  Int det = determinant(G);
  require(sgn(det) != 0, ErrorCode::internal, "degenerate simplex");
  if (abs(det) == 1) return;
  // adj(G) = det * G^{-1}
  std::vector<std::vector<Rational>> aug(k, std::vector<Rational>(2 * k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = G(i, j);
    aug[i][k + i] = 1;
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (sgn(aug[p][c]) == 0) ++p;
    std::swap(aug[p], aug[c]);
    Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || sgn(aug[i][c]) == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = 0; j < 2 * k; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  Int D = abs(det);
  std::vector<std::vector<std::int64_t>> adj(k, std::vector<std::int64_t>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational v = aug[i][k + j] * Rational(D);
      require(v.get_den() == 1, ErrorCode::internal, "adjugate is not integral");
      adj[i][j] = to_int64(v.get_num());
    }
  const std::int64_t d = to_int64(D);
  auto reduce = [&](IntVec y) {
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t lam = 0;
      for (std::size_t j = 0; j < k; ++j) lam = checked_add(lam, checked_mul(adj[i][j], y[j]));
      std::int64_t q = lam / d;
      if (lam % d != 0 && lam < 0) --q;  // floor
      if (q == 0) continue;
      for (std::size_t t = 0; t < k; ++t) y[t] = checked_sub(y[t], checked_mul(q, rays[s[i]][t]));
    }
    return y;
  };
  std::unordered_set<IntVec, IntVecHash> seen;
  std::deque<IntVec> queue;
  IntVec zero(k, 0);
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    IntVec p = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i) {
      IntVec q = p;
      q[i] += 1;
      q = reduce(std::move(q));
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  require(static_cast<std::int64_t>(seen.size()) == d, ErrorCode::internal, "parallelepiped point count differs from |det|");
  for (auto& p : seen)
    if (p != zero) out.insert(p);
}

}  // namespace

std::vector<IntVec> hilbert_basis_of(std::span<const IntVec> input, std::size_t* simplices_out,
                                     std::size_t* candidates_out) {
  std::vector<IntVec> gens = distinct_sorted(input);
  std::erase_if(gens, [](const IntVec& g) { return std::all_of(g.begin(), g.end(), [](auto x) { return x == 0; }); });
  require(!gens.empty(), ErrorCode::degenerate_input, "all generators are zero");
  const Lattice L = Lattice::from_generators(gens);
  const std::size_t k = L.rank();
  std::vector<IntVec> coords;
  for (const auto& g : gens) coords.push_back(L.coordinates(g));

  ConeStructure cs = analyze_cone(coords);
  const auto& normals = cs.hrep.inequalities;
  std::vector<IntVec> rays;
  for (auto idx : cs.extreme) rays.push_back(make_primitive(cs.generators[idx]));
  std::sort(rays.begin(), rays.end());

  std::vector<IntVec> candidates;
  if (k == 1) {
    candidates = rays;
    if (simplices_out) *simplices_out = 1;
  } else {
    auto simplices = placing_triangulation(rays, k);
    if (simplices_out) *simplices_out = simplices.size();
    std::unordered_set<IntVec, IntVecHash> pts(rays.begin(), rays.end());
    for (const auto& s : simplices) parallelepiped_points(rays, s, k, pts);
    candidates.assign(pts.begin(), pts.end());
  }
  if (candidates_out) *candidates_out = candidates.size();

  struct Cand {
    std::int64_t degree;
    IntVec values;
    IntVec point;
  };
  std::vector<Cand> cands;
  for (auto& p : candidates) {
    Cand c;
    c.degree = 0;
    for (const auto& n : normals) {
      std::int64_t v = dot(n, p);
      require(v >= 0, ErrorCode::internal, "candidate outside the cone");
      c.values.push_back(v);
      c.degree = checked_add(c.degree, v);
    }
    c.point = std::move(p);
    cands.push_back(std::move(c));
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.point < b.point;
  });
  std::vector<const Cand*> irreducible;
  for (const auto& c : cands) {
    bool reducible = false;
    for (const Cand* h : irreducible) {
      if (h->degree >= c.degree) break;
      bool inside = true;
      for (std::size_t f = 0; f < c.values.size() && inside; ++f) inside = c.values[f] >= h->values[f];
      if (inside) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irreducible.push_back(&c);
  }
  std::vector<IntVec> out;
  for (const Cand* c : irreducible) out.push_back(L.from_coordinates(c->point));
  std::sort(out.begin(), out.end());
  return out;
}

HilbertBasisResult hilbert_basis(Model model, int S, int T, const HilbertOptions& options) {
  word_space(model, S, T);
  const HilbertRange range = options.range.value_or(default_hilbert_range(model, S));
  if (options.enforce_range) {
    require(T >= range.min_T && T <= range.max_T, ErrorCode::range_exceeded,
            std::string("T=") + std::to_string(T) + " is outside the configured Hilbert range " +
                std::to_string(range.min_T) + ".." + std::to_string(range.max_T));
  }
  HilbertBasisResult r;
  r.model = model;
  r.S = S;
  r.T = T;
  auto cols = distinct_columns(model, S, T);
  r.elements = hilbert_basis_of(cols, &r.simplices, &r.candidates);
  std::set<IntVec> colset(cols.begin(), cols.end());
  r.normal = std::all_of(r.elements.begin(), r.elements.end(), [&](const IntVec& h) { return colset.count(h) > 0; });
  return r;
}

bool check_normality(Model model, int S, int T, const HilbertOptions& options) {
  return hilbert_basis(model, S, T, options).normal;
}

namespace {

// Calls fn for every non-negative vector of length n with the given sum.
void for_each_composition(std::size_t n, std::int64_t total, const std::function<void(const IntVec&)>& fn) {
  IntVec v(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i + 1 == n) {
      v[i] = left;
      fn(v);
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      v[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (n == 0) {
    if (total == 0) fn(v);
    return;
  }
  rec(0, total);
}

}  // namespace

std::vector<IntVec> hilbert_basis_bruteforce_oracle(Model model, int S, int T, int degree_cap) {
  word_space(model, S, T);
  if (degree_cap <= 0) return {};
  const auto cols = distinct_columns(model, S, T);
  const std::size_t rows = row_count(model, S);
  const std::size_t init = has_initial_rows(model) ? static_cast<std::size_t>(S) : 0;
  const bool lattice_by_residue = !has_initial_rows(model);
  std::optional<Lattice> L;
  if (!lattice_by_residue) L = Lattice::from_generators(cols);

  std::vector<IntVec> monoid;  // grouped by degree
  std::vector<std::int64_t> degree_of;
  for (std::int64_t k = 1; k <= degree_cap; ++k) {
    auto consider = [&](const IntVec& y) {
      // Necessary conditions: every word changes (out - in - start) at a state by 0 or -1.
      for (int s = 1; s <= S; ++s) {
        std::int64_t bal = 0;
        for (int t = 1; t <= S; ++t) {
          if (forbids_loops(model) && s == t) continue;
          bal += y[transition_row(model, S, s, t)] - y[transition_row(model, S, t, s)];
        }
        if (init) {
          bal -= y[static_cast<std::size_t>(s - 1)];
          if (bal > 0 || bal < -k) return;
        } else if (bal > k || bal < -k) {
          return;
        }
      }
      if (lattice_by_residue ? !residue_test(y, T) : !L->contains(y)) return;
      if (!in_cone(cols, y)) return;
      monoid.push_back(y);
      degree_of.push_back(k);
    };
    if (init) {
      for_each_composition(init, k, [&](const IntVec& a) {
        for_each_composition(rows - init, k * (T - 1), [&](const IntVec& b) {
          IntVec y = a;
          y.insert(y.end(), b.begin(), b.end());
          consider(y);
        });
      });
    } else {
      for_each_composition(rows, k * (T - 1), consider);
    }
  }

  std::unordered_set<IntVec, IntVecHash> members(monoid.begin(), monoid.end());
  std::vector<IntVec> out;
  for (std::size_t a = 0; a < monoid.size(); ++a) {
    bool reducible = false;
    for (std::size_t b = 0; b < monoid.size() && !reducible; ++b) {
      if (degree_of[b] >= degree_of[a]) continue;
      IntVec rest = subtract(monoid[a], monoid[b]);
      if (is_nonnegative(rest) && members.count(rest)) reducible = true;
    }
    if (!reducible) out.push_back(monoid[a]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_semigroup(Model model, int S, int T, std::span<const std::int64_t> h) {
  require(h.size() == row_count(model, S), ErrorCode::dimension_mismatch, "vector length differs from row count");
  if (!is_nonnegative(h)) return false;
  const std::int64_t total = sum(h);
  const std::int64_t cs = column_sum(model, T);
  if (total % cs != 0) return false;
  const std::int64_t degree = total / cs;
  if (degree == 0) return true;
  const auto cols = distinct_columns(model, S, T);
  std::function<bool(std::size_t, IntVec&, std::int64_t)> dfs = [&](std::size_t from, IntVec& rest, std::int64_t left) {
    if (left == 0) return std::all_of(rest.begin(), rest.end(), [](auto x) { return x == 0; });
    for (std::size_t c = from; c < cols.size(); ++c) {
      bool fits = true;
      for (std::size_t i = 0; i < rest.size() && fits; ++i) fits = cols[c][i] <= rest[i];
      if (!fits) continue;
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= cols[c][i];
      bool ok = dfs(c, rest, left - 1);
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] += cols[c][i];
      if (ok) return true;
    }
    return false;
  };
  IntVec rest(h.begin(), h.end());
  return dfs(0, rest, degree);
}

namespace {

Word repeat_then(int state, int count, std::vector<int> tail) {
  std::vector<int> w(static_cast<std::size_t>(count), state);
  w.insert(w.end(), tail.begin(), tail.end());
  return Word(std::move(w));
}

}  // namespace

NonNormalityWitness nonnormality_witness(Model model, int S, int T) {
  NonNormalityWitness w;
  w.model = model;
  w.S = S;
  w.T = T;
  w.h.assign(row_count(model, S), 0);
  auto tr = [&](int i, int j) -> std::int64_t& { return w.h[transition_row(model, S, i, j)]; };
  if (model == Model::A) {
    require(S >= 3 && T >= 4, ErrorCode::invalid_dimension, "Model (a) witness needs S >= 3 and T >= 4");
    w.h[initial_row(model, S, 1)] = 1;
    w.h[initial_row(model, S, 3)] = 1;
    tr(1, 1) = T - 3;
    tr(1, 2) = 1;
    tr(2, 3) = 1;
    tr(3, 2) = 2;
    tr(3, 3) = T - 3;
    const Rational half(1, 2);
    w.rational_combination = {{repeat_then(1, T - 4, {1, 1, 1, 2}), half},
                              {repeat_then(1, T - 4, {1, 2, 3, 2}), half},
                              {repeat_then(3, T - 4, {3, 2, 3, 2}), half},
                              {repeat_then(3, T - 4, {3, 3, 3, 2}), half}};
    w.lattice_combination = {{repeat_then(1, T - 4, {1, 1, 2, 3}), 1},
                             {repeat_then(3, T - 4, {3, 3, 3, 2}), 1},
                             {repeat_then(3, T - 4, {3, 2, 3, 2}), 1},
                             {repeat_then(3, T - 4, {3, 3, 2, 3}), -1}};
  } else if (model == Model::B) {
    require(S >= 2 && T >= 3, ErrorCode::invalid_dimension, "Model (b) witness needs S >= 2 and T >= 3");
    tr(1, 1) = 1;
    tr(2, 2) = T - 2;
    w.rational_combination = {{repeat_then(1, T, {}), Rational(1, T - 1)},
                              {repeat_then(2, T, {}), Rational(T - 2, T - 1)}};
    w.lattice_combination = {{repeat_then(1, T, {}), 1},
                             {repeat_then(1, T - 1, {2}), -1},
                             {repeat_then(1, 1, std::vector<int>(static_cast<std::size_t>(T - 1), 2)), 1}};
  } else {
    fail(ErrorCode::invalid_argument, "non-normality witnesses exist for models a and b only");
  }

  // (i) cone: the explicit non-negative combination, and an independent LP.
  std::vector<Rational> acc(w.h.size(), 0);
  bool coeffs_ok = true;
  for (const auto& [word, coef] : w.rational_combination) {
    coeffs_ok = coeffs_ok && coef >= 0;
    IntVec col = column_of_word(model, S, T, word);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += coef * Rational(static_cast<long>(col[i]));
  }
  const auto cols = distinct_columns(model, S, T);
  w.in_cone = coeffs_ok && acc == to_rational(w.h) && in_cone(cols, w.h);

  // (ii) lattice: the explicit integer combination, and the Smith-form test.
  IntVec lat(w.h.size(), 0);
  for (const auto& [word, coef] : w.lattice_combination) {
    IntVec col = column_of_word(model, S, T, word);
    for (std::size_t i = 0; i < lat.size(); ++i) lat[i] = checked_add(lat[i], checked_mul(coef, col[i]));
  }
  w.in_lattice = lat == w.h && Lattice::from_generators(cols).contains(w.h);

  // (iii) no non-negative integer solution.
  w.not_in_semigroup = !in_semigroup(model, S, T, w.h);

  require(w.verified(), ErrorCode::witness_verification_failed,
          std::string("witness for model ") + model_letter(model) + " S=" + std::to_string(S) + " T=" + std::to_string(T) +
              " failed (cone=" + std::to_string(w.in_cone) + ", lattice=" + std::to_string(w.in_lattice) +
              ", outside semigroup=" + std::to_string(w.not_in_semigroup) + ")");
  return w;
}

nlohmann::ordered_json hilbert_to_json(const HilbertBasisResult& r) {
  nlohmann::ordered_json j;
  j["model"] = std::string(1, model_letter(r.model));
  j["S"] = r.S;
  j["T"] = r.T;
  j["count"] = r.elements.size();
  j["normal"] = r.normal;
  return j;
}

std::string vectors_to_csv(const std::vector<IntVec>& vectors) {
  std::ostringstream out;
  for (const auto& v : vectors) out << format_vector(v, ",") << '\n';
  return out.str();
}

}  // namespace thmc
