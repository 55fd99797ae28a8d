#include "thmc/double_description.hpp"

#include <algorithm>
#include <numeric>

#include "thmc/intmat.hpp"

namespace thmc {

std::size_t vector_rank(std::span<const IntVec> vectors) {
  if (vectors.empty()) return 0;
  return rank(IntMat::from_columns(vectors));
}

namespace {

struct Ray {
  IntVec n;
  DynBitset zeros;
};

// Greedy choice of k linearly independent generators.
std::vector<std::size_t> independent_subset(std::span<const IntVec> gens, std::size_t k) {
  std::vector<std::vector<Rational>> echelon;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t g = 0; g < gens.size() && chosen.size() < k; ++g) {
    std::vector<Rational> v = [&] {
      std::vector<Rational> r(k);
      for (std::size_t i = 0; i < k; ++i) r[i] = Rational(static_cast<long>(gens[g][i]));
      return r;
    }();
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const std::size_t p = pivots[e];
      if (sgn(v[p]) == 0) continue;
      Rational f = v[p] / echelon[e][p];
      for (std::size_t i = 0; i < k; ++i) v[i] -= f * echelon[e][i];
    }
    std::size_t p = 0;
    while (p < k && sgn(v[p]) == 0) ++p;
    if (p == k) continue;
    echelon.push_back(std::move(v));
    pivots.push_back(p);
    chosen.push_back(g);
  }
  return chosen;
}

IntVec primitive_from_rationals(const std::vector<Rational>& row) {
  Int l = 1;
  for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Int> scaled(row.size());
  Int g = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    scaled[i] = row[i].get_num() * (l / row[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[i].get_mpz_t());
  }
  IntVec out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = to_int64(Int(scaled[i] / g));
  return out;
}

}  // namespace

DualRays double_description(std::span<const IntVec> input) {
  require(!input.empty(), ErrorCode::degenerate_input, "no generators");
  const std::size_t k = input.front().size();
  std::vector<IntVec> gens;
  for (const auto& g : input) {
    require(g.size() == k, ErrorCode::dimension_mismatch, "generators of different lengths");
    gens.push_back(g);
  }
  const std::size_t m = gens.size();
  auto basis = independent_subset(gens, k);
  require(basis.size() == k, ErrorCode::degenerate_input, "generators do not span a full-dimensional cone");

  // Rows of the inverse of [g_b1 ... g_bk] are the rays of the initial dual cone.
  std::vector<std::vector<Rational>> aug(k, std::vector<Rational>(2 * k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = Rational(static_cast<long>(gens[basis[j]][i]));
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
  // aug[:, k:] = G^{-1}; its i-th row pairs to delta_ij with g_bj.
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> row(aug[i].begin() + static_cast<std::ptrdiff_t>(k), aug[i].end());
    Ray r{primitive_from_rationals(row), DynBitset(m)};
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) r.zeros.set(basis[j]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> in_basis(m, false);
  for (auto b : basis) in_basis[b] = true;
  for (std::size_t g = 0; g < m; ++g) {
    if (in_basis[g]) continue;
    std::vector<std::int64_t> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(rays[r].n, gens[g]);
      if (val[r] > 0) pos.push_back(r);
      if (val[r] < 0) neg.push_back(r);
      if (val[r] == 0) rays[r].zeros.set(g);
    }
    if (neg.empty()) continue;
    std::vector<Ray> added;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        DynBitset common = rays[p].zeros & rays[q].zeros;
        if (k >= 2 && common.count() + 2 < k) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec n(k);
        const std::int64_t a = val[p];
        const std::int64_t b = -val[q];
        for (std::size_t i = 0; i < k; ++i) n[i] = checked_add(checked_mul(a, rays[q].n[i]), checked_mul(b, rays[p].n[i]));
        Ray nr{make_primitive(std::move(n)), common};
        nr.zeros.set(g);
        added.push_back(std::move(nr));
      }
    }
    std::vector<Ray> next;
    next.reserve(rays.size() - neg.size() + added.size());
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (val[r] >= 0) next.push_back(std::move(rays[r]));
    for (auto& r : added) next.push_back(std::move(r));
    rays = std::move(next);
  }

  std::vector<std::size_t> order(rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rays[a].n < rays[b].n; });
  DualRays out;
  for (std::size_t idx : order) {
    out.normals.push_back(rays[idx].n);
    out.incidence.push_back(rays[idx].zeros);
  }
  return out;
}

}  // namespace thmc
