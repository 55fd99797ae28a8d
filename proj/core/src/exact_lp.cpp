#include "thmc/exact_lp.hpp"

namespace thmc {

LinearSystem::LinearSystem(std::size_t variables) : free_(variables, false) {}

void LinearSystem::add(std::vector<Rational> coeffs, Sense sense, Rational rhs) {
  require(coeffs.size() == variables(), ErrorCode::dimension_mismatch, "constraint has the wrong number of coefficients");
  rows_.push_back({std::move(coeffs), sense, std::move(rhs)});
}

void LinearSystem::add(std::span<const std::int64_t> coeffs, Sense sense, std::int64_t rhs) {
  add(to_rational(coeffs), sense, Rational(static_cast<long>(rhs)));
}

std::optional<std::vector<Rational>> LinearSystem::solve() const {
  // Standard form: columns = original vars (+ negative parts of free vars) + slacks.
  const std::size_t n0 = variables();
  std::vector<std::size_t> neg_col(n0, SIZE_MAX);
  std::size_t n = n0;
  for (std::size_t v = 0; v < n0; ++v)
    if (free_[v]) neg_col[v] = n++;
  std::vector<std::size_t> slack_col(rows_.size(), SIZE_MAX);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].sense != Sense::eq) slack_col[r] = n++;
  const std::size_t m = rows_.size();
  const std::size_t width = n + m;  // plus artificials

  if (m == 0) return std::vector<Rational>(n0, 0);

  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(width + 1));
  for (std::size_t r = 0; r < m; ++r) {
    auto& row = tab[r];
    for (std::size_t v = 0; v < n0; ++v) {
      row[v] = rows_[r].coeffs[v];
      if (free_[v]) row[neg_col[v]] = -rows_[r].coeffs[v];
    }
    if (rows_[r].sense == Sense::le) row[slack_col[r]] = 1;
    if (rows_[r].sense == Sense::ge) row[slack_col[r]] = -1;
    row[width] = rows_[r].rhs;
    if (sgn(row[width]) < 0)
      for (auto& x : row) x = -x;
    row[n + r] = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  // Reduced costs of the Phase I objective (sum of artificials).
  std::vector<Rational> cost(width + 1);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c <= width; ++c)
      if (c < n || c == width) cost[c] -= tab[r][c];

  for (;;) {
    std::size_t enter = SIZE_MAX;
    for (std::size_t c = 0; c < width; ++c) {
      if (sgn(cost[c]) < 0) {
        enter = c;
        break;
      }
    }
    if (enter == SIZE_MAX) break;
    std::size_t leave = SIZE_MAX;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (sgn(tab[r][enter]) <= 0) continue;
      Rational ratio = tab[r][width] / tab[r][enter];
      if (leave == SIZE_MAX || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave == SIZE_MAX) break;  // unbounded direction; cannot happen for Phase I
    Rational piv = tab[leave][enter];
    for (auto& x : tab[leave]) x /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || sgn(tab[r][enter]) == 0) continue;
      Rational f = tab[r][enter];
      for (std::size_t c = 0; c <= width; ++c)
        if (sgn(tab[leave][c]) != 0) tab[r][c] -= f * tab[leave][c];
    }
    if (sgn(cost[enter]) != 0) {
      Rational f = cost[enter];
      for (std::size_t c = 0; c <= width; ++c)
        if (sgn(tab[leave][c]) != 0) cost[c] -= f * tab[leave][c];
    }
    basis[leave] = enter;
  }
  if (sgn(cost[width]) != 0) return std::nullopt;

  std::vector<Rational> value(width, 0);
  for (std::size_t r = 0; r < m; ++r) value[basis[r]] = tab[r][width];
  std::vector<Rational> x(n0);
  for (std::size_t v = 0; v < n0; ++v) {
    x[v] = value[v];
    if (free_[v]) x[v] -= value[neg_col[v]];
  }
  // Independent re-check of the point.
  for (const auto& row : rows_) {
    Rational lhs = 0;
    for (std::size_t v = 0; v < n0; ++v)
      if (sgn(row.coeffs[v]) != 0) lhs += row.coeffs[v] * x[v];
    bool ok = row.sense == Sense::eq ? lhs == row.rhs : row.sense == Sense::le ? lhs <= row.rhs : lhs >= row.rhs;
    require(ok, ErrorCode::internal, "simplex returned an infeasible point");
  }
  for (std::size_t v = 0; v < n0; ++v)
    require(free_[v] || sgn(x[v]) >= 0, ErrorCode::internal, "simplex returned a negative variable");
  return x;
}

std::vector<Rational> to_rational(std::span<const std::int64_t> v) {
  std::vector<Rational> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(static_cast<long>(v[i]));
  return out;
}

namespace {

std::optional<std::vector<Rational>> combination(std::span<const IntVec> gens, std::span<const Rational> x, bool convex) {
  require(!gens.empty(), ErrorCode::degenerate_input, "no generators");
  const std::size_t d = gens.front().size();
  require(x.size() == d, ErrorCode::dimension_mismatch, "point has the wrong dimension");
  LinearSystem sys(gens.size());
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rational> row(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) row[k] = Rational(static_cast<long>(gens[k][i]));
    sys.add(std::move(row), Sense::eq, x[i]);
  }
  if (convex) sys.add(std::vector<Rational>(gens.size(), Rational(1)), Sense::eq, Rational(1));
  return sys.solve();
}

}  // namespace

std::optional<std::vector<Rational>> conic_combination(std::span<const IntVec> generators, std::span<const Rational> x) {
  return combination(generators, x, false);
}

std::optional<std::vector<Rational>> convex_combination(std::span<const IntVec> generators, std::span<const Rational> x) {
  return combination(generators, x, true);
}

bool in_cone(std::span<const IntVec> generators, std::span<const std::int64_t> x) {
  auto q = to_rational(x);
  return conic_combination(generators, q).has_value();
}

bool in_convex_hull(std::span<const IntVec> generators, std::span<const std::int64_t> x) {
  auto q = to_rational(x);
  return convex_combination(generators, q).has_value();
}

bool in_convex_hull(std::span<const IntVec> generators, std::span<const Rational> x) {
  return convex_combination(generators, x).has_value();
}

}  // namespace thmc
