#pragma once

#include <optional>
#include <span>
#include <vector>

#include "thmc/types.hpp"

namespace thmc {

enum class Sense { le, eq, ge };

// Linear constraints over exact rationals. Variables are non-negative unless
// marked free.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t variables);

  std::size_t variables() const noexcept { return free_.size(); }
  void set_free(std::size_t var, bool is_free = true) { free_.at(var) = is_free; }
  void add(std::vector<Rational> coeffs, Sense sense, Rational rhs);
  void add(std::span<const std::int64_t> coeffs, Sense sense, std::int64_t rhs);

  // A point satisfying every constraint, or nullopt. Phase I simplex with
  // Bland's rule, so it terminates and is exact.
  std::optional<std::vector<Rational>> solve() const;

 private:
  struct Row {
    std::vector<Rational> coeffs;
    Sense sense;
    Rational rhs;
  };
  std::vector<bool> free_;
  std::vector<Row> rows_;
};

// Non-negative lambda with sum_k lambda_k g_k = x (and sum lambda = 1 for the hull).
std::optional<std::vector<Rational>> conic_combination(std::span<const IntVec> generators, std::span<const Rational> x);
std::optional<std::vector<Rational>> convex_combination(std::span<const IntVec> generators, std::span<const Rational> x);

bool in_cone(std::span<const IntVec> generators, std::span<const std::int64_t> x);
bool in_convex_hull(std::span<const IntVec> generators, std::span<const std::int64_t> x);
bool in_convex_hull(std::span<const IntVec> generators, std::span<const Rational> x);

std::vector<Rational> to_rational(std::span<const std::int64_t> v);

}  // namespace thmc
