#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "thmc/error.hpp"

namespace thmc {

using Int = mpz_class;
using Rational = mpq_class;

// Small exact integer vectors (design columns, facet normals, lattice points).
// Arithmetic on them goes through the checked helpers below, which throw
// ErrorCode::overflow instead of wrapping.
using IntVec = std::vector<std::int64_t>;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::overflow, "int64 addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::overflow, "int64 subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::overflow, "int64 multiplication overflow");
  return r;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
std::int64_t sum(std::span<const std::int64_t> a);
std::int64_t gcd_of(std::span<const std::int64_t> a);

// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec make_primitive(IntVec v);

IntVec add(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
IntVec subtract(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
bool is_nonnegative(std::span<const std::int64_t> a);

std::int64_t to_int64(const Int& value);

std::string format_vector(std::span<const std::int64_t> v, std::string_view separator = " ");

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
    for (std::int64_t x : v) {
      h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace thmc
