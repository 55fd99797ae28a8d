#include "thmc/error.hpp"

#include <numeric>
#include <sstream>

#include "thmc/types.hpp"

namespace thmc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_dimension: return "invalid-dimension";
    case ErrorCode::inconsistent_words: return "inconsistent-words";
    case ErrorCode::loop_violation: return "loop-violation";
    case ErrorCode::size_cap_exceeded: return "size-cap-exceeded";
    case ErrorCode::zero_normalizer: return "zero-normalizer";
    case ErrorCode::no_eulerian_path: return "no-eulerian-path";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::invalid_indices: return "invalid-indices";
    case ErrorCode::degenerate_input: return "degenerate-input";
    case ErrorCode::range_exceeded: return "range-exceeded";
    case ErrorCode::witness_verification_failed: return "witness-verification-failed";
    case ErrorCode::degree_cap_exceeded: return "degree-cap-exceeded";
    case ErrorCode::cap_exceeded: return "cap-exceeded";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  require(a.size() == b.size(), ErrorCode::dimension_mismatch, "dot product of unequal lengths");
  std::int64_t r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r = checked_add(r, checked_mul(a[i], b[i]));
  return r;
}

std::int64_t sum(std::span<const std::int64_t> a) {
  std::int64_t r = 0;
  for (std::int64_t x : a) r = checked_add(r, x);
  return r;
}

std::int64_t gcd_of(std::span<const std::int64_t> a) {
  std::int64_t g = 0;
  for (std::int64_t x : a) g = std::gcd(g, x);
  return g;
}

IntVec make_primitive(IntVec v) {
  std::int64_t g = gcd_of(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

IntVec add(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  require(a.size() == b.size(), ErrorCode::dimension_mismatch, "vector sum of unequal lengths");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVec subtract(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  require(a.size() == b.size(), ErrorCode::dimension_mismatch, "vector difference of unequal lengths");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

bool is_nonnegative(std::span<const std::int64_t> a) {
  for (std::int64_t x : a) {
    if (x < 0) return false;
  }
  return true;
}

std::int64_t to_int64(const Int& value) {
  require(value.fits_slong_p(), ErrorCode::overflow, "integer does not fit in 64 bits: " + value.get_str());
  return value.get_si();
}

std::string format_vector(std::span<const std::int64_t> v, std::string_view separator) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << separator;
    out << v[i];
  }
  return out.str();
}

}  // namespace thmc
