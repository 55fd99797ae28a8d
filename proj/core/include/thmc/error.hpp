#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thmc {

enum class ErrorCode {
  invalid_dimension,
  inconsistent_words,
  loop_violation,
  size_cap_exceeded,
  zero_normalizer,
  no_eulerian_path,
  dimension_mismatch,
  invalid_indices,
  degenerate_input,
  range_exceeded,
  witness_verification_failed,
  degree_cap_exceeded,
  cap_exceeded,
  invalid_argument,
  parse_error,
  overflow,
  internal,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace thmc
