#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace paley {

enum class Errc {
  dimension_mismatch,
  empty_input,
  invalid_argument,
  invalid_exponent,
  invalid_witness,
  parity,
  empty_plan,
  out_of_range,
  too_large,
  singular_point,
  search_exhausted,
  collision,
  undefined_ratio,
  no_witness,
  parse,
};

std::string_view errc_name(Errc code) noexcept;

// Validation errors are caller mistakes; the remaining codes are
// structured domain failures (the inputs were well formed but the
// construction cannot proceed).
bool is_validation_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Enumeration refused because the set is larger than the configured cap.
// `count` is the exact cardinality as a decimal string (it may not fit a
// machine word).
class TooLargeError : public Error {
 public:
  TooLargeError(const std::string& what, std::string count)
      : Error(Errc::too_large, what), count_(std::move(count)) {}
  const std::string& count() const noexcept { return count_; }

 private:
  std::string count_;
};

}  // namespace paley
