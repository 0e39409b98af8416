#include "paley/error.hpp"

namespace paley {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::empty_input: return "empty_input";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::invalid_exponent: return "invalid_exponent";
    case Errc::invalid_witness: return "invalid_witness";
    case Errc::parity: return "parity";
    case Errc::empty_plan: return "empty_plan";
    case Errc::out_of_range: return "out_of_range";
    case Errc::too_large: return "too_large";
    case Errc::singular_point: return "singular_point";
    case Errc::search_exhausted: return "search_exhausted";
    case Errc::collision: return "collision";
    case Errc::undefined_ratio: return "undefined_ratio";
    case Errc::no_witness: return "no_witness";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

bool is_validation_error(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_mismatch:
    case Errc::empty_input:
    case Errc::invalid_argument:
    case Errc::invalid_exponent:
    case Errc::invalid_witness:
    case Errc::parity:
    case Errc::empty_plan:
    case Errc::out_of_range:
    case Errc::parse:
      return true;
    default:
      return false;
  }
}

}  // namespace paley
