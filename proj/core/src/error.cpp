#include "bkn/error.hpp"

namespace bkn {

const char* errc_name(errc code) {
  switch (code) {
    case errc::parse_error: return "ParseError";
    case errc::not_bijection: return "NotBijection";
    case errc::not_block_preserving: return "NotBlockPreserving";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_subtractable: return "NotSubtractable";
    case errc::not_proper: return "NotProper";
    case errc::shrink_not_allowed: return "ShrinkNotAllowed";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::too_small: return "TooSmall";
    case errc::too_few_points: return "TooFewPoints";
    case errc::wrong_k: return "WrongK";
    case errc::duplicate_abscissa: return "DuplicateAbscissa";
  }
  return "UnknownError";
}

void fail(errc code, const std::string& message, std::int64_t detail) {
  throw Error(code, message, detail);
}

}  // namespace bkn
