#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bkn {

enum class errc {
  parse_error,
  not_bijection,
  not_block_preserving,
  dimension_mismatch,
  not_subtractable,
  not_proper,
  shrink_not_allowed,
  budget_exceeded,
  too_small,
  too_few_points,
  wrong_k,
  duplicate_abscissa,
};

const char* errc_name(errc code);

// Domain error with a machine-readable code. `detail` carries the offending
// 1-based index where one exists (violating block, duplicated abscissa),
// otherwise -1.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message, std::int64_t detail = -1)
      : std::runtime_error(message), code_(code), detail_(detail) {}

  errc code() const noexcept { return code_; }
  std::int64_t detail() const noexcept { return detail_; }

 private:
  errc code_;
  std::int64_t detail_;
};

[[noreturn]] void fail(errc code, const std::string& message,
                       std::int64_t detail = -1);

}  // namespace bkn
