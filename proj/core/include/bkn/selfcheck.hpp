#pragma once

#include <string>
#include <vector>

#include "bkn/numeric.hpp"

namespace bkn {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // what went wrong, empty on success
};

// The ten golden identities from the published worked examples: two type
// extractions, restriction and isomorphism tables, a composition table, and
// five class-sum product expansions at small n. All exact.
std::vector<CheckResult> reference_checks(Budget budget = {});

}  // namespace bkn
