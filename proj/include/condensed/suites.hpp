#pragma once

// Named verification suites, one per numbered statement exercised by the
// engine. Shared by `condensed verify` and the acceptance runner; every
// suite is deterministic given its seed.

#include <cstdint>
#include <string>
#include <vector>

#include "condensed/plus.hpp"

namespace condensed {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::vector<std::string> details;  // deterministic, no timing
};

// In execution order for `verify --suite all`.
std::vector<std::string> suite_names();

// cases == 0 selects each suite's default count. Unknown names throw
// std::out_of_range (the CLI validates beforehand).
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t cases = 0);

std::vector<SuiteResult> run_all(std::uint64_t seed, std::size_t cases = 0);

}  // namespace condensed
