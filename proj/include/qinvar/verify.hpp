#pragma once

// Seeded property suites over the library's identities and bounds.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qinvar/execution.hpp"

namespace qinvar {

struct CheckResult {
  std::string name;
  std::size_t samples = 0;
  double worst = 0.0;      // worst observed value of the checked quantity
  double tolerance = 0.0;  // pass iff worst <= tolerance (or >= for lower bounds)
  bool lower_bound = false;
  bool informational = false;  // reported, never fails the suite
  bool passed = true;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
};

const std::vector<std::string>& suite_names();

// std::nullopt for an unknown suite name.
std::optional<SuiteReport> run_suite(std::string_view name, std::uint64_t seed,
                                     Execution exec = Execution::kParallel);

// Stable key order, 17 significant digits.
std::string to_json(const SuiteReport& report);

}  // namespace qinvar
