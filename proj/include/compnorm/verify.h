#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace compnorm {

struct CheckResult {
  std::string label;
  double value;
  double bound;
  bool ok;
};

struct SuiteResult {
  std::string name;
  // The inequality or identity the suite exercises.
  std::string anchor;
  std::vector<CheckResult> checks;
  bool passed() const;
};

// dkzeta, riemann, alpha0, multinomial, adjoint, brevig, newupper, pointeval,
// subordination, carleson, shapiro, z2z, littlewood, inner, consistency.
const std::vector<std::string>& suite_names();

// Throws PreconditionError for unknown names.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

}  // namespace compnorm
