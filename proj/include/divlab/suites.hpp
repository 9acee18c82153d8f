#pragma once

// Seeded property suites. Trials run in parallel; every trial draws from its
// own RNG stream, and outcomes are reduced in trial order.

#include "divlab/spectral.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace divlab {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int trials = 50;
  Index dim = 3;
  /// Truncation cap for the variational-agreement suite.
  int n_max = 1 << 14;
};

struct SuiteOutcome {
  std::string suite;
  std::string property;
  int trials = 0;
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown name.
std::vector<SuiteOutcome> run_suite(const std::string& name, const SuiteOptions& options);

/// `name` may be "all".
std::vector<SuiteOutcome> run_suites(const std::string& name, const SuiteOptions& options);

}  // namespace divlab
