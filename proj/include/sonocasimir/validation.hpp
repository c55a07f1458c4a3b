#pragma once

// Self-check suite run by `sonocasimir validate`: identity and property checks
// over every module, each reported with a metric and a pass threshold.

#include <string>
#include <vector>

namespace sono {

struct ValidationOptions {
  /// Families to run; empty runs all (see validation_families()).
  std::vector<std::string> families;
  /// Relative perturbation applied to J_{l+1/2} inside the identity checks
  /// (fault injection; 0 for a normal run).
  double perturb = 0.0;
  double tail_epsilon = 1e-8;
  int threads = 0;
};

struct CheckResult {
  std::string family;
  std::string name;
  bool passed = false;
  double metric = 0.0;
  double threshold = 0.0;
  double seconds = 0.0;
  std::string detail;
};

/// wronskian, junction, overlap, symmetry, diagonal, period-average, plateau,
/// four-over-pi, energy-discrepancy.
const std::vector<std::string>& validation_families();

/// Throws DomainError for an unknown family name.
std::vector<CheckResult> run_validation(const ValidationOptions& options);

}  // namespace sono
