#pragma once

#include <functional>
#include <string>
#include <vector>

namespace phin::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  /// Worst observed error (or the measured quantity being bounded).
  double metric = 0.0;
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string detail;
};

struct Check {
  std::string name;
  std::function<CheckResult()> run;
};

/// The ten acceptance criteria in order.
std::vector<Check> criteria();

/// Named invariant suites: kernel, hilbert, subspace, transform, quadrature,
/// stft, criteria.
std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown name.
std::vector<Check> suite(const std::string& name);

/// Runs a check, converting exceptions into failures and timing it.
CheckResult run_check(const Check& check);

/// "PASS <name>  metric=... tol=... time=...s [detail]".
std::string format_line(const CheckResult& r);

}  // namespace phin::verify
