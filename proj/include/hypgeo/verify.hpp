#pragma once

// Self-check suite: every library property run as a named check with its
// worst residual, on seeded random samples.

#include <string>
#include <vector>

namespace hypgeo {

enum class Suite { Fast, All };

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;   // largest residual relative to its own limit scale
  std::string detail;   // what was measured, or the exception text
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  std::size_t failures() const;
};

/// Runs the fast checks, plus the expensive grid sweeps for Suite::All.
/// A throwing check is recorded as failed; the run continues.
VerifyReport run_verify(Suite suite);

/// One line per check: "PASS name worst=... detail", then a summary line.
std::string format_report(const VerifyReport& report);

}  // namespace hypgeo
