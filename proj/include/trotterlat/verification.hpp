#pragma once

#include <string>
#include <vector>

namespace trotterlat {

struct CheckResult {
  int criterion = 0;  // grouping key for the acceptance report
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  bool quick = false;  // skip the exact-diagonalization spectrum checks
  std::string data_dir;
};

/// Runs the complete reproduction suite: worked-example values, commutator
/// counts, A polynomials, cross-method bound equality, pair accounting,
/// golden tables, 1-norm identities, Pauli depths, anticommutation checks,
/// spectrum overlap, Pauli-norm sampling and scaling properties.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);
std::string format_check_lines(const std::vector<CheckResult>& results);
/// One line per acceptance criterion, aggregated over its checks.
std::string format_criterion_summary(const std::vector<CheckResult>& results);

}  // namespace trotterlat
