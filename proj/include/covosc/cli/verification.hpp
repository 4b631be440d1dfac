#pragma once

// Oracle-versus-closed-form checks behind `covosc verify`.

#include <string>
#include <vector>

namespace covosc::cli {

struct VerifyOptions {
  int quad_order = 68;
  double fd_step = 1e-3;
  bool strict = false;
};

struct CheckResult {
  std::string module;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Runs every check; deterministic for a given set of options.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace covosc::cli
