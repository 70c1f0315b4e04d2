#pragma once

// Identity and conjecture verification suites. Each check runs a whole family
// of equalities at the bounds of the chosen profile and reports one result;
// the CLI turns the list into a JSON report, and the acceptance tests consume
// it directly.

#include <string>
#include <vector>

#include "zigzag/exact.hpp"

namespace zigzag::verify {

struct CheckResult {
  std::string id;
  std::string params;  // the bounds actually used, human-readable
  std::string status;  // "pass", "fail" or "discrepancy-noted"
  std::string detail;
};

enum class Profile { quick, full };

// The matrix-identity battery on its own, so tests can re-run it with the
// deliberately broken variant (x_as_identity) and watch it fail.
std::vector<CheckResult> matrix_battery(int mmax, bool x_as_identity);

// Every check of every suite at the profile's bounds, in fixed order.
std::vector<CheckResult> run_all(Profile profile);

bool has_failure(const std::vector<CheckResult>& checks);

std::string report_json(const std::vector<CheckResult>& checks,
                        Profile profile);

}  // namespace zigzag::verify
