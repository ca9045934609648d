#ifndef HARMLIKE_VERIFY_HPP
#define HARMLIKE_VERIFY_HPP

#include <string>
#include <vector>

namespace harmlike {

// One row of a verification run. expected_to_fail marks checks whose
// failure is the documented outcome (the Staver p=1 variant); such a
// check is "as expected" when passed == false.
struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  bool expected_to_fail = false;
  std::string detail;

  bool as_expected() const { return passed != expected_to_fail; }
};

struct VerifyOptions {
  unsigned n_max = 25;
  // Flips the sign of one series coefficient before comparison. Exists
  // so a deliberately broken run demonstrably exits nonzero.
  bool inject_coefficient_fault = false;
};

std::vector<CheckResult> run_staver_suite(const VerifyOptions& opts);
std::vector<CheckResult> run_recurrence_suite(const VerifyOptions& opts);
std::vector<CheckResult> run_eq2_suite(const VerifyOptions& opts);
std::vector<CheckResult> run_series_coeffs_suite(const VerifyOptions& opts);
std::vector<CheckResult> run_series_values_suite(const VerifyOptions& opts);

// suite in {all, staver, recurrence, eq2, series_coeffs, series_values}.
// Throws std::invalid_argument on an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const VerifyOptions& opts);

// True when every check is as_expected().
bool all_as_expected(const std::vector<CheckResult>& results);

}  // namespace harmlike

#endif  // HARMLIKE_VERIFY_HPP
