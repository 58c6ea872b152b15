#ifndef BERN_VERIFICATION_HPP
#define BERN_VERIFICATION_HPP

#include <string>
#include <vector>

namespace bern {

// Named checks behind `verify ...` and the acceptance suite. Tolerances are
// pinned here.
struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<CheckResult> verify_lemma1_identity();
std::vector<CheckResult> verify_closed_form_anchors();
std::vector<CheckResult> verify_psi_zero();
std::vector<CheckResult> verify_monotonicity();
std::vector<CheckResult> verify_parseval();
std::vector<CheckResult> verify_lower_bound();
std::vector<CheckResult> verify_upper_sampling();
std::vector<CheckResult> verify_h2_limit();
std::vector<CheckResult> verify_lemma2();
std::vector<CheckResult> verify_eigen_oracle();

std::vector<CheckResult> verify_all();

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace bern

#endif
