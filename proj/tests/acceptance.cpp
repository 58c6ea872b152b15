// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria with a runtime budget fail when the budget is exceeded.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bern/verification.hpp"

namespace {

struct Criterion {
  std::string name;
  std::function<std::vector<bern::CheckResult>()> run;
  double time_budget_s;  // 0 = unlimited
};

}  // namespace

int main() {
  using bern::CheckResult;
  std::vector<Criterion> criteria = {
      {"1 kernel identity (I = (1-r^2)^{1-t} phi, series/quad/identity)",
       bern::verify_lemma1_identity, 5.0},
      {"2 psi vanishes (value and functional equation)", bern::verify_psi_zero, 0.0},
      {"3 monotonicity and convexity of the kernel integrals",
       bern::verify_monotonicity, 0.0},
      {"4 closed-form anchors I(2,r), I(4,r)", bern::verify_closed_form_anchors, 0.0},
      {"5 Parseval cross-paths (series vs quadrature)", bern::verify_parseval, 30.0},
      {"6 lower bound floor for 1/(1-rz)^n in Bergman spaces",
       bern::verify_lower_bound, 0.0},
      {"7 sampled upper bound: spread and linear growth in n",
       bern::verify_upper_sampling, 0.0},
      {"8 H2 limit (1+r)/(1-r) via confluent operator norms",
       bern::verify_h2_limit, 60.0},
      {"9 tail-integral comparability, constants independent of t",
       bern::verify_lemma2, 0.0},
      {"10 power iteration vs dense eigensolver", bern::verify_eigen_oracle, 0.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> checks;
    std::string error;
    try {
      checks = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = error.empty() && bern::all_passed(checks);
    bool in_budget = c.time_budget_s == 0.0 || dt <= c.time_budget_s;
    if (!ok || !in_budget) ++failures;
    std::printf("criterion %-60s %s (%.2fs%s)\n", c.name.c_str(),
                (ok && in_budget) ? "PASS" : "FAIL", dt,
                in_budget ? "" : ", over budget");
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    for (const auto& chk : checks)
      if (!chk.passed || !ok)
        std::printf("    %-40s %s  %s\n", chk.name.c_str(),
                    chk.passed ? "pass" : "FAIL", chk.detail.c_str());
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
