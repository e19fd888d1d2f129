/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

namespace fockwig {

/// One verdict line of a verification run.
struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // headline quantity (sup error, constant, slope...)
  double threshold = 0.0;  // what it was held against
  std::string details;
};

struct SuiteOptions {
  int n_max = 0;      // 0 = per-check default
  int threads = 0;    // 0 = hardware
  unsigned seed = 1;  // base seed for randomized cases
  std::map<std::string, double> tolerance_overrides;  // keyed by check name

  double tol(const std::string& name, double fallback) const {
    auto it = tolerance_overrides.find(name);
    return it == tolerance_overrides.end() ? fallback : it->second;
  }
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Named suites: hermite, laguerre, wigner, tame, counterexample.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);
std::vector<std::string> suite_names();

// Individual checks, shared between the suites and the acceptance runner.
CheckResult check_orthonormality(int n_top, const SuiteOptions& opts);
CheckResult check_fourier_eigenrelation(int n_top, const SuiteOptions& opts);
CheckResult check_uniform_bound(int n_top, const SuiteOptions& opts);
CheckResult check_tail_envelope(int n_top, const SuiteOptions& opts);
CheckResult check_fourier_fourth_power(const SuiteOptions& opts);
CheckResult check_parseval(const SuiteOptions& opts);

CheckResult check_laguerre_values(const SuiteOptions& opts);
CheckResult check_special_hermite_oracle(int pair_top, int points, const SuiteOptions& opts);
CheckResult check_radiality(const SuiteOptions& opts);
CheckResult check_radial_bound(int m_top, const SuiteOptions& opts);
CheckResult check_krasikov(int n_top, int alpha_top, const SuiteOptions& opts);

CheckResult check_wigner_oracle(const SuiteOptions& opts);
CheckResult check_marginal_identities(int states, int n_max, const SuiteOptions& opts);
CheckResult check_tilde_fourier_eigenrelation(int order_sum_top, const SuiteOptions& opts);
CheckResult check_ambiguity_consistency(int states, const SuiteOptions& opts);
CheckResult check_isometry_ratio(int states, const SuiteOptions& opts);

CheckResult check_conjugate_properties(const SuiteOptions& opts);
CheckResult check_moment_bound(const SuiteOptions& opts);
CheckResult check_tail_sum(const SuiteOptions& opts);
CheckResult check_envelope_recovery(const SuiteOptions& opts);
std::vector<CheckResult> check_tame_bounds(int n_max, const SuiteOptions& opts);

std::vector<CheckResult> check_counterexample(int n_max, bool literal_series_tolerance,
                                              const SuiteOptions& opts);

}  // namespace fockwig
