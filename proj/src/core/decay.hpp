/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hermite.hpp"
#include "types.hpp"
#include "weights.hpp"

namespace fockwig {

/// Fitted |alpha_n| <= c_hat * exp(-lambda_hat * n^{beta_hat/2}).
///
/// `degenerate` marks sequences that decay but not within the family (large
/// log-domain residual); genuinely non-decaying input is an error instead.
struct DecayEnvelope {
  double lambda_hat = 0.0;
  double beta_hat = 0.0;
  double c_hat = 0.0;
  double residual = 0.0;
  int support_count = 0;
  bool degenerate = false;
};

/// Least squares of log(-log(|alpha_n|/c_hat)) against log sqrt(n) over the
/// retained indices (|alpha_n| > max * 1e-12, n >= 4, ratio < 1).
DecayEnvelope fit_envelope(const CoefficientSequence& alpha);

/// A function prepared for norm evaluation: an evaluator for quadrature plus
/// samples of the function and of its Fourier transform on fixed grids.
struct TestFunction {
  std::function<cplx(double)> eval;
  SampledFunction f;
  SampledFunction ff;
};

/// Builds the test function of a finite expansion; the transform side uses the
/// exact coefficient-space Fourier action, so both sample sets are consistent
/// to rounding.
TestFunction function_from_coefficients(const CoefficientSequence& alpha,
                                        std::span<const double> grid);

/// Default symmetric sample grid |x| <= 12, spacing 1/64.
std::vector<double> default_norm_grid();

/// Default dilation search grid {1, 1.5, 2, 3, 4, 6, 8}.
std::vector<double> default_cbar_grid();

struct TameCase {
  double cbar = 0.0;
  double rhs_norm = 0.0;
  bool rhs_diverging = false;
  double ratio = 0.0;  // lhs / rhs, +inf when either side is not finite
};

struct TameBoundReport {
  double lhs_norm = 0.0;
  bool lhs_diverging = false;
  std::vector<TameCase> cases;
  bool in_class = false;       // some dilation kept both sides finite
  double smallest_cbar = 0.0;  // +inf when not in class
  double constant = 0.0;       // ratio at the smallest admissible dilation
};

/// Ratio sup-norm of the coefficients against dilated function norms:
/// per dilation cbar, || coefficients ||_w / || f ||_{cbar w}.
TameBoundReport verify_forward_bound(const TestFunction& f, const WeightFunction& w,
                                     std::span<const double> cbar_grid, int n_max,
                                     const QuadratureRule& rule);

/// Mirror direction: synthesizes f from the coefficients and compares
/// || f ||_w against || coefficients ||_{cbar w}. Requires the strict
/// quadratic-cap axiom (v); raises a precondition error otherwise.
TameBoundReport verify_backward_bound(const CoefficientSequence& alpha,
                                      const WeightFunction& w,
                                      std::span<const double> cbar_grid,
                                      std::span<const double> grid);

struct TailSumCase {
  double y = 0.0;
  double tail = 0.0;    // sum_{n >= y} e^{-cbar w(sqrt n)}, summed to convergence
  double c_half = 0.0;  // tail / e^{-cbar w(sqrt y)/2}
  double c_full = 0.0;  // tail / e^{-cbar w(sqrt y)}
  long terms = 0;
};

struct TailSumReport {
  std::vector<TailSumCase> cases;
  double max_c_half = 0.0;
  double max_c_full = 0.0;
};

/// Exact tail sums of e^{-cbar w(sqrt n)} with the smallest constants making
/// the half-exponent and full-exponent envelopes valid at each y.
TailSumReport tail_sum_check(const WeightFunction& w, double cbar, std::span<const double> ys);

struct MomentCase {
  int nu = 0;
  double l2_norm = 0.0;  // || x^nu f ||_{L^2} by quadrature
  double ratio = 0.0;    // l2_norm / (e^{Omega*(nu+1)} * ||f||_w)
};

struct MomentBoundReport {
  std::vector<MomentCase> cases;
  double empirical_c = 0.0;  // max ratio over nu = 0..nu_max
  double f_norm = 0.0;
  bool f_norm_diverging = false;
  bool truncation_warning = false;
};

/// Weighted-moment growth check: || x^nu f ||_{L^2} against e^{Omega*(nu+1)}
/// times the weighted sup norm of f, for nu = 0..nu_max.
MomentBoundReport moment_bound_check(const TestFunction& f, const WeightFunction& w,
                                     int nu_max, const QuadratureRule& rule);

}  // namespace fockwig
