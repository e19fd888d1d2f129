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

#include "types.hpp"

namespace fockwig {

/// Highest basis index the double-precision recurrences are rated for.
inline constexpr int kHermiteCeiling = 4096;

/// Complex expansion coefficients alpha_0..alpha_{n_max} against the
/// orthonormal Hermite-function basis.
struct CoefficientSequence {
  std::vector<cplx> values;

  CoefficientSequence() = default;
  explicit CoefficientSequence(std::vector<cplx> v) : values(std::move(v)) {}
  static CoefficientSequence unit(int n, int n_max);

  int n_max() const { return static_cast<int>(values.size()) - 1; }
  cplx at(int n) const {
    return (n >= 0 && n < static_cast<int>(values.size())) ? values[n] : cplx(0.0, 0.0);
  }
};

/// Orthonormal Hermite function values h_0(x)..h_{n_max}(x) by the normalized
/// three-term recurrence seeded with the Gaussian; every value satisfies
/// |h_n(x)| <= 1.
std::vector<double> hermite_values(int n_max, double x);
void hermite_values_into(int n_max, double x, std::span<double> out);

/// Single value h_n(x) without materializing the lower orders.
double hermite_at(int n, double x);

/// Single partial-sum value without materializing the basis column.
cplx synthesize_at(const CoefficientSequence& alpha, double x);

/// Gauss rule for the weight e^{-x^2} on the real line.
///
/// `weights` are the raw quadrature weights (they underflow gracefully at the
/// extreme nodes of very large rules); `lifted_weights` carry the e^{x_k^2}
/// factor, i.e. integral f ~= sum lifted_weights[k] * (f * e^{-x^2})(x_k), and
/// stay well-scaled at any order.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> lifted_weights;

  int order() const { return static_cast<int>(nodes.size()); }
};

QuadratureRule gauss_hermite_rule(int order);

/// alpha_n ~= <f, h_n> for n <= n_max, via the rule (order >= n_max + 1).
CoefficientSequence analyze(const std::function<cplx(double)>& f, int n_max,
                            const QuadratureRule& rule);

/// Partial sum sum_n alpha_n h_n(x) at each x.
std::vector<cplx> synthesize(const CoefficientSequence& alpha, std::span<const double> xs);

/// Exact Fourier action in coefficient space: alpha_n -> (-i)^n alpha_n.
CoefficientSequence fourier_in_coefficients(const CoefficientSequence& alpha);

/// Trapezoid Fourier transform of uniformly sampled f at each xi.
/// The grid must be uniform and symmetric about 0; insufficient boundary decay
/// is flagged, not fatal.
struct FourierResult {
  std::vector<cplx> values;
  bool truncation_warning = false;
  double boundary_magnitude = 0.0;
};

FourierResult fourier_numeric(std::span<const double> xs, std::span<const cplx> fvals,
                              std::span<const double> xi_grid);

/// alpha_n -> (2n+1)^M alpha_n; the factor is assembled in log-magnitude form
/// and an explicit overflow error is raised if any term leaves double range.
CoefficientSequence hermite_operator_in_coefficients(const CoefficientSequence& alpha, int power);

/// Checks |h_n(x)| <= e^{-(|x|-s)^2/2} with s = sqrt(2n+1) at every grid point
/// with |x| >= s.
struct EnvelopeCheck {
  bool holds = true;
  double max_violation = 0.0;  // max of |h_n| - bound over violating points
  double min_slack = 0.0;      // min of bound - |h_n| over checked points
  int points_checked = 0;
};

EnvelopeCheck hermite_tail_envelope_check(int n, std::span<const double> xs);

}  // namespace fockwig
