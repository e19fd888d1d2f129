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

/// Adaptive Simpson integration of a smooth integrand on [a, b].
/// Throws NumericError when the recursion depth is exhausted before the
/// tolerance is met.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-10, double abs_tol = 1e-14, int max_depth = 48);

/// Trapezoid rule on an arbitrary sorted grid.
double trapezoid(std::span<const double> xs, std::span<const double> ys);
cplx trapezoid(std::span<const double> xs, std::span<const cplx> ys);

/// Integral of a smooth, rapidly decaying integrand over [a, b] by repeated
/// grid halving until two successive trapezoid estimates agree.
cplx refining_trapezoid(const std::function<cplx(double)>& f, double a, double b,
                        double tol = 1e-11, int max_halvings = 18);

/// (2pi)^{-1/2} * integral f(x) e^{-i xi x} dx on a uniform grid, one xi at a time.
cplx fourier_point(std::span<const double> xs, std::span<const cplx> fvals, double xi);

/// Separable 2-D analogue with the (2pi)^{-1} prefactor: out(i,j) is the
/// transform evaluated at (theta_i, varpi_j) of values sampled on
/// (q_axis x p_axis); values is row-major with one row per q.
CMatrix fourier2d(std::span<const double> q_axis, std::span<const double> p_axis,
                  const CMatrix& values, std::span<const double> theta_axis,
                  std::span<const double> varpi_axis);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

/// Ordinary least squares of y against x; max_residual is the sup deviation.
LineFit fit_line(std::span<const double> xs, std::span<const double> ys);

/// Golden-section maximization of a unimodal function on [lo, hi];
/// returns (argmax, max).
std::pair<double, double> golden_max(const std::function<double(double)>& f, double lo,
                                     double hi, double tol = 1e-10);

/// Uniform grid lo, lo+step, ..., last point <= hi + step/2.
std::vector<double> uniform_grid(double lo, double hi, double step);

/// Geometric grid with `per_decade` points per decade of [lo, hi].
std::vector<double> geometric_grid(double lo, double hi, int per_decade);

/// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = hardware).
/// The work must be independent per index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int threads = 0);

}  // namespace fockwig
