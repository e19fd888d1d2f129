/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "hermite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eigen.hpp"
#include "errors.hpp"

namespace fockwig {

namespace {

void check_ceiling(int n_max) {
  if (n_max < 0) throw ArgumentError("hermite: n_max must be nonnegative");
  if (n_max > kHermiteCeiling)
    throw CapacityError("hermite: n_max " + std::to_string(n_max) +
                        " beyond the configured ceiling " + std::to_string(kHermiteCeiling));
}

// Three-term recurrence on rescaled mantissas: the true value is
// mantissa * e^{log_scale}. Seeding the plain recurrence with
// h_0 = pi^{-1/4} e^{-x^2/2} underflows for |x| >~ 38 and zeroes the whole
// column although h_n = O(1) near the turning point; carrying the Gaussian
// in log form keeps every representable value exact to rounding.
class HermiteWalker {
 public:
  explicit HermiteWalker(double x) : x_(x) {
    log_scale_ = -0.5 * x * x - 0.25 * std::log(M_PI);
    factor_ = std::exp(log_scale_);
  }

  double value() const {
    if (log_scale_ > -600.0) return cur_ * factor_;
    if (cur_ == 0.0) return 0.0;
    const double l = log_scale_ + std::log(std::abs(cur_));
    return l < -745.0 ? 0.0 : std::copysign(std::exp(l), cur_);
  }

  void advance() {
    const double k = static_cast<double>(n_);
    const double nxt =
        std::sqrt(2.0 / (k + 1.0)) * x_ * cur_ - std::sqrt(k / (k + 1.0)) * prev_;
    prev_ = cur_;
    cur_ = nxt;
    ++n_;
    if (std::abs(cur_) > 1e250) {
      cur_ *= 1e-250;
      prev_ *= 1e-250;
      log_scale_ += std::log(1e250);
      factor_ = std::exp(log_scale_);
    }
  }

 private:
  double x_;
  double prev_ = 0.0, cur_ = 1.0;
  double log_scale_;
  double factor_;
  int n_ = 0;
};

}  // namespace

CoefficientSequence CoefficientSequence::unit(int n, int n_max) {
  if (n < 0 || n > n_max) throw ArgumentError("unit coefficient: need 0 <= n <= n_max");
  std::vector<cplx> v(static_cast<std::size_t>(n_max) + 1, cplx(0.0, 0.0));
  v[n] = cplx(1.0, 0.0);
  return CoefficientSequence(std::move(v));
}

void hermite_values_into(int n_max, double x, std::span<double> out) {
  check_ceiling(n_max);
  if (out.size() < static_cast<std::size_t>(n_max) + 1)
    throw ArgumentError("hermite_values_into: output span too small");
  HermiteWalker walk(x);
  out[0] = walk.value();
  for (int n = 1; n <= n_max; ++n) {
    walk.advance();
    out[n] = walk.value();
  }
}

std::vector<double> hermite_values(int n_max, double x) {
  check_ceiling(n_max);
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  hermite_values_into(n_max, x, out);
  return out;
}

double hermite_at(int n, double x) {
  check_ceiling(n);
  HermiteWalker walk(x);
  for (int k = 0; k < n; ++k) walk.advance();
  return walk.value();
}

cplx synthesize_at(const CoefficientSequence& alpha, double x) {
  const int n_max = alpha.n_max();
  check_ceiling(std::max(n_max, 0));
  HermiteWalker walk(x);
  cplx acc(0.0, 0.0);
  for (int n = 0; n <= n_max; ++n) {
    acc += alpha.values[n] * walk.value();
    walk.advance();
  }
  return acc;
}

QuadratureRule gauss_hermite_rule(int order) {
  if (order < 1) throw ArgumentError("gauss_hermite_rule: order must be >= 1");
  if (order > kHermiteCeiling + 1)
    throw CapacityError("gauss_hermite_rule: order beyond ceiling");

  // Jacobi matrix of the monic recurrence p_{n+1} = x p_n - (n/2) p_{n-1}
  std::vector<double> diag(order, 0.0), off(order > 1 ? order - 1 : 0);
  for (int k = 1; k < order; ++k) off[k - 1] = std::sqrt(k / 2.0);
  std::vector<double> nodes = tridiagonal_eigenvalues(diag, off);

  // enforce the exact +/- symmetry of the spectrum
  for (int i = 0, j = order - 1; i < j; ++i, --j) {
    const double s = 0.5 * (nodes[j] - nodes[i]);
    nodes[i] = -s;
    nodes[j] = s;
  }
  if (order % 2 == 1) nodes[order / 2] = 0.0;

  QuadratureRule rule;
  rule.nodes = std::move(nodes);
  rule.weights.resize(order);
  rule.lifted_weights.resize(order);
  // Christoffel form: 1 / sum_j h_j(x_k)^2 equals w_k e^{x_k^2} and stays
  // well-scaled at any order, where eigenvector components would underflow.
  std::vector<double> h(static_cast<std::size_t>(order));
  for (int k = 0; k < order; ++k) {
    hermite_values_into(order - 1, rule.nodes[k], h);
    double s = 0.0;
    for (double v : h) s += v * v;
    rule.lifted_weights[k] = 1.0 / s;
    rule.weights[k] = std::exp(-rule.nodes[k] * rule.nodes[k]) / s;
  }
  return rule;
}

CoefficientSequence analyze(const std::function<cplx(double)>& f, int n_max,
                            const QuadratureRule& rule) {
  check_ceiling(n_max);
  if (rule.order() < n_max + 1)
    throw ArgumentError("analyze: rule order must be at least n_max + 1");
  std::vector<cplx> alpha(static_cast<std::size_t>(n_max) + 1, cplx(0.0, 0.0));
  std::vector<double> h(static_cast<std::size_t>(n_max) + 1);
  for (int k = 0; k < rule.order(); ++k) {
    const double x = rule.nodes[k];
    const cplx fx = f(x);
    if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag()))
      throw DataError("analyze: integrand not finite at node x = " + std::to_string(x));
    hermite_values_into(n_max, x, h);
    const cplx scaled = rule.lifted_weights[k] * fx;
    for (int n = 0; n <= n_max; ++n) alpha[n] += scaled * h[n];
  }
  return CoefficientSequence(std::move(alpha));
}

std::vector<cplx> synthesize(const CoefficientSequence& alpha, std::span<const double> xs) {
  const int n_max = alpha.n_max();
  check_ceiling(std::max(n_max, 0));
  std::vector<cplx> out(xs.size(), cplx(0.0, 0.0));
  if (n_max < 0) return out;
  std::vector<double> h(static_cast<std::size_t>(n_max) + 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    hermite_values_into(n_max, xs[i], h);
    cplx acc(0.0, 0.0);
    for (int n = 0; n <= n_max; ++n) acc += alpha.values[n] * h[n];
    out[i] = acc;
  }
  return out;
}

CoefficientSequence fourier_in_coefficients(const CoefficientSequence& alpha) {
  static const cplx cycle[4] = {cplx(1, 0), cplx(0, -1), cplx(-1, 0), cplx(0, 1)};
  std::vector<cplx> v(alpha.values.size());
  for (std::size_t n = 0; n < v.size(); ++n) v[n] = cycle[n % 4] * alpha.values[n];
  return CoefficientSequence(std::move(v));
}

FourierResult fourier_numeric(std::span<const double> xs, std::span<const cplx> fvals,
                              std::span<const double> xi_grid) {
  if (xs.size() != fvals.size() || xs.size() < 2)
    throw ArgumentError("fourier_numeric: need matching samples with >= 2 points");
  const std::size_t n = xs.size();
  const double dx = (xs.back() - xs.front()) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (std::abs(xs[i + 1] - xs[i] - dx) > 1e-9 * std::max(1.0, std::abs(dx)))
      throw ArgumentError("fourier_numeric: grid must be uniform");
  if (std::abs(xs.front() + xs.back()) > 1e-9 * std::max(1.0, std::abs(xs.back())))
    throw ArgumentError("fourier_numeric: grid must be symmetric about 0");

  double peak = 0.0;
  for (const cplx& v : fvals) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DataError("fourier_numeric: non-finite sample");
    peak = std::max(peak, std::abs(v));
  }
  FourierResult res;
  res.boundary_magnitude = std::max(std::abs(fvals.front()), std::abs(fvals.back()));
  res.truncation_warning = res.boundary_magnitude > 1e-14 * std::max(1.0, peak);

  res.values.resize(xi_grid.size());
  const double norm = dx / std::sqrt(2.0 * M_PI);
  for (std::size_t j = 0; j < xi_grid.size(); ++j) {
    const double xi = xi_grid[j];
    // phase recurrence: e^{-i xi (x0 + k dx)}
    const cplx step = std::polar(1.0, -xi * dx);
    cplx phase = std::polar(1.0, -xi * xs.front());
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double wt = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
      acc += wt * fvals[i] * phase;
      phase *= step;
    }
    res.values[j] = acc * norm;
  }
  return res;
}

CoefficientSequence hermite_operator_in_coefficients(const CoefficientSequence& alpha,
                                                     int power) {
  if (power < 0) throw ArgumentError("hermite_operator: power must be nonnegative");
  static const double log_dbl_max = std::log(std::numeric_limits<double>::max());
  std::vector<cplx> v(alpha.values.size());
  for (std::size_t n = 0; n < v.size(); ++n) {
    const double mag = std::abs(alpha.values[n]);
    if (mag == 0.0) {
      v[n] = cplx(0.0, 0.0);
      continue;
    }
    const double log_factor = power * std::log(2.0 * static_cast<double>(n) + 1.0);
    if (std::log(mag) + log_factor > log_dbl_max)
      throw NumericError("hermite_operator: (2n+1)^M overflows double range at n = " +
                         std::to_string(n));
    v[n] = alpha.values[n] * std::exp(log_factor);
  }
  return CoefficientSequence(std::move(v));
}

EnvelopeCheck hermite_tail_envelope_check(int n, std::span<const double> xs) {
  check_ceiling(n);
  const double s = std::sqrt(2.0 * n + 1.0);
  EnvelopeCheck chk;
  chk.min_slack = std::numeric_limits<double>::infinity();
  std::vector<double> h(static_cast<std::size_t>(n) + 1);
  for (double x : xs) {
    const double ax = std::abs(x);
    if (ax < s) continue;
    hermite_values_into(n, x, h);
    const double bound = std::exp(-0.5 * (ax - s) * (ax - s));
    const double val = std::abs(h[n]);
    ++chk.points_checked;
    chk.min_slack = std::min(chk.min_slack, bound - val);
    if (val > bound) {
      chk.holds = false;
      chk.max_violation = std::max(chk.max_violation, val - bound);
    }
  }
  if (chk.points_checked == 0)
    throw ArgumentError("hermite_tail_envelope_check: grid has no points with |x| >= sqrt(2n+1)");
  return chk;
}

}  // namespace fockwig
