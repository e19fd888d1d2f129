/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "decay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "numerics.hpp"

namespace fockwig {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
// log-domain residual above which a fit is reported as outside the family
constexpr double kDegenerateResidual = 0.05;
}  // namespace

DecayEnvelope fit_envelope(const CoefficientSequence& alpha) {
  double peak = 0.0;
  for (const cplx& v : alpha.values) {
    const double m = std::abs(v);
    if (!std::isfinite(m)) throw DataError("fit_envelope: non-finite coefficient");
    peak = std::max(peak, m);
  }
  if (peak == 0.0) throw ArgumentError("fit_envelope: zero sequence");

  std::vector<double> us, ys;
  for (int n = 4; n <= alpha.n_max(); ++n) {
    const double m = std::abs(alpha.values[n]);
    if (m <= peak * 1e-12) continue;
    const double ratio = m / peak;
    if (ratio >= 1.0) continue;  // -log would vanish or flip sign
    us.push_back(0.5 * std::log(static_cast<double>(n)));
    ys.push_back(std::log(-std::log(ratio)));
  }
  if (us.size() < 8)
    throw ArgumentError("fit_envelope: fewer than 8 usable indices above the floor");

  const LineFit fit = fit_line(us, ys);
  if (!(fit.slope > 0.0))
    throw DataError("fit_envelope: sequence does not decay (fit-degenerate)");

  DecayEnvelope env;
  env.beta_hat = fit.slope;
  env.lambda_hat = std::exp(fit.intercept);
  env.c_hat = peak;
  env.residual = fit.max_residual;
  env.support_count = static_cast<int>(us.size());
  env.degenerate = fit.max_residual > kDegenerateResidual;
  return env;
}

TestFunction function_from_coefficients(const CoefficientSequence& alpha,
                                        std::span<const double> grid) {
  TestFunction tf;
  tf.f.xs.assign(grid.begin(), grid.end());
  tf.f.values = synthesize(alpha, grid);
  tf.ff.xs = tf.f.xs;
  tf.ff.values = synthesize(fourier_in_coefficients(alpha), grid);
  tf.eval = [alpha](double x) { return synthesize_at(alpha, x); };
  return tf;
}

std::vector<double> default_norm_grid() { return uniform_grid(-12.0, 12.0, 1.0 / 64.0); }

std::vector<double> default_cbar_grid() { return {1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0}; }

namespace {

TameBoundReport assemble_report(double lhs, bool lhs_div, std::vector<TameCase> cases) {
  TameBoundReport rep;
  rep.lhs_norm = lhs;
  rep.lhs_diverging = lhs_div;
  rep.cases = std::move(cases);
  rep.smallest_cbar = kInf;
  rep.constant = kInf;
  for (const TameCase& c : rep.cases) {
    if (!c.rhs_diverging && !lhs_div && std::isfinite(c.ratio)) {
      rep.in_class = true;
      rep.smallest_cbar = c.cbar;
      rep.constant = c.ratio;
      break;
    }
  }
  return rep;
}

}  // namespace

TameBoundReport verify_forward_bound(const TestFunction& f, const WeightFunction& w,
                                     std::span<const double> cbar_grid, int n_max,
                                     const QuadratureRule& rule) {
  CoefficientSequence alpha = analyze(f.eval, n_max, rule);
  // entries at the quadrature rounding floor carry no information about f;
  // weighting them by e^{w(sqrt n)} would only amplify noise (same 1e-12
  // relative floor as the envelope fit)
  double peak = 0.0;
  for (const cplx& z : alpha.values) peak = std::max(peak, std::abs(z));
  for (cplx& z : alpha.values)
    if (std::abs(z) <= peak * 1e-12) z = cplx(0.0, 0.0);
  const SupNorm lhs = sequence_norm(alpha, w);

  std::vector<TameCase> cases;
  for (double cbar : cbar_grid) {
    TameCase c;
    c.cbar = cbar;
    const SupNorm rhs =
        function_norm(f.f.xs, f.f.values, f.ff.xs, f.ff.values, w.scaled(cbar));
    c.rhs_norm = rhs.value;
    c.rhs_diverging = rhs.diverging;
    c.ratio = (rhs.finite() && !lhs.diverging && rhs.value > 0.0) ? lhs.value / rhs.value : kInf;
    cases.push_back(c);
  }
  return assemble_report(lhs.value, lhs.diverging, std::move(cases));
}

TameBoundReport verify_backward_bound(const CoefficientSequence& alpha,
                                      const WeightFunction& w,
                                      std::span<const double> cbar_grid,
                                      std::span<const double> grid) {
  const std::vector<double> axiom_grid = default_axiom_grid();
  const AxiomReport axioms = check_weight_axioms(w, axiom_grid);
  if (axioms.quadratic_cap_strict.verdict != Verdict::pass)
    throw PreconditionError(
        "verify_backward_bound: the weight fails the strict quadratic cap (limsup w(t)/t^2 < "
        "1/2), which this bound assumes");

  const TestFunction f = function_from_coefficients(alpha, grid);
  const SupNorm lhs = function_norm(f.f.xs, f.f.values, f.ff.xs, f.ff.values, w);

  std::vector<TameCase> cases;
  for (double cbar : cbar_grid) {
    TameCase c;
    c.cbar = cbar;
    const SupNorm rhs = sequence_norm(alpha, w.scaled(cbar));
    c.rhs_norm = rhs.value;
    c.rhs_diverging = rhs.diverging;
    c.ratio = (rhs.finite() && !lhs.diverging && rhs.value > 0.0) ? lhs.value / rhs.value : kInf;
    cases.push_back(c);
  }
  return assemble_report(lhs.value, lhs.diverging, std::move(cases));
}

TailSumReport tail_sum_check(const WeightFunction& w, double cbar, std::span<const double> ys) {
  if (!(cbar > 0.0)) throw ArgumentError("tail_sum_check: cbar must be positive");
  TailSumReport rep;
  constexpr long kMaxTerms = 2'000'000;
  for (double y : ys) {
    if (!(y > 0.0)) throw ArgumentError("tail_sum_check: y values must be positive");
    TailSumCase c;
    c.y = y;
    const long n0 = static_cast<long>(std::ceil(y));
    double sum = 0.0;
    long n = n0;
    for (;; ++n) {
      if (n - n0 >= kMaxTerms)
        throw DataError("tail_sum_check: tail did not converge within " +
                        std::to_string(kMaxTerms) +
                        " terms; the scaled weight is summable too slowly");
      const double term = std::exp(-cbar * w(std::sqrt(static_cast<double>(n))));
      sum += term;
      if (term < 1e-30) break;
    }
    c.terms = n - n0 + 1;
    c.tail = sum;
    const double wy = cbar * w(std::sqrt(y));
    c.c_half = sum / std::exp(-0.5 * wy);
    c.c_full = sum / std::exp(-wy);
    rep.max_c_half = std::max(rep.max_c_half, c.c_half);
    rep.max_c_full = std::max(rep.max_c_full, c.c_full);
    rep.cases.push_back(c);
  }
  return rep;
}

MomentBoundReport moment_bound_check(const TestFunction& f, const WeightFunction& w,
                                     int nu_max, const QuadratureRule& rule) {
  if (nu_max < 0) throw ArgumentError("moment_bound_check: nu_max must be nonnegative");
  MomentBoundReport rep;

  const SupNorm fn = function_norm(f.f.xs, f.f.values, f.ff.xs, f.ff.values, w);
  rep.f_norm = fn.value;
  rep.f_norm_diverging = fn.diverging;

  // boundary decay of the quadrature integrand
  const double edge = std::abs(f.eval(rule.nodes.back()));
  rep.truncation_warning = edge > 1e-14;

  std::vector<double> fx(rule.nodes.size());
  for (std::size_t k = 0; k < rule.nodes.size(); ++k)
    fx[k] = std::norm(f.eval(rule.nodes[k]));  // |f|^2

  for (int nu = 0; nu <= nu_max; ++nu) {
    MomentCase c;
    c.nu = nu;
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double x = rule.nodes[k];
      acc += rule.lifted_weights[k] * std::pow(x * x, nu) * fx[k];
    }
    c.l2_norm = std::sqrt(std::max(acc, 0.0));
    const double scale = std::exp(omega_star(w, nu + 1.0).value) * fn.value;
    c.ratio = scale > 0.0 ? c.l2_norm / scale : kInf;
    rep.empirical_c = std::max(rep.empirical_c, c.ratio);
    rep.cases.push_back(c);
  }
  return rep;
}

}  // namespace fockwig
