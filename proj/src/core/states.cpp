/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "decay.hpp"
#include "eigen.hpp"
#include "errors.hpp"
#include "numerics.hpp"

namespace fockwig {

namespace {

void require_hermitian(const CMatrix& m, double tol) {
  double scale = 0.0;
  for (const auto& z : m.a) scale = std::max(scale, std::abs(z));
  const double lim = tol * std::max(1.0, scale);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = i; j < m.cols; ++j)
      if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > lim)
        throw ArgumentError("density: entries not Hermitian within tolerance at (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
}

}  // namespace

DensityMatrix DensityMatrix::pure(const CoefficientSequence& alpha) {
  const int n = alpha.n_max();
  if (n < 0) throw ArgumentError("density: empty coefficient sequence");
  CMatrix m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const cplx ai = alpha.values[i];
    if (!std::isfinite(ai.real()) || !std::isfinite(ai.imag()))
      throw DataError("density: non-finite coefficient");
    for (int j = 0; j <= n; ++j) m.at(i, j) = ai * std::conj(alpha.values[j]);
  }
  return DensityMatrix(std::move(m), Provenance::pure);
}

DensityMatrix DensityMatrix::mixture(std::span<const double> probabilities,
                                     std::span<const CoefficientSequence> states) {
  if (probabilities.size() != states.size() || states.empty())
    throw ArgumentError("mixture: need matching, nonempty weights and states");
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw ArgumentError("mixture: negative or NaN weight");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw ArgumentError("mixture: weights must sum to 1 (got " + std::to_string(total) + ")");

  int n = 0;
  for (const auto& s : states) n = std::max(n, s.n_max());

  // pairwise orthonormality of the constituent states
  for (std::size_t a = 0; a < states.size(); ++a)
    for (std::size_t b = a; b < states.size(); ++b) {
      cplx dot(0.0, 0.0);
      for (int k = 0; k <= n; ++k) dot += states[a].at(k) * std::conj(states[b].at(k));
      const double want = a == b ? 1.0 : 0.0;
      if (std::abs(dot - want) > 1e-8)
        throw ArgumentError("mixture: states " + std::to_string(a) + "," + std::to_string(b) +
                            " are not orthonormal (inner product defect " +
                            std::to_string(std::abs(dot - want)) + ")");
    }

  CMatrix m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  for (std::size_t s = 0; s < states.size(); ++s)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        m.at(i, j) += probabilities[s] * states[s].at(i) * std::conj(states[s].at(j));
  return DensityMatrix(std::move(m), Provenance::explicit_entries);
}

DensityMatrix DensityMatrix::from_entries(CMatrix entries, Provenance provenance) {
  if (entries.rows != entries.cols || entries.rows == 0)
    throw ArgumentError("density: entries must form a nonempty square matrix");
  for (const auto& z : entries.a)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw DataError("density: non-finite entry");
  if (provenance != Provenance::counterexample) require_hermitian(entries, 1e-12);
  return DensityMatrix(std::move(entries), provenance);
}

DensityMatrix DensityMatrix::counterexample(int n_max) {
  if (n_max < 0) throw ArgumentError("counterexample: n_max must be nonnegative");
  CMatrix m(static_cast<std::size_t>(n_max) + 1, static_cast<std::size_t>(n_max) + 1);
  for (int k = 0; k <= n_max; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    m.at(k, k) = sign / ((k + 1.0) * (k + 2.0));
  }
  return DensityMatrix(std::move(m), Provenance::counterexample);
}

ValidationReport validate_density(const DensityMatrix& rho) {
  ValidationReport rep;
  const CMatrix& m = rho.entries();
  const int N = rho.n_max();

  double defect = 0.0;
  int wi = 0, wj = 0;
  for (int i = 0; i <= N; ++i)
    for (int j = i; j <= N; ++j) {
      const double d = std::abs(m.at(i, j) - std::conj(m.at(j, i)));
      if (d > defect) {
        defect = d;
        wi = i;
        wj = j;
      }
    }
  rep.hermitian_defect = defect;
  rep.hermitian = defect <= 1e-12 ? Verdict::pass : Verdict::fail;

  const std::vector<double> eigs = hermitian_eigenvalues(m);
  rep.min_eigenvalue = eigs.front();
  rep.psd = rep.min_eigenvalue >= -1e-10 ? Verdict::pass : Verdict::fail;

  double tr = 0.0;
  for (int i = 0; i <= N; ++i) tr += m.at(i, i).real();
  rep.trace = tr;
  if (rho.provenance() == DensityMatrix::Provenance::counterexample)
    rep.trace_verdict = TraceVerdict::truncated;
  else
    rep.trace_verdict = std::abs(tr - 1.0) <= 1e-8 ? TraceVerdict::pass : TraceVerdict::fail;

  if (rep.hermitian == Verdict::fail)
    rep.witness = "hermitian defect " + std::to_string(defect) + " at (" + std::to_string(wi) +
                  "," + std::to_string(wj) + ")";
  else if (rep.psd == Verdict::fail)
    rep.witness = "min eigenvalue " + std::to_string(rep.min_eigenvalue);
  else if (rep.trace_verdict == TraceVerdict::fail)
    rep.witness = "trace " + std::to_string(tr);
  return rep;
}

double counterexample_wigner_closed_form(double q, double p) {
  const double x = 2.0 * (q * q + p * p);
  if (x == 0.0) return 1.0 / M_PI;
  // substituting u = x/(1-z) turns the unit-interval integral into
  // x e^{-x/2} int_0^inf e^{-v} (x+v)^{-2} dv, free of the z -> 1 underflow
  const double integral = adaptive_simpson(
      [x](double v) { return std::exp(-v) / ((x + v) * (x + v)); }, 0.0, 90.0, 1e-10, 1e-300);
  return x * std::exp(-0.5 * x) * integral / M_PI;
}

double counterexample_series_gap(int truncation, std::span<const double> r_grid) {
  if (truncation < 0) throw ArgumentError("series gap: truncation must be nonnegative");
  double worst = 0.0;
  for (double r : r_grid) {
    const double x = 2.0 * r * r;
    // Laguerre recurrence along the diagonal; alternating matrix signs cancel
    // the (-1)^m of the phase-space kernel, leaving positive 1/((m+1)(m+2)).
    double prev = 0.0, cur = 1.0;
    double sum = cur / 2.0;
    for (int k = 0; k < truncation; ++k) {
      const double nxt = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
      prev = cur;
      cur = nxt;
      sum += cur / ((k + 2.0) * (k + 3.0));
    }
    const double series = std::exp(-r * r) * sum / M_PI;
    worst = std::max(worst, std::abs(series - counterexample_wigner_closed_form(r, 0.0)));
  }
  return worst;
}

CounterexampleReport decay_vs_wigner_experiment(int n_max, std::span<const double> r_window) {
  if (n_max < 64) throw ArgumentError("experiment: n_max must be at least 64");
  if (r_window.size() < 8) throw ArgumentError("experiment: need at least 8 window points");

  CounterexampleReport rep;
  const DensityMatrix rho = DensityMatrix::counterexample(n_max);

  // diagonal decay: an algebraic sequence makes the stretched-exponential
  // envelope fit degenerate
  std::vector<cplx> diag(static_cast<std::size_t>(n_max) + 1);
  for (int k = 0; k <= n_max; ++k) diag[k] = std::abs(rho.at(k, k).real());
  const DecayEnvelope env = fit_envelope(CoefficientSequence(std::move(diag)));
  rep.diag_fit_degenerate = env.degenerate;
  rep.diag_residual = env.residual;
  rep.diag_beta_hat = env.beta_hat;

  rep.slope_window_lo = r_window.front();
  rep.slope_window_hi = r_window.back();
  std::vector<double> t, y;
  for (double r : r_window) {
    const double phi = counterexample_wigner_closed_form(r, 0.0);
    if (!(phi > 0.0)) rep.closed_form_positive = false;
    if (phi > std::exp(-(r * r)) / M_PI + 1e-15) rep.closed_form_bounded = false;
    t.push_back(r * r);
    y.push_back(std::log(phi));
  }
  rep.wigner_slope = fit_line(t, y).slope;

  const std::vector<double> r_small = uniform_grid(0.0, 2.0, 1.0 / 16.0);
  for (double r : r_small) {
    const double phi = counterexample_wigner_closed_form(r, 0.0);
    if (!(phi > 0.0)) rep.closed_form_positive = false;
    if (phi > std::exp(-(r * r)) / M_PI + 1e-15) rep.closed_form_bounded = false;
  }
  rep.series_terms = n_max;
  rep.series_max_gap = counterexample_series_gap(n_max, r_small);
  return rep;
}

}  // namespace fockwig
