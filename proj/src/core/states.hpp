/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <span>
#include <string>
#include <vector>

#include "hermite.hpp"
#include "types.hpp"

namespace fockwig {

struct DecayEnvelope;

/// Truncated Fock-basis matrix rho_{m,n}, 0 <= m,n <= N.
///
/// Pure and explicit constructions are Hermitian within 1e-12 (enforced);
/// the alternating-diagonal example matrix is real diagonal and therefore
/// Hermitian as well, but it is kept constructible even though it fails the
/// positivity and unit-trace checks; validate_density reports, never throws.
class DensityMatrix {
 public:
  enum class Provenance { pure, explicit_entries, counterexample };

  static DensityMatrix pure(const CoefficientSequence& alpha);
  static DensityMatrix mixture(std::span<const double> probabilities,
                               std::span<const CoefficientSequence> states);
  static DensityMatrix from_entries(CMatrix entries,
                                    Provenance provenance = Provenance::explicit_entries);
  /// Diagonal (-1)^m / ((m+1)(m+2)), truncated at n_max.
  static DensityMatrix counterexample(int n_max);

  int n_max() const { return static_cast<int>(entries_.rows) - 1; }
  cplx at(int m, int n) const { return entries_.at(m, n); }
  const CMatrix& entries() const { return entries_; }
  Provenance provenance() const { return provenance_; }

 private:
  DensityMatrix(CMatrix entries, Provenance provenance)
      : entries_(std::move(entries)), provenance_(provenance) {}
  CMatrix entries_;
  Provenance provenance_;
};

enum class TraceVerdict { pass, fail, truncated };

struct ValidationReport {
  Verdict hermitian = Verdict::pass;
  double hermitian_defect = 0.0;

  Verdict psd = Verdict::pass;
  double min_eigenvalue = 0.0;

  TraceVerdict trace_verdict = TraceVerdict::pass;
  double trace = 0.0;

  std::string witness;  // human-readable pointer to the worst finding

  bool physical() const {
    return hermitian == Verdict::pass && psd == Verdict::pass &&
           trace_verdict == TraceVerdict::pass;
  }
};

/// Hermitian / PSD (min eigenvalue >= -1e-10) / trace-vs-1 (1e-8) checks.
/// The trace verdict reads "truncated" for the counterexample provenance,
/// whose untruncated matrix is itself infinite.
ValidationReport validate_density(const DensityMatrix& rho);

/// Closed-form Wigner value of the alternating-diagonal example at (q, p):
/// with x = 2(q^2+p^2), equals (x e^{-x/2}/pi) * int_0^inf e^{-v}/(x+v)^2 dv,
/// which is positive and bounded by e^{-x/2}/pi.
double counterexample_wigner_closed_form(double q, double p);

/// Side-by-side decay study of the example state: the diagonal decays only
/// algebraically (envelope fit degenerates) while the Wigner function decays
/// like a Gaussian (log value vs r^2 slope near -1 on the fitted window).
struct CounterexampleReport {
  bool diag_fit_degenerate = false;
  double diag_residual = 0.0;
  double diag_beta_hat = 0.0;

  double wigner_slope = 0.0;
  double slope_window_lo = 0.0;
  double slope_window_hi = 0.0;

  bool closed_form_positive = true;
  bool closed_form_bounded = true;  // Phi <= e^{-x/2}/pi at every sample

  double series_max_gap = 0.0;  // sup_r |truncated series - closed form|
  int series_terms = 0;
};

CounterexampleReport decay_vs_wigner_experiment(int n_max, std::span<const double> r_window);

/// |sum_{m<=M} rho_mm Phi_mm(r) - closed_form(r)| maximized over the r grid.
double counterexample_series_gap(int truncation, std::span<const double> r_grid);

}  // namespace fockwig
