/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <span>
#include <vector>

#include "decay.hpp"
#include "hermite.hpp"
#include "states.hpp"
#include "types.hpp"
#include "weights.hpp"

namespace fockwig {

/// Highest Laguerre degree the double-precision recurrence is rated for.
inline constexpr int kLaguerreCeiling = 2048;

/// Generalized Laguerre values L_0^a(x)..L_n^a(x) in plain double precision.
std::vector<double> laguerre_values(int n, int alpha, double x);

/// Cross-Wigner kernel of two basis states at a phase-space point. For
/// m >= n this is the Laguerre closed form
///   (-1)^m/pi * sqrt(n!/m!) * e^{-(q^2+p^2)} * (sqrt2 (ip - q))^{m-n}
///     * L_n^{m-n}(2 q^2 + 2 p^2),
/// with all factorial/power prefactors combined in log-magnitude + phase
/// form; the m < n case is reduced through the reflection (q,p) -> (q,-p).
cplx special_hermite(int m, int n, double q, double p);

/// Brute-force oracle for the same kernel by quadrature of the defining
/// integral (1/2pi) int e^{ipx} h_m(q - x/2) h_n(q + x/2) dx; limited to
/// m, n <= 64.
cplx special_hermite_integral(int m, int n, double q, double p);

/// Radial modulus l_{m,n}(r) = |special_hermite| at any point with
/// q^2 + p^2 = r^2; symmetric under swapping m and n.
double radial_modulus(int m, int n, double r);

/// Measured uniform constant for the two-branch radial envelope
/// l_{m,n}(r) <= K * (1 for r <= s, e^{-(r-s)^2} for r >= s), s = sqrt(m+n+1).
struct RadialBoundReport {
  double empirical_k = 0.0;    // smallest K valid on the full grid
  int pairs_checked = 0;
  double worst_r = 0.0;
  int worst_m = 0, worst_n = 0;
  // entries exceeding a caller-supplied candidate K (empty when none given)
  struct Violation {
    int m, n;
    double r;
    double ratio;
  };
  std::vector<Violation> violations;

  bool holds(double k_candidate) const { return empirical_k <= k_candidate; }
};

RadialBoundReport radial_bound_check(int m_max, std::span<const double> r_grid,
                                     double k_candidate = 0.0);

/// Weighted-square Laguerre bound in orthonormalized form:
///   (L_n^a(x))^2 e^{-x} x^{a+1} * n!/Gamma(n+a+1)
///     <= constant * n^{-1/6} (n+a+1)^{1/2},
/// swept over degrees 1..n_max, orders 0..alpha_max and an x grid past the
/// oscillatory region.
struct KrasikovReport {
  bool holds = false;
  double constant = 0.0;
  double max_ratio = 0.0;  // sup LHS/RHS with RHS carrying the constant
  int worst_n = 0, worst_alpha = 0;
  double worst_x = 0.0;
};

KrasikovReport krasikov_check(int n_max, int alpha_max, double x_step = 0.125,
                              double constant = 1444.0);

enum class Convention { plain, tilde };

/// Rectangular (q,p) grid of complex values; row i runs along q_axis[i].
struct PhaseSpaceGrid {
  std::vector<double> q_axis;
  std::vector<double> p_axis;
  CMatrix values;
  Convention tag = Convention::plain;
  double imag_residue = 0.0;  // max |Im| seen when a real result is expected
};

/// Double sum over the density's entries of the closed-form kernels;
/// Hermitian input makes the result exactly real (conjugate pairs are summed
/// together).
PhaseSpaceGrid wigner_of_density(const DensityMatrix& rho, std::span<const double> q_axis,
                                 std::span<const double> p_axis, int threads = 0);

/// Direct-quadrature oracle for pure states: evaluates the defining integral
/// point by point. `support_radius` must cover the decay of f below 1e-14.
PhaseSpaceGrid wigner_pure_direct(const std::function<cplx(double)>& f,
                                  std::span<const double> q_axis,
                                  std::span<const double> p_axis, double support_radius,
                                  int threads = 0, double tol = 1e-11);

/// Convention switch: axes stretched by sqrt2, values halved. Applying it to
/// an already-tilde grid is a convention error.
PhaseSpaceGrid tilde_rescale(const PhaseSpaceGrid& grid);

struct MarginalResult {
  std::vector<double> q_marginal;  // integral over p at fixed q
  std::vector<double> p_marginal;  // integral over q at fixed p
  double imag_residue = 0.0;
  bool boundary_warning = false;  // grid edge values not decayed below 1e-12
};

MarginalResult marginals(const PhaseSpaceGrid& grid);

/// Two-dimensional Fourier transform of the Wigner grid, assembled directly
/// in coefficient space: sum over (m,n) of (-i)^{m+n}/2 c_m conj(c_n) times
/// the kernel at half arguments.
PhaseSpaceGrid ambiguity_of_coefficients(const CoefficientSequence& alpha,
                                         std::span<const double> theta_axis,
                                         std::span<const double> varpi_axis, int threads = 0);

/// Weighted sup norm of the synthesized Wigner grid against dilated matrix
/// norms of the density; requires the strict quadratic cap.
TameBoundReport wigner_norm_comparison(const DensityMatrix& rho, const WeightFunction& w,
                                       std::span<const double> cbar_grid,
                                       std::span<const double> q_axis,
                                       std::span<const double> p_axis, int threads = 0);

}  // namespace fockwig
