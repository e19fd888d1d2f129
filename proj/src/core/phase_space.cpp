/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "numerics.hpp"

namespace fockwig {

namespace {

constexpr double kRescaleHi = 1e200;
constexpr double kRescaleLo = 1e-200;
constexpr int kRescaleStride = 64;

void check_laguerre_args(int n, int alpha, double x) {
  if (n < 0 || alpha < 0) throw ArgumentError("laguerre: degree and order must be nonnegative");
  if (n > kLaguerreCeiling)
    throw CapacityError("laguerre: degree " + std::to_string(n) + " beyond ceiling " +
                        std::to_string(kLaguerreCeiling));
  if (std::isnan(x) || x < 0.0) throw DomainError("laguerre: x must be nonnegative");
}

/// Upward Laguerre recurrence in fixed order alpha, with periodic rescaling;
/// the current value is mantissa() * 2^0 * e^{log_scale()}.
class LaguerreWalker {
 public:
  LaguerreWalker(double alpha, double x) : alpha_(alpha), x_(x) {}

  int degree() const { return k_; }
  double mantissa() const { return cur_; }
  double log_scale() const { return log_scale_; }

  void advance() {
    const double k = static_cast<double>(k_);
    const double nxt = ((2.0 * k + 1.0 + alpha_ - x_) * cur_ - (k + alpha_) * prev_) / (k + 1.0);
    prev_ = cur_;
    cur_ = nxt;
    ++k_;
    if (k_ % kRescaleStride == 0) rescale();
  }

 private:
  void rescale() {
    const double m = std::max(std::abs(cur_), std::abs(prev_));
    if (m > kRescaleHi) {
      cur_ *= kRescaleLo;
      prev_ *= kRescaleLo;
      log_scale_ += std::log(kRescaleHi);
    } else if (m > 0.0 && m < kRescaleLo) {
      cur_ *= kRescaleHi;
      prev_ *= kRescaleHi;
      log_scale_ -= std::log(kRescaleHi);
    }
  }

  double alpha_, x_;
  int k_ = 0;
  double prev_ = 0.0, cur_ = 1.0;
  double log_scale_ = 0.0;
};

double laguerre_log_abs(int n, int alpha, double x, int* sign) {
  LaguerreWalker walk(alpha, x);
  for (int k = 0; k < n; ++k) walk.advance();
  const double m = walk.mantissa();
  *sign = (m > 0.0) - (m < 0.0);
  if (m == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(std::abs(m)) + walk.log_scale();
}

}  // namespace

std::vector<double> laguerre_values(int n, int alpha, double x) {
  check_laguerre_args(n, alpha, x);
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  out[0] = 1.0;
  if (n >= 1) out[1] = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k)
    out[k + 1] = ((2.0 * k + 1.0 + alpha - x) * out[k] - (k + alpha) * out[k - 1]) / (k + 1.0);
  return out;
}

cplx special_hermite(int m, int n, double q, double p) {
  if (m < 0 || n < 0) throw ArgumentError("special_hermite: indices must be nonnegative");
  if (m < n) return special_hermite(n, m, q, -p);
  check_laguerre_args(n, m - n, 0.0);

  const int alpha = m - n;
  const double r2 = q * q + p * p;
  const double x = 2.0 * r2;
  if (r2 == 0.0 && alpha > 0) return cplx(0.0, 0.0);

  int sign = 0;
  const double log_l = laguerre_log_abs(n, alpha, x, &sign);
  if (sign == 0) return cplx(0.0, 0.0);

  double log_mag = -std::log(M_PI) +
                   0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0)) +
                   0.5 * alpha * std::log(2.0) - r2 + log_l;
  if (alpha > 0) log_mag += 0.5 * alpha * std::log(r2);

  const double parity = (m % 2 == 0) ? 1.0 : -1.0;
  const double phi = std::atan2(p, -q);  // arg(ip - q)
  const double mag = log_mag < -745.0 ? 0.0 : std::exp(log_mag);
  return parity * sign * mag * std::polar(1.0, alpha * phi);
}

cplx special_hermite_integral(int m, int n, double q, double p) {
  if (m < 0 || n < 0) throw ArgumentError("special_hermite_integral: negative index");
  if (m > 64 || n > 64)
    throw ArgumentError("special_hermite_integral: oracle limited to m, n <= 64");
  const double s = std::sqrt(2.0 * std::max(m, n) + 1.0);
  const double half_width = std::abs(q) + s + 10.0;
  auto integrand = [&](double x) -> cplx {
    return std::polar(1.0, p * x) * hermite_at(m, q - 0.5 * x) * hermite_at(n, q + 0.5 * x);
  };
  const cplx val = refining_trapezoid(integrand, -2.0 * half_width, 2.0 * half_width, 1e-12);
  return val / (2.0 * M_PI);
}

double radial_modulus(int m, int n, double r) {
  if (std::isnan(r) || r < 0.0) throw DomainError("radial_modulus: r must be nonnegative");
  if (m < n) std::swap(m, n);
  return std::abs(special_hermite(m, n, r, 0.0));
}

RadialBoundReport radial_bound_check(int m_max, std::span<const double> r_grid,
                                     double k_candidate) {
  if (m_max < 0) throw ArgumentError("radial_bound_check: m_max must be nonnegative");
  if (r_grid.size() < 2) throw ArgumentError("radial_bound_check: r grid too small");
  const double needed = std::sqrt(2.0 * m_max + 1.0) + 6.0;
  if (r_grid.front() > 0.5 || r_grid.back() < needed - 1e-9)
    throw ArgumentError("radial_bound_check: r grid must cover [0, sqrt(2 m_max + 1) + 6]");

  std::vector<double> lg(static_cast<std::size_t>(m_max) + 2);
  for (std::size_t i = 0; i < lg.size(); ++i) lg[i] = std::lgamma(static_cast<double>(i) + 1.0);

  RadialBoundReport rep;
  for (int alpha = 0; alpha <= m_max; ++alpha) {
    const double log2half = 0.5 * alpha * std::log(2.0);
    for (double r : r_grid) {
      const double r2 = r * r;
      const double x = 2.0 * r2;
      if (r2 == 0.0 && alpha > 0) continue;
      const double log_pref0 =
          log2half - std::log(M_PI) - r2 + (alpha > 0 ? 0.5 * alpha * std::log(r2) : 0.0);
      LaguerreWalker walk(alpha, x);
      for (int k = 0; k + alpha <= m_max; ++k) {
        const int mm = k + alpha;
        const double mant = walk.mantissa();
        if (mant != 0.0) {
          // l_{m,n}(r) in log magnitude
          const double log_l = log_pref0 + 0.5 * (lg[k] - lg[mm]) +
                               std::log(std::abs(mant)) + walk.log_scale();
          const double s = std::sqrt(static_cast<double>(mm + k + 1));
          const double log_branch = r <= s ? 0.0 : -(r - s) * (r - s);
          const double ratio = std::exp(log_l - log_branch);
          if (ratio > rep.empirical_k) {
            rep.empirical_k = ratio;
            rep.worst_r = r;
            rep.worst_m = mm;
            rep.worst_n = k;
          }
          if (k_candidate > 0.0 && ratio > k_candidate)
            rep.violations.push_back({mm, k, r, ratio});
        }
        walk.advance();
      }
    }
    rep.pairs_checked += m_max - alpha + 1;
  }
  return rep;
}

KrasikovReport krasikov_check(int n_max, int alpha_max, double x_step, double constant) {
  if (n_max < 1 || alpha_max < 0 || x_step <= 0.0)
    throw ArgumentError("krasikov_check: need n_max >= 1, alpha_max >= 0, x_step > 0");
  KrasikovReport rep;
  rep.constant = constant;
  double max_log_ratio = -std::numeric_limits<double>::infinity();
  const double log_c = std::log(constant);
  for (int alpha = 0; alpha <= alpha_max; ++alpha) {
    // normalization n!/Gamma(n+alpha+1) and the degree-dependent right side
    std::vector<double> log_norm(static_cast<std::size_t>(n_max) + 1);
    std::vector<double> log_rhs(static_cast<std::size_t>(n_max) + 1);
    for (int k = 1; k <= n_max; ++k) {
      log_norm[k] = std::lgamma(k + 1.0) - std::lgamma(k + alpha + 1.0);
      log_rhs[k] = log_c - std::log(static_cast<double>(k)) / 6.0 +
                   0.5 * std::log(static_cast<double>(k + alpha + 1));
    }
    const double x_hi = 4.0 * n_max + 2.0 * alpha + 8.0;
    for (double x = x_step; x <= x_hi; x += x_step) {
      LaguerreWalker walk(alpha, x);
      walk.advance();  // to degree 1
      const double log_wx = -x + (alpha + 1.0) * std::log(x);
      for (int k = 1; k <= n_max; ++k) {
        const double mant = walk.mantissa();
        if (mant != 0.0) {
          const double log_lhs = 2.0 * (std::log(std::abs(mant)) + walk.log_scale()) + log_wx +
                                 log_norm[k];
          const double log_ratio = log_lhs - log_rhs[k];
          if (log_ratio > max_log_ratio) {
            max_log_ratio = log_ratio;
            rep.worst_n = k;
            rep.worst_alpha = alpha;
            rep.worst_x = x;
          }
        }
        walk.advance();
      }
    }
  }
  rep.max_ratio = std::exp(max_log_ratio);
  rep.holds = rep.max_ratio <= 1.0;
  return rep;
}

namespace {

struct KernelAccumulator {
  // Walks all kernels Phi_{n+alpha, n} at one phase-space point and hands
  // each (m, n, value) to the sink. Kernel magnitudes are built from a
  // per-alpha running prefactor so that neither the Laguerre values nor the
  // factorial ratios ever leave double range on their own. The prefactor
  // can underflow long before the product prefactor * L does (e^{-r^2} is
  // subnormal past r ~ 27 while the kernel is still O(1) inside the
  // oscillatory region of a deep expansion); those terms are rebuilt in log
  // form from the closed prefactor expression.
  template <typename Sink>
  static void run(int n_top, double q, double p, Sink&& sink) {
    const double r2 = q * q + p * p;
    const double x = 2.0 * r2;
    const double phi = std::atan2(p, -q);
    const double s_top = std::sqrt(2.0 * n_top + 1.0);
    // past the outermost turning point every kernel is below double range
    if (std::sqrt(r2) > s_top + 28.0) return;
    for (int alpha = 0; alpha <= n_top; ++alpha) {
      double lp0;
      if (alpha == 0) {
        lp0 = -r2 - std::log(M_PI);
      } else {
        if (r2 == 0.0) continue;
        lp0 = 0.5 * alpha * std::log(2.0 * r2) - 0.5 * std::lgamma(alpha + 1.0) - r2 -
              std::log(M_PI);
      }
      double pref = lp0 < -745.0 ? 0.0 : std::exp(lp0);
      const cplx turn = std::polar(1.0, alpha * phi);
      LaguerreWalker walk(static_cast<double>(alpha), x);
      double scale_sum = 0.0;  // accumulated walker rescales
      double last_scale = 0.0;
      for (int n = 0; n + alpha <= n_top; ++n) {
        if (walk.log_scale() != last_scale) {
          // fold the walker's rescaling back into the prefactor
          scale_sum += walk.log_scale() - last_scale;
          pref *= std::exp(walk.log_scale() - last_scale);
          last_scale = walk.log_scale();
        }
        const int m = n + alpha;
        const double parity = (m % 2 == 0) ? 1.0 : -1.0;
        const double mant = walk.mantissa();
        double mag;
        if (pref >= 1e-280) {
          mag = pref * mant;
        } else if (mant == 0.0) {
          mag = 0.0;
        } else {
          // exact log of the running prefactor at this n
          const double lp = lp0 + 0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + alpha + 1.0)) +
                            scale_sum;
          const double l = lp + std::log(std::abs(mant));
          mag = l < -745.0 ? 0.0 : std::copysign(std::exp(l), mant);
        }
        sink(m, n, parity * mag * turn);
        walk.advance();
        pref *= std::sqrt((n + 1.0) / (n + 1.0 + alpha));
      }
    }
  }
};

void check_axes(std::span<const double> q_axis, std::span<const double> p_axis) {
  auto sorted = [](std::span<const double> a) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
      if (a[i + 1] <= a[i]) return false;
    return true;
  };
  if (q_axis.empty() || p_axis.empty() || !sorted(q_axis) || !sorted(p_axis))
    throw ArgumentError("phase-space axes must be nonempty and strictly increasing");
}

}  // namespace

PhaseSpaceGrid wigner_of_density(const DensityMatrix& rho, std::span<const double> q_axis,
                                 std::span<const double> p_axis, int threads) {
  check_axes(q_axis, p_axis);
  const int N = rho.n_max();
  if (N > kLaguerreCeiling) throw CapacityError("wigner_of_density: truncation beyond ceiling");

  PhaseSpaceGrid grid;
  grid.q_axis.assign(q_axis.begin(), q_axis.end());
  grid.p_axis.assign(p_axis.begin(), p_axis.end());
  grid.values = CMatrix(q_axis.size(), p_axis.size());
  grid.tag = Convention::plain;

  const CMatrix& m = rho.entries();
  parallel_for(
      q_axis.size(),
      [&](std::size_t i) {
        const double q = grid.q_axis[i];
        for (std::size_t j = 0; j < grid.p_axis.size(); ++j) {
          double acc = 0.0;
          KernelAccumulator::run(N, q, grid.p_axis[j], [&](int mm, int nn, cplx kernel) {
            if (mm == nn)
              acc += m.at(mm, nn).real() * kernel.real();
            else
              acc += 2.0 * (m.at(mm, nn) * kernel).real();
          });
          grid.values.at(i, j) = cplx(acc, 0.0);
        }
      },
      threads);
  grid.imag_residue = 0.0;  // conjugate pairs are combined analytically
  return grid;
}

PhaseSpaceGrid wigner_pure_direct(const std::function<cplx(double)>& f,
                                  std::span<const double> q_axis,
                                  std::span<const double> p_axis, double support_radius,
                                  int threads, double tol) {
  check_axes(q_axis, p_axis);
  if (!(support_radius > 0.0))
    throw ArgumentError("wigner_pure_direct: support_radius must be positive");

  PhaseSpaceGrid grid;
  grid.q_axis.assign(q_axis.begin(), q_axis.end());
  grid.p_axis.assign(p_axis.begin(), p_axis.end());
  grid.values = CMatrix(q_axis.size(), p_axis.size());
  grid.tag = Convention::plain;

  std::vector<double> residues(q_axis.size(), 0.0);
  parallel_for(
      q_axis.size(),
      [&](std::size_t i) {
        const double q = grid.q_axis[i];
        const double half = 2.0 * (std::abs(q) + support_radius);
        for (std::size_t j = 0; j < grid.p_axis.size(); ++j) {
          const double p = grid.p_axis[j];
          const cplx val = refining_trapezoid(
              [&](double x) {
                return std::polar(1.0, p * x) * f(q - 0.5 * x) * std::conj(f(q + 0.5 * x));
              },
              -half, half, tol);
          grid.values.at(i, j) = val / (2.0 * M_PI);
          residues[i] = std::max(residues[i], std::abs(grid.values.at(i, j).imag()));
        }
      },
      threads);
  grid.imag_residue = *std::max_element(residues.begin(), residues.end());
  return grid;
}

PhaseSpaceGrid tilde_rescale(const PhaseSpaceGrid& grid) {
  if (grid.tag == Convention::tilde)
    throw ConventionError("tilde_rescale: grid already carries the tilde convention");
  PhaseSpaceGrid out = grid;
  out.tag = Convention::tilde;
  const double s = std::sqrt(2.0);
  for (double& q : out.q_axis) q *= s;
  for (double& p : out.p_axis) p *= s;
  for (cplx& v : out.values.a) v *= 0.5;
  return out;
}

MarginalResult marginals(const PhaseSpaceGrid& grid) {
  const std::size_t nq = grid.q_axis.size(), np = grid.p_axis.size();
  if (nq < 2 || np < 2) throw ArgumentError("marginals: grid too small to integrate");
  MarginalResult res;
  res.q_marginal.resize(nq);
  res.p_marginal.resize(np);

  double edge = 0.0;
  for (std::size_t i = 0; i < nq; ++i)
    edge = std::max({edge, std::abs(grid.values.at(i, 0)), std::abs(grid.values.at(i, np - 1))});
  for (std::size_t j = 0; j < np; ++j)
    edge = std::max({edge, std::abs(grid.values.at(0, j)), std::abs(grid.values.at(nq - 1, j))});
  res.boundary_warning = edge > 1e-12;

  for (std::size_t i = 0; i < nq; ++i) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j + 1 < np; ++j)
      acc += 0.5 * (grid.p_axis[j + 1] - grid.p_axis[j]) *
             (grid.values.at(i, j) + grid.values.at(i, j + 1));
    res.q_marginal[i] = acc.real();
    res.imag_residue = std::max(res.imag_residue, std::abs(acc.imag()));
  }
  for (std::size_t j = 0; j < np; ++j) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i + 1 < nq; ++i)
      acc += 0.5 * (grid.q_axis[i + 1] - grid.q_axis[i]) *
             (grid.values.at(i, j) + grid.values.at(i + 1, j));
    res.p_marginal[j] = acc.real();
    res.imag_residue = std::max(res.imag_residue, std::abs(acc.imag()));
  }
  return res;
}

PhaseSpaceGrid ambiguity_of_coefficients(const CoefficientSequence& alpha,
                                         std::span<const double> theta_axis,
                                         std::span<const double> varpi_axis, int threads) {
  check_axes(theta_axis, varpi_axis);
  const int N = alpha.n_max();
  if (N < 0) throw ArgumentError("ambiguity: empty coefficient sequence");
  if (N > kLaguerreCeiling) throw CapacityError("ambiguity: truncation beyond ceiling");

  // mu_{m,n} = (-i)^{m+n}/2 * c_m conj(c_n)
  static const cplx cycle[4] = {cplx(1, 0), cplx(0, -1), cplx(-1, 0), cplx(0, 1)};
  CMatrix mu(static_cast<std::size_t>(N) + 1, static_cast<std::size_t>(N) + 1);
  for (int m = 0; m <= N; ++m)
    for (int n = 0; n <= N; ++n)
      mu.at(m, n) = 0.5 * cycle[(m + n) % 4] * alpha.values[m] * std::conj(alpha.values[n]);

  PhaseSpaceGrid grid;
  grid.q_axis.assign(theta_axis.begin(), theta_axis.end());
  grid.p_axis.assign(varpi_axis.begin(), varpi_axis.end());
  grid.values = CMatrix(theta_axis.size(), varpi_axis.size());
  grid.tag = Convention::plain;

  parallel_for(
      theta_axis.size(),
      [&](std::size_t i) {
        const double q = 0.5 * grid.q_axis[i];
        for (std::size_t j = 0; j < grid.p_axis.size(); ++j) {
          const double p = 0.5 * grid.p_axis[j];
          cplx acc(0.0, 0.0);
          KernelAccumulator::run(N, q, p, [&](int mm, int nn, cplx kernel) {
            if (mm == nn)
              acc += mu.at(mm, nn) * kernel;
            else
              acc += mu.at(mm, nn) * kernel + mu.at(nn, mm) * std::conj(kernel);
          });
          grid.values.at(i, j) = acc;
        }
      },
      threads);
  return grid;
}

TameBoundReport wigner_norm_comparison(const DensityMatrix& rho, const WeightFunction& w,
                                       std::span<const double> cbar_grid,
                                       std::span<const double> q_axis,
                                       std::span<const double> p_axis, int threads) {
  const AxiomReport axioms = check_weight_axioms(w, default_axiom_grid());
  if (axioms.quadratic_cap_strict.verdict != Verdict::pass)
    throw PreconditionError(
        "wigner_norm_comparison: the weight fails the strict quadratic cap this bound assumes");

  const PhaseSpaceGrid grid = wigner_of_density(rho, q_axis, p_axis, threads);
  const SupNorm lhs = phase_space_norm(grid, w);

  TameBoundReport rep;
  rep.lhs_norm = lhs.value;
  rep.lhs_diverging = lhs.diverging;
  rep.smallest_cbar = std::numeric_limits<double>::infinity();
  rep.constant = std::numeric_limits<double>::infinity();
  for (double cbar : cbar_grid) {
    TameCase c;
    c.cbar = cbar;
    const SupNorm rhs = matrix_norm(rho, w.scaled(cbar));
    c.rhs_norm = rhs.value;
    c.rhs_diverging = rhs.diverging;
    c.ratio = (rhs.finite() && !lhs.diverging && rhs.value > 0.0)
                  ? lhs.value / rhs.value
                  : std::numeric_limits<double>::infinity();
    if (!rep.in_class && std::isfinite(c.ratio)) {
      rep.in_class = true;
      rep.smallest_cbar = cbar;
      rep.constant = c.ratio;
    }
    rep.cases.push_back(c);
  }
  return rep;
}

}  // namespace fockwig
