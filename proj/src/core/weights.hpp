/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "types.hpp"

namespace fockwig {

class DensityMatrix;
struct CoefficientSequence;
struct PhaseSpaceGrid;

/// Increasing weight w on [0, inf) used as e^{w} decay scale.
///
/// Two families: the power family w(t) = lambda * t^beta (exact evaluation,
/// closed-form convex conjugate) and a tabulated family interpolated linearly
/// between monotone samples. Instances are immutable; scaling by c > 0 stays
/// within the same growth class.
class WeightFunction {
 public:
  enum class Family { power, tabulated };

  static WeightFunction power(double lambda, double beta);
  static WeightFunction tabulated(std::vector<std::pair<double, double>> points);

  /// w(t); t < 0 is a domain error, tabulated queries outside the table range
  /// are extrapolation (domain) errors.
  double operator()(double t) const;

  /// Omega(t) = w(e^t).
  double log_reparam(double t) const { return (*this)(std::exp(t)); }

  /// c * w as a member of the same class.
  WeightFunction scaled(double c) const;

  Family family() const { return family_; }
  double lambda() const { return lambda_; }
  double beta() const { return beta_; }
  const std::vector<std::pair<double, double>>& table() const { return table_; }

 private:
  WeightFunction() = default;
  Family family_ = Family::power;
  double lambda_ = 1.0;
  double beta_ = 1.0;  // power family only
  std::vector<std::pair<double, double>> table_;
};

/// Convex conjugate sup_t { nu t - Omega(t) } together with how it was found.
struct OmegaStar {
  enum class Method { closed_form, golden_section };
  double value = 0.0;
  Method method = Method::closed_form;
};

OmegaStar omega_star(const WeightFunction& w, double nu);

/// One finding per definitional requirement checked on a grid.
struct AxiomFinding {
  Verdict verdict = Verdict::inconclusive;
  std::optional<double> witness_t;  // always set when verdict == fail
  double observed = 0.0;            // the ratio/sup the verdict is based on
  std::string note;
};

struct AxiomReport {
  AxiomFinding convexity;             // (i)   Omega convex
  AxiomFinding log_negligible;        // (ii)  log t = o(w(t))
  AxiomFinding doubling;              // (iii) w(2t) = O(w(t)); observed sup recorded
  AxiomFinding quadratic_cap;         // (iv)  limsup w(t)/t^2 <= 1/2
  AxiomFinding quadratic_cap_strict;  // (v)   limsup w(t)/t^2 <  1/2

  bool all_pass() const;
};

/// Grid verdicts for (i)-(v). The grid must be sorted, positive and span at
/// least [1e-2, 1e4]. A trend that reverses in the last decade yields
/// "inconclusive" rather than a certified verdict.
AxiomReport check_weight_axioms(const WeightFunction& w, std::span<const double> grid);

/// Default geometric grid for axiom checks, [1e-2, 1e4] at 25 points/decade.
std::vector<double> default_axiom_grid();

/// sup |f| e^{w(|x|)} + sup |Ff| e^{w(|xi|)} over the sampled grids.
SupNorm function_norm(std::span<const double> xs, std::span<const cplx> f,
                      std::span<const double> xis, std::span<const cplx> ff,
                      const WeightFunction& w);

/// sup_n |alpha_n| e^{w(sqrt n)} over stored indices.
SupNorm sequence_norm(const CoefficientSequence& alpha, const WeightFunction& w);

/// sup_{m,n} |rho_{m,n}| e^{w(sqrt m) + w(sqrt n)} over stored entries.
SupNorm matrix_norm(const DensityMatrix& rho, const WeightFunction& w);

/// sup |Phi(q,p)| e^{2(w(|q|) + w(|p|))} over the grid.
SupNorm phase_space_norm(const PhaseSpaceGrid& grid, const WeightFunction& w);

}  // namespace fockwig
