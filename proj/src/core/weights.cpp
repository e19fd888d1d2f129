/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "hermite.hpp"
#include "numerics.hpp"
#include "phase_space.hpp"
#include "states.hpp"

namespace fockwig {

WeightFunction WeightFunction::power(double lambda, double beta) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw ArgumentError("weight: lambda must be positive and finite");
  if (!(beta > 0.0 && beta <= 2.0))
    throw ArgumentError("weight: beta must lie in (0, 2]");
  WeightFunction w;
  w.family_ = Family::power;
  w.lambda_ = lambda;
  w.beta_ = beta;
  return w;
}

WeightFunction WeightFunction::tabulated(std::vector<std::pair<double, double>> points) {
  if (points.size() < 2) throw ArgumentError("weight: table needs at least two points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].first) || !std::isfinite(points[i].second))
      throw DataError("weight: non-finite table entry");
    if (points[i].first < 0.0 || points[i].second < 0.0)
      throw ArgumentError("weight: table values must be nonnegative");
    if (i > 0) {
      if (points[i].first <= points[i - 1].first)
        throw ArgumentError("weight: table abscissae must be strictly increasing");
      if (points[i].second < points[i - 1].second)
        throw ArgumentError("weight: table must be nondecreasing");
    }
  }
  WeightFunction w;
  w.family_ = Family::tabulated;
  w.lambda_ = 1.0;
  w.table_ = std::move(points);
  return w;
}

double WeightFunction::operator()(double t) const {
  if (std::isnan(t)) throw DomainError("weight: NaN argument");
  if (t < 0.0) throw DomainError("weight: argument must be nonnegative");
  if (family_ == Family::power) return lambda_ * std::pow(t, beta_);
  if (t < table_.front().first || t > table_.back().first)
    throw DomainError("weight: query outside table range (extrapolation)");
  auto it = std::lower_bound(table_.begin(), table_.end(), t,
                             [](const auto& pt, double v) { return pt.first < v; });
  if (it == table_.begin()) return lambda_ * it->second;
  const auto& [t1, w1] = *it;
  const auto& [t0, w0] = *(it - 1);
  const double s = (t - t0) / (t1 - t0);
  return lambda_ * (w0 + s * (w1 - w0));
}

WeightFunction WeightFunction::scaled(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) throw ArgumentError("weight: scale must be positive");
  WeightFunction w = *this;
  w.lambda_ *= c;
  return w;
}

OmegaStar omega_star(const WeightFunction& w, double nu) {
  if (std::isnan(nu) || nu < 0.0) throw DomainError("omega_star: nu must be nonnegative");
  OmegaStar out;
  if (w.family() == WeightFunction::Family::power) {
    out.method = OmegaStar::Method::closed_form;
    // stationary point of nu t - lambda e^{beta t} is e^{beta t} = nu/(lambda beta)
    if (nu == 0.0) {
      out.value = 0.0;
    } else {
      const double lb = w.lambda() * w.beta();
      out.value = nu / w.beta() * (std::log(nu / lb) - 1.0);
    }
    return out;
  }
  out.method = OmegaStar::Method::golden_section;
  const auto& tab = w.table();
  double t_lo = tab.front().first;
  if (t_lo <= 0.0) t_lo = tab[1].first;  // log-bracket needs a positive abscissa
  const double lo = std::log(t_lo), hi = std::log(tab.back().first);
  auto objective = [&](double t) { return nu * t - w.log_reparam(t); };
  const auto [argmax, value] = golden_max(objective, lo, hi, 1e-10);
  if (argmax > hi - 1e-6 * (hi - lo))
    throw NumericError(
        "omega_star: maximum attained at the table edge; the objective may keep growing "
        "beyond the tabulated range (nu = " +
        std::to_string(nu) + ")");
  out.value = value;
  return out;
}

namespace {

enum class Trend { nonincreasing, nondecreasing, flat, mixed };

Trend classify_trend(std::span<const double> v) {
  if (v.size() < 2) return Trend::flat;
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  const double eps = 1e-9 * (1.0 + scale);
  bool up_ok = true, down_ok = true;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i + 1] > v[i] + eps) down_ok = false;
    if (v[i + 1] < v[i] - eps) up_ok = false;
  }
  if (up_ok && down_ok) return Trend::flat;
  if (down_ok) return Trend::nonincreasing;
  if (up_ok) return Trend::nondecreasing;
  return Trend::mixed;
}

}  // namespace

bool AxiomReport::all_pass() const {
  return convexity.verdict == Verdict::pass && log_negligible.verdict == Verdict::pass &&
         doubling.verdict == Verdict::pass && quadratic_cap.verdict == Verdict::pass &&
         quadratic_cap_strict.verdict == Verdict::pass;
}

std::vector<double> default_axiom_grid() { return geometric_grid(1e-2, 1e4, 25); }

AxiomReport check_weight_axioms(const WeightFunction& w, std::span<const double> grid) {
  if (grid.empty()) throw ArgumentError("check_weight_axioms: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 0.0) throw ArgumentError("check_weight_axioms: grid must be positive");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw ArgumentError("check_weight_axioms: grid must be strictly increasing");
  }
  if (grid.front() > 1e-2 || grid.back() < 1e4)
    throw ArgumentError("check_weight_axioms: grid must span at least [1e-2, 1e4]");

  AxiomReport rep;
  auto evaluable = [&](double t) {
    if (w.family() == WeightFunction::Family::power) return true;
    return t >= w.table().front().first && t <= w.table().back().first;
  };

  // collect w over the evaluable part of the grid
  std::vector<double> ts, ws;
  for (double t : grid)
    if (evaluable(t)) {
      ts.push_back(t);
      ws.push_back(w(t));
    }
  if (ts.size() < 4)
    throw ArgumentError("check_weight_axioms: too few evaluable grid points");
  const double t_hi = ts.back();
  auto tail_begin = std::lower_bound(ts.begin(), ts.end(), t_hi / 10.0) - ts.begin();
  if (ts.size() - tail_begin < 3) tail_begin = ts.size() >= 3 ? ts.size() - 3 : 0;

  // (i) convexity of Omega: slopes in u = log t must be nondecreasing
  {
    std::vector<double> slopes;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
      slopes.push_back((ws[i + 1] - ws[i]) / (std::log(ts[i + 1]) - std::log(ts[i])));
    double worst_drop = 0.0;
    std::optional<double> witness;
    for (std::size_t i = 0; i + 1 < slopes.size(); ++i) {
      const double drop = slopes[i] - slopes[i + 1];
      const double eps = 1e-9 * (1.0 + std::abs(slopes[i]));
      if (drop > eps && drop > worst_drop) {
        worst_drop = drop;
        witness = ts[i + 1];
      }
    }
    rep.convexity.observed = worst_drop;
    if (witness) {
      rep.convexity.verdict = Verdict::fail;
      rep.convexity.witness_t = witness;
      rep.convexity.note = "second differences of Omega drop at the witness point";
    } else {
      rep.convexity.verdict = Verdict::pass;
    }
  }

  // (ii) log t = o(w): ratio log(t)/w(t) should trend to zero on the tail
  {
    std::vector<double> rs, rts;
    std::optional<double> zero_witness;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (ts[i] <= 1.0) continue;
      if (ws[i] <= 0.0) {
        zero_witness = ts[i];
        break;
      }
      rs.push_back(std::log(ts[i]) / ws[i]);
      rts.push_back(ts[i]);
    }
    if (zero_witness) {
      rep.log_negligible.verdict = Verdict::fail;
      rep.log_negligible.witness_t = zero_witness;
      rep.log_negligible.note = "w vanishes where log t > 0";
    } else if (rs.size() < 3) {
      rep.log_negligible.verdict = Verdict::inconclusive;
      rep.log_negligible.note = "too few points beyond t = 1";
    } else {
      auto tb = std::lower_bound(rts.begin(), rts.end(), t_hi / 10.0) - rts.begin();
      if (rts.size() - tb < 3) tb = rts.size() - 3;
      const Trend tr = classify_trend(std::span(rs).subspan(tb));
      rep.log_negligible.observed = rs.back();
      if (tr == Trend::nonincreasing || tr == Trend::flat) {
        // a flat tail of exactly zero ratio cannot happen (log grows), so treat
        // flat nonzero as not yet decaying
        rep.log_negligible.verdict =
            (tr == Trend::nonincreasing) ? Verdict::pass : Verdict::inconclusive;
        if (tr == Trend::flat) rep.log_negligible.note = "ratio flat over the last decade";
      } else {
        rep.log_negligible.verdict = Verdict::inconclusive;
        rep.log_negligible.note = "ratio not decreasing over the last decade";
      }
    }
  }

  // (iii) doubling: record sup w(2t)/w(t); pass when the ratio is stable
  {
    std::vector<double> rs;
    double sup = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (!evaluable(2.0 * ts[i]) || ws[i] <= 0.0) continue;
      const double r = w(2.0 * ts[i]) / ws[i];
      rs.push_back(r);
      sup = std::max(sup, r);
    }
    rep.doubling.observed = sup;
    if (rs.size() < 3) {
      rep.doubling.verdict = Verdict::inconclusive;
      rep.doubling.note = "too few evaluable doubling pairs";
    } else {
      const std::size_t tb = rs.size() >= 8 ? rs.size() - rs.size() / 4 : 0;
      const Trend tr = classify_trend(std::span(rs).subspan(tb));
      if (tr == Trend::nonincreasing || tr == Trend::flat) {
        rep.doubling.verdict = Verdict::pass;
      } else {
        rep.doubling.verdict = Verdict::inconclusive;
        rep.doubling.note = "ratio still growing at the grid end; observed sup recorded";
      }
    }
  }

  // (iv)/(v): limsup w(t)/t^2 against 1/2
  {
    std::vector<double> rs;
    for (std::size_t i = tail_begin; i < ts.size(); ++i) rs.push_back(ws[i] / (ts[i] * ts[i]));
    const Trend tr = classify_trend(rs);
    double tail_max = 0.0;
    std::size_t tail_arg = 0;
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (rs[i] > tail_max) {
        tail_max = rs[i];
        tail_arg = i;
      }
    const double witness_t = ts[tail_begin + tail_arg];
    rep.quadratic_cap.observed = tail_max;
    rep.quadratic_cap_strict.observed = tail_max;
    const bool growing = (tr == Trend::nondecreasing || tr == Trend::flat);
    const double eq_tol = 1e-12 * (1.0 + tail_max);

    if (tail_max > 0.5 + eq_tol) {
      if (growing) {
        rep.quadratic_cap.verdict = Verdict::fail;
        rep.quadratic_cap.witness_t = witness_t;
        rep.quadratic_cap.note = "tail ratio exceeds 1/2 and is not decreasing";
      } else {
        rep.quadratic_cap.verdict = Verdict::inconclusive;
        rep.quadratic_cap.note = "ratio exceeds 1/2 but decreases; limit not certified";
      }
    } else if (tr == Trend::mixed) {
      rep.quadratic_cap.verdict = Verdict::inconclusive;
      rep.quadratic_cap.note = "non-monotone tail trend";
    } else {
      rep.quadratic_cap.verdict = Verdict::pass;
    }

    if (tail_max >= 0.5 - eq_tol) {
      if (growing) {
        rep.quadratic_cap_strict.verdict = Verdict::fail;
        rep.quadratic_cap_strict.witness_t = witness_t;
        rep.quadratic_cap_strict.note = "tail ratio reaches 1/2 and is not decreasing";
      } else {
        rep.quadratic_cap_strict.verdict = Verdict::inconclusive;
        rep.quadratic_cap_strict.note = "ratio reaches 1/2 but decreases; limit not certified";
      }
    } else if (tr == Trend::mixed) {
      rep.quadratic_cap_strict.verdict = Verdict::inconclusive;
      rep.quadratic_cap_strict.note = "non-monotone tail trend";
    } else {
      rep.quadratic_cap_strict.verdict = Verdict::pass;
    }
  }

  return rep;
}

namespace {

struct LogSup {
  double log_value = -std::numeric_limits<double>::infinity();
  double attained_at = 0.0;
  double range = 0.0;

  void update(double log_term, double position) {
    if (log_term > log_value) {
      log_value = log_term;
      attained_at = position;
    }
  }
};

double safe_exp(double x) {
  if (x == -std::numeric_limits<double>::infinity()) return 0.0;
  return std::exp(x);
}

}  // namespace

SupNorm function_norm(std::span<const double> xs, std::span<const cplx> f,
                      std::span<const double> xis, std::span<const cplx> ff,
                      const WeightFunction& w) {
  if (xs.empty() || xis.empty()) throw ArgumentError("function_norm: empty sample set");
  if (xs.size() != f.size() || xis.size() != ff.size())
    throw ArgumentError("function_norm: sample/grid size mismatch");
  auto part = [&](std::span<const double> grid, std::span<const cplx> vals) {
    LogSup sup;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double mag = std::abs(vals[i]);
      if (!std::isfinite(mag)) throw DataError("function_norm: non-finite sample");
      sup.range = std::max(sup.range, std::abs(grid[i]));
      if (mag == 0.0) continue;
      sup.update(std::log(mag) + w(std::abs(grid[i])), std::abs(grid[i]));
    }
    return sup;
  };
  const LogSup a = part(xs, f), b = part(xis, ff);
  SupNorm out;
  out.value = safe_exp(a.log_value) + safe_exp(b.log_value);
  out.attained_at = std::max(a.attained_at, b.attained_at);
  out.diverging = (a.range > 0.0 && a.attained_at > 0.95 * a.range) ||
                  (b.range > 0.0 && b.attained_at > 0.95 * b.range);
  return out;
}

SupNorm sequence_norm(const CoefficientSequence& alpha, const WeightFunction& w) {
  const std::size_t n = alpha.values.size();
  if (n == 0) throw ArgumentError("sequence_norm: empty sequence");
  LogSup sup;
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = std::abs(alpha.values[i]);
    if (!std::isfinite(mag)) throw DataError("sequence_norm: non-finite coefficient");
    if (mag == 0.0) continue;
    sup.update(std::log(mag) + w(std::sqrt(static_cast<double>(i))), static_cast<double>(i));
  }
  SupNorm out;
  out.value = safe_exp(sup.log_value);
  out.attained_at = sup.attained_at;
  const double last = static_cast<double>(n - 1);
  out.diverging = (n > 20) && sup.attained_at > 0.95 * last;
  return out;
}

SupNorm matrix_norm(const DensityMatrix& rho, const WeightFunction& w) {
  const int N = rho.n_max();
  // weights along one index are shared by rows and columns
  std::vector<double> wv(static_cast<std::size_t>(N) + 1);
  for (int i = 0; i <= N; ++i) wv[i] = w(std::sqrt(static_cast<double>(i)));
  LogSup sup;
  for (int m = 0; m <= N; ++m)
    for (int n = 0; n <= N; ++n) {
      const double mag = std::abs(rho.at(m, n));
      if (!std::isfinite(mag)) throw DataError("matrix_norm: non-finite entry");
      if (mag == 0.0) continue;
      sup.update(std::log(mag) + wv[m] + wv[n], static_cast<double>(std::max(m, n)));
    }
  SupNorm out;
  out.value = safe_exp(sup.log_value);
  out.attained_at = sup.attained_at;
  out.diverging = (N > 20) && sup.attained_at > 0.95 * static_cast<double>(N);
  return out;
}

SupNorm phase_space_norm(const PhaseSpaceGrid& grid, const WeightFunction& w) {
  const std::size_t nq = grid.q_axis.size(), np = grid.p_axis.size();
  if (nq == 0 || np == 0) throw ArgumentError("phase_space_norm: empty grid");
  std::vector<double> wq(nq), wp(np);
  double q_range = 0.0, p_range = 0.0;
  for (std::size_t i = 0; i < nq; ++i) {
    wq[i] = w(std::abs(grid.q_axis[i]));
    q_range = std::max(q_range, std::abs(grid.q_axis[i]));
  }
  for (std::size_t j = 0; j < np; ++j) {
    wp[j] = w(std::abs(grid.p_axis[j]));
    p_range = std::max(p_range, std::abs(grid.p_axis[j]));
  }
  LogSup sup;
  double at_q = 0.0, at_p = 0.0;
  for (std::size_t i = 0; i < nq; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      const double mag = std::abs(grid.values.at(i, j));
      if (!std::isfinite(mag)) throw DataError("phase_space_norm: non-finite grid value");
      if (mag == 0.0) continue;
      const double log_term = std::log(mag) + 2.0 * (wq[i] + wp[j]);
      if (log_term > sup.log_value) {
        sup.log_value = log_term;
        at_q = std::abs(grid.q_axis[i]);
        at_p = std::abs(grid.p_axis[j]);
      }
    }
  SupNorm out;
  out.value = safe_exp(sup.log_value);
  out.attained_at = std::hypot(at_q, at_p);
  out.diverging = (q_range > 0.0 && at_q > 0.95 * q_range) ||
                  (p_range > 0.0 && at_p > 0.95 * p_range);
  return out;
}

}  // namespace fockwig
