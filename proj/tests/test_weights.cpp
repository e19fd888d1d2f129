/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <cmath>
#include <random>

#include "errors.hpp"
#include "hermite.hpp"
#include "numerics.hpp"
#include "phase_space.hpp"
#include "states.hpp"
#include "weights.hpp"

using namespace fockwig;

TEST_CASE("power weight evaluates the power law exactly") {
  CHECK(WeightFunction::power(1.0, 2.0)(2.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(WeightFunction::power(0.5, 1.0)(3.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(WeightFunction::power(0.7, 1.3)(0.0) == 0.0);
  CHECK_THROWS_AS(WeightFunction::power(1.0, 2.0)(-0.5), DomainError);
  CHECK_THROWS_AS(WeightFunction::power(0.0, 1.0), ArgumentError);
  CHECK_THROWS_AS(WeightFunction::power(1.0, 2.5), ArgumentError);
}

TEST_CASE("tabulated weight interpolates and refuses extrapolation") {
  auto w = WeightFunction::tabulated({{0.0, 0.0}, {1.0, 2.0}, {3.0, 4.0}});
  CHECK(w(0.5) == doctest::Approx(1.0));
  CHECK(w(2.0) == doctest::Approx(3.0));
  CHECK_THROWS_AS(w(3.5), DomainError);
  CHECK_THROWS_AS(WeightFunction::tabulated({{0.0, 1.0}, {1.0, 0.5}}), ArgumentError);
  CHECK_THROWS_AS(WeightFunction::tabulated({{0.0, 0.0}}), ArgumentError);

  // scaling stays in the class: values scale linearly
  auto w2 = w.scaled(2.5);
  CHECK(w2(2.0) == doctest::Approx(2.5 * w(2.0)));
}

TEST_CASE("convex conjugate closed form for powers") {
  const auto w = WeightFunction::power(1.0, 1.0);  // Omega(t) = e^t
  CHECK(omega_star(w, 2.0).value == doctest::Approx(2.0 * std::log(2.0) - 2.0).epsilon(1e-12));
  CHECK(omega_star(w, 0.0).value == 0.0);
  CHECK(omega_star(w, 0.0).method == OmegaStar::Method::closed_form);

  // brute-force oracle: dense grid maximization of nu t - Omega(t)
  for (double nu : {0.5, 1.0, 3.0, 7.5}) {
    double best = -1e300;
    for (double t = -40.0; t <= 40.0; t += 1e-4)
      best = std::max(best, nu * t - w.log_reparam(t));
    CHECK(omega_star(w, nu).value == doctest::Approx(best).epsilon(1e-7));
  }
}

TEST_CASE("convex conjugate for a tabulated weight via golden section") {
  // tabulate t^1.5 densely so the interpolant tracks the smooth weight
  std::vector<std::pair<double, double>> pts;
  for (double t = 1e-4; t <= 2e4; t *= 1.05) pts.emplace_back(t, std::pow(t, 1.5));
  const auto w = WeightFunction::tabulated(std::move(pts));
  const auto ref = WeightFunction::power(1.0, 1.5);
  const auto got = omega_star(w, 3.0);
  CHECK(got.method == OmegaStar::Method::golden_section);
  // interpolation error of the table bounds the achievable agreement
  CHECK(got.value == doctest::Approx(omega_star(ref, 3.0).value).epsilon(2e-3));
  // a slope the table can never reach pushes the maximizer to the edge
  CHECK_THROWS_AS(omega_star(w, 1e9), NumericError);
}

TEST_CASE("conjugate shape: convex, floored, eventually increasing") {
  // The unrestricted conjugate is NOT monotone near zero: its derivative is
  // the maximizer t*(nu), which is negative below nu = lambda beta. For
  // omega(t) = t this gives sup_t (nu t - e^t) = nu log nu - nu, decreasing
  // on (0, 1). What is true: convexity, the Fenchel floor -omega(1), and
  // monotonicity of the sup restricted to t >= 0.
  for (const auto& w : {WeightFunction::power(0.4, 2.0), WeightFunction::power(2.0, 0.5),
                        WeightFunction::power(1.0, 1.0)}) {
    std::vector<double> vals;
    for (double nu = 0.0; nu <= 10.0; nu += 0.25) vals.push_back(omega_star(w, nu).value);
    for (std::size_t i = 1; i + 1 < vals.size(); ++i)
      CHECK(vals[i + 1] - 2.0 * vals[i] + vals[i - 1] >= -1e-10);  // convex
    for (double v : vals) CHECK(v >= -w(1.0) - 1e-12);             // Fenchel at t = 0

    const double turn = w.lambda() * w.beta();
    double prev = -1e300;
    for (double nu = turn; nu <= turn + 8.0; nu += 0.25) {
      const double v = omega_star(w, nu).value;
      CHECK(v >= prev - 1e-12);
      prev = v;
    }

    // restricted conjugate sup_{t>=0} is nondecreasing outright
    auto restricted = [&](double nu) {
      double best = -1e300;
      for (double t = 0.0; t <= 40.0; t += 1e-3)
        best = std::max(best, nu * t - w.log_reparam(t));
      return best;
    };
    prev = -1e300;
    for (double nu = 0.0; nu <= 6.0; nu += 0.5) {
      const double v = restricted(nu);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }

    for (double nu : {0.0, 1.0, 4.0})
      for (double t = -5.0; t <= 5.0; t += 0.5)
        CHECK(nu * t <= w.log_reparam(t) + omega_star(w, nu).value + 1e-9);
  }

  // explicit witness that the unrestricted conjugate decreases near zero
  const auto w1 = WeightFunction::power(1.0, 1.0);
  CHECK(omega_star(w1, 0.0).value == 0.0);
  CHECK(omega_star(w1, 1.0).value == doctest::Approx(-1.0));
}

TEST_CASE("axiom checks on the running examples") {
  const auto grid = default_axiom_grid();

  const AxiomReport linear = check_weight_axioms(WeightFunction::power(1.0, 1.0), grid);
  CHECK(linear.all_pass());
  CHECK(linear.doubling.observed == doctest::Approx(2.0).epsilon(1e-9));

  const AxiomReport gauss = check_weight_axioms(WeightFunction::power(1.0, 2.0), grid);
  CHECK(gauss.quadratic_cap.verdict == Verdict::fail);
  CHECK(gauss.quadratic_cap.witness_t.has_value());
  CHECK(gauss.quadratic_cap.observed == doctest::Approx(1.0).epsilon(1e-9));

  const AxiomReport ok = check_weight_axioms(WeightFunction::power(0.4, 2.0), grid);
  CHECK(ok.quadratic_cap.verdict == Verdict::pass);
  CHECK(ok.quadratic_cap_strict.verdict == Verdict::pass);

  // the borderline scale passes the cap but not its strict variant
  const AxiomReport edge = check_weight_axioms(WeightFunction::power(0.5, 2.0), grid);
  CHECK(edge.quadratic_cap.verdict == Verdict::pass);
  CHECK(edge.quadratic_cap_strict.verdict == Verdict::fail);
  CHECK(edge.quadratic_cap_strict.witness_t.has_value());

  CHECK_THROWS_AS(check_weight_axioms(WeightFunction::power(1.0, 1.0), std::vector<double>{}),
                  ArgumentError);
  CHECK_THROWS_AS(
      check_weight_axioms(WeightFunction::power(1.0, 1.0), std::vector<double>{1.0, 2.0, 3.0}),
      ArgumentError);
}

TEST_CASE("a concave-in-log table fails convexity with a witness") {
  std::vector<std::pair<double, double>> pts;
  for (double t = 1e-3; t <= 2e4; t *= 1.2) pts.emplace_back(t, t / (1.0 + t));
  const AxiomReport rep = check_weight_axioms(WeightFunction::tabulated(std::move(pts)),
                                              default_axiom_grid());
  CHECK(rep.convexity.verdict == Verdict::fail);
  CHECK(rep.convexity.witness_t.has_value());
}

namespace {

SampledFunction gaussian_samples(const std::vector<double>& xs) {
  SampledFunction s;
  s.xs = xs;
  for (double x : xs) s.values.push_back(std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x));
  return s;
}

}  // namespace

TEST_CASE("function norm of the ground state") {
  const std::vector<double> xs = uniform_grid(-12.0, 12.0, 1.0 / 64.0);
  const SampledFunction f = gaussian_samples(xs);

  SUBCASE("subcritical Gaussian weight attains the sup at the origin") {
    const SupNorm r = function_norm(f.xs, f.values, f.xs, f.values,
                                    WeightFunction::power(0.4, 2.0));
    CHECK(r.value == doctest::Approx(2.0 * std::pow(M_PI, -0.25)).epsilon(1e-12));
    CHECK_FALSE(r.diverging);
    CHECK(r.attained_at == 0.0);
  }
  SUBCASE("supercritical weight pushes the sup to the grid edge") {
    const SupNorm r =
        function_norm(f.xs, f.values, f.xs, f.values, WeightFunction::power(1.0, 2.0));
    CHECK(r.diverging);
  }
  SUBCASE("zero function has zero norm") {
    std::vector<cplx> zero(xs.size(), cplx(0, 0));
    const SupNorm r = function_norm(xs, zero, xs, zero, WeightFunction::power(0.4, 2.0));
    CHECK(r.value == 0.0);
  }
  SUBCASE("non-finite samples are data errors") {
    SampledFunction bad = f;
    bad.values[3] = cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS(
        function_norm(bad.xs, bad.values, f.xs, f.values, WeightFunction::power(0.4, 2.0)),
        DataError);
  }
}

TEST_CASE("sequence norm saturation identities") {
  const auto w = WeightFunction::power(0.7, 1.0);
  SUBCASE("unit vector at zero") {
    CHECK(sequence_norm(CoefficientSequence::unit(0, 8), w).value == doctest::Approx(1.0));
  }
  SUBCASE("exactly saturating sequence") {
    std::vector<cplx> v(64);
    for (int n = 0; n < 64; ++n) v[n] = std::exp(-w(std::sqrt(double(n))));
    CHECK(sequence_norm(CoefficientSequence(std::move(v)), w).value ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("doubly decaying sequence peaks at the first index") {
    std::vector<cplx> v(64);
    for (int n = 0; n < 64; ++n) v[n] = std::exp(-2.0 * w(std::sqrt(double(n))));
    const SupNorm r = sequence_norm(CoefficientSequence(std::move(v)), w);
    CHECK(r.value == doctest::Approx(std::exp(-w(0.0))).epsilon(1e-12));
    CHECK(r.attained_at == 0.0);
  }
}

TEST_CASE("matrix norm saturation identities") {
  const auto w = WeightFunction::power(0.3, 1.0);
  SUBCASE("ground-state projector") {
    CHECK(matrix_norm(DensityMatrix::pure(CoefficientSequence::unit(0, 4)), w).value ==
          doctest::Approx(1.0));
  }
  SUBCASE("saturating entries") {
    const int N = 32;
    CMatrix m(N + 1, N + 1);
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j)
        m.at(i, j) = std::exp(-(w(std::sqrt(double(i))) + w(std::sqrt(double(j)))));
    const DensityMatrix rho = DensityMatrix::from_entries(std::move(m));
    CHECK(matrix_norm(rho, w).value == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("doubly decaying diagonal") {
    const int N = 32;
    CMatrix m(N + 1, N + 1);
    for (int i = 0; i <= N; ++i) m.at(i, i) = std::exp(-2.0 * w(std::sqrt(double(i))));
    CHECK(matrix_norm(DensityMatrix::from_entries(std::move(m)), w).value ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("phase-space norm of the Gaussian kernel") {
  const std::vector<double> axis = uniform_grid(-6.0, 6.0, 1.0 / 16.0);
  const DensityMatrix rho = DensityMatrix::pure(CoefficientSequence::unit(0, 0));
  const PhaseSpaceGrid grid = wigner_of_density(rho, axis, axis);

  const SupNorm ok = phase_space_norm(grid, WeightFunction::power(0.2, 2.0));
  CHECK(ok.value == doctest::Approx(1.0 / M_PI).epsilon(1e-12));
  CHECK_FALSE(ok.diverging);

  const SupNorm bad = phase_space_norm(grid, WeightFunction::power(1.0, 2.0));
  CHECK(bad.diverging);
}

TEST_CASE("norms are absolutely homogeneous and satisfy the triangle inequality") {
  std::mt19937 rng(7);
  std::normal_distribution<double> gauss;
  const auto w = WeightFunction::power(0.5, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<cplx> a(24), b(24);
    for (auto& z : a) z = cplx(gauss(rng), gauss(rng));
    for (auto& z : b) z = cplx(gauss(rng), gauss(rng));
    const double na = sequence_norm(CoefficientSequence(a), w).value;
    const double nb = sequence_norm(CoefficientSequence(b), w).value;

    std::vector<cplx> sum(24), scaled(24);
    for (int i = 0; i < 24; ++i) {
      sum[i] = a[i] + b[i];
      scaled[i] = cplx(-2.5, 0.0) * a[i];
    }
    CHECK(sequence_norm(CoefficientSequence(sum), w).value <= na + nb + 1e-12);
    CHECK(sequence_norm(CoefficientSequence(scaled), w).value ==
          doctest::Approx(2.5 * na).epsilon(1e-12));
  }
}

TEST_CASE("function norms grow with the weight scale") {
  const std::vector<double> xs = uniform_grid(-10.0, 10.0, 1.0 / 32.0);
  const SampledFunction f = gaussian_samples(xs);
  const double n1 =
      function_norm(f.xs, f.values, f.xs, f.values, WeightFunction::power(0.1, 2.0)).value;
  const double n2 =
      function_norm(f.xs, f.values, f.xs, f.values, WeightFunction::power(0.3, 2.0)).value;
  CHECK(n1 <= n2 + 1e-15);
}
