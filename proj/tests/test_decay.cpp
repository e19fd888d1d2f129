/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <cmath>

#include "decay.hpp"
#include "errors.hpp"
#include "numerics.hpp"

using namespace fockwig;

namespace {

CoefficientSequence stretched_family(double lambda, double beta, int n_max) {
  std::vector<cplx> v(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    v[n] = std::exp(-lambda * std::pow(static_cast<double>(n), beta / 2.0));
  return CoefficientSequence(std::move(v));
}

}  // namespace

TEST_CASE("envelope fit recovers exact family members") {
  SUBCASE("lambda 2, beta 1") {
    const DecayEnvelope env = fit_envelope(stretched_family(2.0, 1.0, 256));
    CHECK(env.lambda_hat == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(env.beta_hat == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_FALSE(env.degenerate);
  }
  SUBCASE("lambda 1, beta 2") {
    const DecayEnvelope env = fit_envelope(stretched_family(1.0, 2.0, 256));
    CHECK(env.lambda_hat == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(env.beta_hat == doctest::Approx(2.0).epsilon(1e-6));
  }
  SUBCASE("sweep over the parameter box") {
    for (double lambda : {0.5, 1.0, 2.0})
      for (double beta : {0.5, 1.0, 1.5, 2.0}) {
        const DecayEnvelope env = fit_envelope(stretched_family(lambda, beta, 400));
        CHECK(std::abs(env.lambda_hat - lambda) <= 1e-6);
        CHECK(std::abs(env.beta_hat - beta) <= 1e-6);
        CHECK(env.support_count >= 8);
      }
  }
}

TEST_CASE("envelope fit is scale equivariant") {
  const CoefficientSequence base = stretched_family(1.5, 1.0, 200);
  std::vector<cplx> scaled(base.values);
  for (auto& z : scaled) z *= 37.5;
  const DecayEnvelope a = fit_envelope(base);
  const DecayEnvelope b = fit_envelope(CoefficientSequence(std::move(scaled)));
  CHECK(std::abs(a.lambda_hat - b.lambda_hat) <= 1e-8);
  CHECK(std::abs(a.beta_hat - b.beta_hat) <= 1e-8);
  CHECK(b.c_hat == doctest::Approx(37.5 * a.c_hat).epsilon(1e-12));
}

TEST_CASE("envelope fit error paths") {
  SUBCASE("a single spike has no usable support") {
    CHECK_THROWS_AS(fit_envelope(CoefficientSequence::unit(0, 40)), ArgumentError);
  }
  SUBCASE("growing sequences are degenerate data") {
    std::vector<cplx> v(64);
    for (int n = 0; n < 64; ++n) v[n] = 1.0 + n;
    CHECK_THROWS_AS(fit_envelope(CoefficientSequence(std::move(v))), DataError);
  }
  SUBCASE("algebraic decay is flagged, not fitted") {
    std::vector<cplx> v(400);
    for (int n = 0; n < 400; ++n) v[n] = 1.0 / ((n + 1.0) * (n + 2.0));
    const DecayEnvelope env = fit_envelope(CoefficientSequence(std::move(v)));
    CHECK(env.degenerate);
  }
}

TEST_CASE("forward bound on the ground state") {
  const QuadratureRule rule = gauss_hermite_rule(24);
  const auto w = WeightFunction::power(0.2, 2.0);
  const TestFunction f =
      function_from_coefficients(CoefficientSequence::unit(0, 8), default_norm_grid());
  const TameBoundReport rep =
      verify_forward_bound(f, w, default_cbar_grid(), 8, rule);
  CHECK(rep.in_class);
  CHECK(rep.smallest_cbar == 1.0);
  CHECK(rep.lhs_norm == doctest::Approx(1.0).epsilon(1e-10));
  // ||f||_w = 2 pi^{-1/4}, so the first ratio is pi^{1/4}/2
  CHECK(rep.constant == doctest::Approx(0.5 * std::pow(M_PI, 0.25)).epsilon(1e-10));
}

TEST_CASE("polynomially decaying coefficients are reported out of class") {
  std::vector<cplx> v(513);
  v[0] = 1.0;
  for (int n = 1; n <= 512; ++n) v[n] = 1.0 / (static_cast<double>(n) * n);
  const CoefficientSequence alpha(std::move(v));
  const auto w = WeightFunction::power(1.0, 1.0);
  const QuadratureRule rule = gauss_hermite_rule(513);
  const TestFunction f = function_from_coefficients(alpha, default_norm_grid());
  const TameBoundReport rep = verify_forward_bound(f, w, default_cbar_grid(), 512, rule);
  CHECK(rep.lhs_diverging);
  CHECK_FALSE(rep.in_class);
}

TEST_CASE("backward bound mirrors the hypothesis") {
  SUBCASE("ground state") {
    const auto w = WeightFunction::power(0.2, 2.0);
    const TameBoundReport rep = verify_backward_bound(
        CoefficientSequence::unit(0, 8), w, default_cbar_grid(), default_norm_grid());
    CHECK(rep.in_class);
    CHECK(rep.smallest_cbar == 1.0);
    CHECK(rep.lhs_norm == doctest::Approx(2.0 * std::pow(M_PI, -0.25)).epsilon(1e-10));
  }
  SUBCASE("root-exponential coefficients under the linear weight") {
    std::vector<cplx> v(513);
    for (int n = 0; n <= 512; ++n) v[n] = std::exp(-2.0 * std::sqrt(double(n)));
    const TameBoundReport rep =
        verify_backward_bound(CoefficientSequence(std::move(v)), WeightFunction::power(1.0, 1.0),
                              default_cbar_grid(), default_norm_grid());
    CHECK(rep.in_class);
    CHECK(rep.smallest_cbar <= 4.0);
  }
  SUBCASE("weights violating the strict cap are rejected") {
    CHECK_THROWS_AS(
        verify_backward_bound(CoefficientSequence::unit(0, 8), WeightFunction::power(1.0, 2.0),
                              default_cbar_grid(), default_norm_grid()),
        PreconditionError);
  }
}

TEST_CASE("tail sums against both envelope forms") {
  const auto w = WeightFunction::power(1.0, 1.0);
  SUBCASE("direct summation cross-check at y = 100") {
    const TailSumReport rep = tail_sum_check(w, 2.0, std::vector<double>{100.0});
    double oracle = 0.0;
    for (long n = 100;; ++n) {
      const double term = std::exp(-2.0 * std::sqrt(static_cast<double>(n)));
      oracle += term;
      if (term < 1e-30) break;
    }
    CHECK(rep.cases[0].tail == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(rep.cases[0].c_half ==
          doctest::Approx(oracle / std::exp(-std::sqrt(100.0))).epsilon(1e-12));
  }
  SUBCASE("y = 1 holds trivially") {
    const TailSumReport rep = tail_sum_check(w, 2.0, std::vector<double>{1.0});
    CHECK(rep.cases[0].tail <= rep.cases[0].c_half * std::exp(-1.0));
  }
  SUBCASE("full-envelope constants are stable within a factor two") {
    const TailSumReport rep = tail_sum_check(w, 2.0, std::vector<double>{50.0, 100.0, 200.0});
    double lo = 1e300, hi = 0.0;
    for (const auto& c : rep.cases) {
      lo = std::min(lo, c.c_full);
      hi = std::max(hi, c.c_full);
    }
    CHECK(hi / lo <= 2.0);
  }
  SUBCASE("a log-like weight never converges within the cap") {
    std::vector<std::pair<double, double>> pts;
    for (double t = 1e-3; t <= 1e7; t *= 1.3) pts.emplace_back(t, std::log1p(t));
    CHECK_THROWS_AS(
        tail_sum_check(WeightFunction::tabulated(std::move(pts)), 2.0, std::vector<double>{10.0}),
        DataError);
  }
}

TEST_CASE("weighted moment growth of the ground state") {
  const auto w = WeightFunction::power(0.4, 2.0);
  const QuadratureRule rule = gauss_hermite_rule(64);
  const TestFunction f =
      function_from_coefficients(CoefficientSequence::unit(0, 0), default_norm_grid());
  const MomentBoundReport rep = moment_bound_check(f, w, 10, rule);

  CHECK(rep.cases[0].l2_norm == doctest::Approx(1.0).epsilon(1e-12));
  // ||x^2 h_0||_{L^2} = sqrt(3)/2 from the quartic Gaussian moment
  CHECK(rep.cases[2].l2_norm == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
  CHECK(std::isfinite(rep.empirical_c));
  for (const auto& c : rep.cases) CHECK(c.ratio <= rep.empirical_c + 1e-15);
  CHECK_FALSE(rep.f_norm_diverging);
}

TEST_CASE("forward and backward reports agree on class membership for family members") {
  const QuadratureRule rule = gauss_hermite_rule(257);
  for (double lambda : {1.0}) {
    for (double beta : {1.0, 1.5}) {
      std::vector<cplx> v(257);
      for (int n = 0; n <= 256; ++n)
        v[n] = std::exp(-lambda * std::pow(static_cast<double>(n), beta / 2.0));
      const CoefficientSequence alpha(std::move(v));
      const auto w = WeightFunction::power(lambda / 4.0, beta);
      const TestFunction f = function_from_coefficients(alpha, default_norm_grid());
      const TameBoundReport fwd = verify_forward_bound(f, w, default_cbar_grid(), 256, rule);
      const TameBoundReport bwd =
          verify_backward_bound(alpha, w, default_cbar_grid(), default_norm_grid());
      CHECK(fwd.in_class);
      CHECK(bwd.in_class);
      CHECK(fwd.smallest_cbar <= 8.0);
      CHECK(bwd.smallest_cbar <= 8.0);
    }
  }
}
