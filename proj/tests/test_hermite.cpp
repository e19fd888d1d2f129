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

using namespace fockwig;

TEST_CASE("hermite function values at pinned points") {
  const auto h = hermite_values(3, 0.0);
  CHECK(h[0] == doctest::Approx(std::pow(M_PI, -0.25)).epsilon(1e-15));
  CHECK(h[1] == 0.0);

  // h_1(x) = sqrt(2) x pi^{-1/4} e^{-x^2/2}
  const double h1 = hermite_values(1, 1.0)[1];
  CHECK(h1 == doctest::Approx(std::sqrt(2.0) * std::pow(M_PI, -0.25) * std::exp(-0.5))
                  .epsilon(1e-14));

  CHECK(hermite_at(1, 1.0) == doctest::Approx(h1).epsilon(1e-15));
  CHECK_THROWS_AS(hermite_values(kHermiteCeiling + 1, 0.0), CapacityError);
  CHECK_THROWS_AS(hermite_values(-1, 0.0), ArgumentError);
}

TEST_CASE("hermite values stay bounded by one") {
  for (int n : {0, 1, 7, 64, 300, 512}) {
    for (double x = 0.0; x <= 50.0; x += 0.37) {
      const auto h = hermite_values(n, x);
      for (double v : h) CHECK(std::abs(v) <= 1.0);
    }
  }
}

TEST_CASE("gauss rule small orders are exact") {
  SUBCASE("order one") {
    const QuadratureRule r = gauss_hermite_rule(1);
    CHECK(r.nodes[0] == 0.0);
    CHECK(r.weights[0] == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
  }
  SUBCASE("order two matches the quadratic roots") {
    const QuadratureRule r = gauss_hermite_rule(2);
    CHECK(r.nodes[0] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(r.nodes[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(r.weights[0] == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-13));
    CHECK(r.weights[1] == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-13));
  }
}

TEST_CASE("gauss rule integrates monomials exactly") {
  // integral x^{2k} e^{-x^2} = Gamma(k + 1/2)
  const QuadratureRule r = gauss_hermite_rule(7);
  for (int k = 0; k <= 6; ++k) {
    double acc = 0.0;
    for (int i = 0; i < r.order(); ++i) acc += r.weights[i] * std::pow(r.nodes[i], 2 * k);
    CHECK(acc == doctest::Approx(std::tgamma(k + 0.5)).epsilon(1e-12));
  }
}

TEST_CASE("gauss rule invariants at moderate and large order") {
  for (int order : {5, 40, 61, 257}) {
    const QuadratureRule r = gauss_hermite_rule(order);
    double sum = 0.0;
    for (double w : r.weights) {
      CHECK(w >= 0.0);
      sum += w;
    }
    CHECK(sum == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
    for (int i = 0; i + 1 < order; ++i) {
      CHECK(r.nodes[i] < r.nodes[i + 1]);
      CHECK(r.nodes[i] == doctest::Approx(-r.nodes[order - 1 - i]).epsilon(1e-13));
    }
    // lifted weights carry exactly the e^{x^2} factor where both representable
    for (int i = 0; i < order; ++i)
      if (r.weights[i] > 1e-280)
        CHECK(r.lifted_weights[i] ==
              doctest::Approx(r.weights[i] * std::exp(r.nodes[i] * r.nodes[i])).epsilon(1e-10));
  }
}

TEST_CASE("lifted weights survive orders where raw weights underflow") {
  const QuadratureRule r = gauss_hermite_rule(1025);
  for (int i = 0; i < r.order(); ++i) {
    CHECK(std::isfinite(r.lifted_weights[i]));
    CHECK(r.lifted_weights[i] > 0.0);
  }
  CHECK(r.weights.front() == 0.0);  // e^{-x^2} below denormal range at the edge node
}

TEST_CASE("orthonormality through the rule") {
  const int top = 60;
  const QuadratureRule r = gauss_hermite_rule(top + 1);
  std::vector<std::vector<double>> cols(r.order());
  for (int k = 0; k < r.order(); ++k) cols[k] = hermite_values(top, r.nodes[k]);
  double worst = 0.0;
  for (int m = 0; m <= top; ++m)
    for (int n = m; n <= top; ++n) {
      double g = 0.0;
      for (int k = 0; k < r.order(); ++k) g += r.lifted_weights[k] * cols[k][m] * cols[k][n];
      worst = std::max(worst, std::abs(g - (m == n ? 1.0 : 0.0)));
    }
  CHECK(worst <= 1e-10);
}

TEST_CASE("analyze recovers basis vectors and parities") {
  const QuadratureRule r = gauss_hermite_rule(32);
  SUBCASE("a pure basis function maps to a unit vector") {
    const CoefficientSequence a = analyze([](double x) { return hermite_at(3, x); }, 16, r);
    for (int n = 0; n <= 16; ++n)
      CHECK(std::abs(a.values[n] - (n == 3 ? cplx(1, 0) : cplx(0, 0))) <= 1e-10);
  }
  SUBCASE("the normalized Gaussian is the ground state") {
    const CoefficientSequence a = analyze(
        [](double x) { return std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x); }, 8, r);
    CHECK(std::abs(a.values[0] - cplx(1, 0)) <= 1e-12);
    for (int n = 1; n <= 8; ++n) CHECK(std::abs(a.values[n]) <= 1e-12);
  }
  SUBCASE("odd functions have no even coefficients") {
    const CoefficientSequence a =
        analyze([](double x) { return x * std::exp(-x * x); }, 15, r);
    for (int n = 0; n <= 15; n += 2) CHECK(std::abs(a.values[n]) <= 1e-12);
  }
  SUBCASE("rule must be large enough") {
    CHECK_THROWS_AS(analyze([](double) { return cplx(1, 0); }, 40, r), ArgumentError);
  }
  SUBCASE("non-finite integrand is a data error") {
    CHECK_THROWS_AS(analyze([](double) { return cplx(std::nan(""), 0); }, 4, r), DataError);
  }
}

TEST_CASE("synthesize partial sums") {
  SUBCASE("ground state at the origin") {
    const std::vector<cplx> v =
        synthesize(CoefficientSequence::unit(0, 0), std::vector<double>{0.0});
    CHECK(v[0].real() == doctest::Approx(std::pow(M_PI, -0.25)).epsilon(1e-15));
  }
  SUBCASE("roundtrip on the nodes") {
    const QuadratureRule r = gauss_hermite_rule(16);
    const CoefficientSequence a = analyze([](double x) { return hermite_at(5, x); }, 10, r);
    const std::vector<cplx> back = synthesize(a, r.nodes);
    for (int k = 0; k < r.order(); ++k)
      CHECK(std::abs(back[k] - hermite_at(5, r.nodes[k])) <= 1e-10);
  }
  SUBCASE("termwise bound for geometric coefficients") {
    std::vector<cplx> v(40);
    for (int n = 0; n < 40; ++n) v[n] = std::exp(-2.0 * n);
    const CoefficientSequence a(std::move(v));
    for (double x : {0.0, 0.7, 2.3, 5.0})
      CHECK(std::abs(synthesize_at(a, x)) <= 1.0 / (1.0 - std::exp(-2.0)) + 1e-12);
  }
}

TEST_CASE("coefficient-space Fourier action") {
  const CoefficientSequence e0 = CoefficientSequence::unit(0, 4);
  const CoefficientSequence e1 = CoefficientSequence::unit(1, 4);
  CHECK(fourier_in_coefficients(e0).values[0] == cplx(1, 0));
  CHECK(fourier_in_coefficients(e1).values[1] == cplx(0, -1));

  SUBCASE("support in multiples of four is fixed") {
    CoefficientSequence a = CoefficientSequence::unit(4, 9);
    a.values[8] = cplx(0.25, -0.5);
    const CoefficientSequence b = fourier_in_coefficients(a);
    for (int n = 0; n <= 9; ++n) CHECK(b.values[n] == a.values[n]);
  }
  SUBCASE("fourth power is the identity exactly") {
    std::mt19937 rng(3);
    std::normal_distribution<double> gauss;
    std::vector<cplx> v(21);
    for (auto& z : v) z = cplx(gauss(rng), gauss(rng));
    const CoefficientSequence a(v);
    CoefficientSequence b = a;
    for (int k = 0; k < 4; ++k) b = fourier_in_coefficients(b);
    for (int n = 0; n <= 20; ++n) CHECK(b.values[n] == a.values[n]);
  }
}

TEST_CASE("numeric Fourier transform reproduces the eigenrelation") {
  const std::vector<double> xs = uniform_grid(-16.0, 16.0, 1.0 / 16.0);
  const std::vector<double> xis = uniform_grid(-6.0, 6.0, 0.25);
  for (int n : {0, 2, 5}) {
    std::vector<cplx> f(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) f[i] = hermite_at(n, xs[i]);
    const FourierResult tr = fourier_numeric(xs, f, xis);
    CHECK_FALSE(tr.truncation_warning);
    const cplx phase = n % 4 == 0 ? cplx(1, 0) : (n % 4 == 2 ? cplx(-1, 0) : cplx(0, -1));
    for (std::size_t i = 0; i < xis.size(); ++i)
      CHECK(std::abs(tr.values[i] - phase * hermite_at(n, xis[i])) <= 1e-8);
  }
  SUBCASE("zero maps to zero") {
    std::vector<cplx> zero(xs.size(), cplx(0, 0));
    const FourierResult tr = fourier_numeric(xs, zero, xis);
    for (const cplx& v : tr.values) CHECK(std::abs(v) == 0.0);
  }
  SUBCASE("grid validation") {
    std::vector<double> bad = xs;
    bad[3] += 1e-3;
    std::vector<cplx> f(xs.size(), cplx(1, 0));
    CHECK_THROWS_AS(fourier_numeric(bad, f, xis), ArgumentError);
    const std::vector<double> off = uniform_grid(-4.0, 6.0, 0.125);
    std::vector<cplx> g(off.size(), cplx(0, 0));
    CHECK_THROWS_AS(fourier_numeric(off, g, xis), ArgumentError);
  }
  SUBCASE("insufficient boundary decay is flagged, not fatal") {
    const std::vector<double> small = uniform_grid(-2.0, 2.0, 0.125);
    std::vector<cplx> f(small.size());
    for (std::size_t i = 0; i < small.size(); ++i) f[i] = std::exp(-small[i] * small[i]);
    CHECK(fourier_numeric(small, f, xis).truncation_warning);
  }
}

TEST_CASE("number-operator powers in coefficient space") {
  const CoefficientSequence e0 = CoefficientSequence::unit(0, 3);
  const CoefficientSequence e3 = CoefficientSequence::unit(3, 3);
  CHECK(hermite_operator_in_coefficients(e0, 1).values[0] == cplx(1, 0));
  CHECK(hermite_operator_in_coefficients(e3, 2).values[3].real() ==
        doctest::Approx(49.0).epsilon(1e-14));

  std::vector<cplx> v(5, cplx(0.5, -0.25));
  const CoefficientSequence a(v);
  const CoefficientSequence same = hermite_operator_in_coefficients(a, 0);
  for (int n = 0; n <= 4; ++n) CHECK(same.values[n] == a.values[n]);

  CHECK_THROWS_AS(hermite_operator_in_coefficients(CoefficientSequence::unit(1000, 1000), 400),
                  NumericError);
  CHECK_THROWS_AS(hermite_operator_in_coefficients(a, -1), ArgumentError);
}

TEST_CASE("tail envelope of the Hermite functions") {
  SUBCASE("pinned comparison at n = 0, x = 3") {
    const double lhs = std::pow(M_PI, -0.25) * std::exp(-4.5);
    const double rhs = std::exp(-0.5 * (3.0 - 1.0) * (3.0 - 1.0));
    CHECK(lhs <= rhs);
    const EnvelopeCheck chk = hermite_tail_envelope_check(0, std::vector<double>{3.0});
    CHECK(chk.holds);
  }
  SUBCASE("n = 10 over its tail grid") {
    const double s = std::sqrt(21.0);
    const EnvelopeCheck chk = hermite_tail_envelope_check(10, uniform_grid(s, 12.0, 1.0 / 64));
    CHECK(chk.holds);
    CHECK(chk.min_slack >= 0.0);
  }
  SUBCASE("the boundary point x = s is covered") {
    const double s = std::sqrt(2.0 * 7 + 1.0);
    const EnvelopeCheck chk = hermite_tail_envelope_check(7, std::vector<double>{s});
    CHECK(chk.holds);
    CHECK(chk.points_checked == 1);
  }
  SUBCASE("a grid below the turning point is an argument error") {
    CHECK_THROWS_AS(hermite_tail_envelope_check(50, std::vector<double>{1.0}), ArgumentError);
  }
}

TEST_CASE("truncated expansions respect the Parseval budget") {
  std::mt19937 rng(11);
  std::normal_distribution<double> gauss;
  const QuadratureRule r = gauss_hermite_rule(49);
  std::vector<cplx> v(25);
  for (auto& z : v) z = cplx(gauss(rng), gauss(rng));
  const CoefficientSequence a(std::move(v));
  auto f = [&](double x) { return synthesize_at(a, x); };
  const CoefficientSequence back = analyze(f, 48, r);
  double sum = 0.0;
  for (const cplx& z : back.values) sum += std::norm(z);
  double l2 = 0.0;
  for (int k = 0; k < r.order(); ++k) l2 += r.lifted_weights[k] * std::norm(f(r.nodes[k]));
  CHECK(sum <= l2 + 1e-8);
}
