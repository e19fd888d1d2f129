/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <random>

#include "decay.hpp"
#include "eigen.hpp"
#include "errors.hpp"
#include "numerics.hpp"
#include "phase_space.hpp"
#include "states.hpp"
#include "weights.hpp"

using namespace fockwig;

namespace {

CoefficientSequence random_unit(std::mt19937& rng, int n_max) {
  std::normal_distribution<double> gauss;
  std::vector<cplx> v(static_cast<std::size_t>(n_max) + 1);
  double norm2 = 0.0;
  for (auto& z : v) {
    z = cplx(gauss(rng), gauss(rng));
    norm2 += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(norm2);
  return CoefficientSequence(std::move(v));
}

}  // namespace

TEST_CASE("pure projectors") {
  SUBCASE("ground state") {
    const DensityMatrix rho = DensityMatrix::pure(CoefficientSequence::unit(0, 2));
    CHECK(rho.at(0, 0) == cplx(1, 0));
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        if (m != 0 || n != 0) CHECK(rho.at(m, n) == cplx(0, 0));
  }
  SUBCASE("balanced superposition fills a half block") {
    std::vector<cplx> v = {cplx(1 / std::sqrt(2.0), 0), cplx(1 / std::sqrt(2.0), 0)};
    const DensityMatrix rho = DensityMatrix::pure(CoefficientSequence(std::move(v)));
    for (int m = 0; m <= 1; ++m)
      for (int n = 0; n <= 1; ++n)
        CHECK(rho.at(m, n).real() == doctest::Approx(0.5).epsilon(1e-14));
  }
  SUBCASE("rank one: a single eigenvalue carries the whole mass") {
    std::mt19937 rng(41);
    const CoefficientSequence a = random_unit(rng, 12);
    const DensityMatrix rho = DensityMatrix::pure(a);
    const std::vector<double> eigs = hermitian_eigenvalues(rho.entries());
    CHECK(eigs.back() == doctest::Approx(1.0).epsilon(1e-10));
    for (std::size_t i = 0; i + 1 < eigs.size(); ++i) CHECK(std::abs(eigs[i]) <= 1e-12);
  }
}

TEST_CASE("mixtures of orthonormal states") {
  const CoefficientSequence e0 = CoefficientSequence::unit(0, 3);
  const CoefficientSequence e1 = CoefficientSequence::unit(1, 3);

  SUBCASE("a single certain state is the pure projector") {
    const std::vector<double> p = {1.0};
    const std::vector<CoefficientSequence> s = {e0};
    const DensityMatrix mix = DensityMatrix::mixture(p, s);
    const DensityMatrix pure = DensityMatrix::pure(e0);
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) CHECK(std::abs(mix.at(m, n) - pure.at(m, n)) <= 1e-15);
  }
  SUBCASE("balanced two-state mixture is diagonal") {
    const std::vector<double> p = {0.5, 0.5};
    const std::vector<CoefficientSequence> s = {e0, e1};
    const DensityMatrix mix = DensityMatrix::mixture(p, s);
    CHECK(mix.at(0, 0).real() == doctest::Approx(0.5));
    CHECK(mix.at(1, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(mix.at(0, 1)) == 0.0);
    double tr = 0.0;
    for (int k = 0; k <= 3; ++k) tr += mix.at(k, k).real();
    CHECK(tr == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("eigenvalues recover the mixing weights") {
    std::mt19937 rng(43);
    // two random orthonormal states by Gram-Schmidt
    CoefficientSequence a = random_unit(rng, 8);
    CoefficientSequence b = random_unit(rng, 8);
    cplx dot(0, 0);
    for (int k = 0; k <= 8; ++k) dot += b.values[k] * std::conj(a.values[k]);
    double nb = 0.0;
    for (int k = 0; k <= 8; ++k) {
      b.values[k] -= dot * a.values[k];
      nb += std::norm(b.values[k]);
    }
    for (auto& z : b.values) z /= std::sqrt(nb);

    const std::vector<double> p = {0.7, 0.3};
    const std::vector<CoefficientSequence> s = {a, b};
    const DensityMatrix mix = DensityMatrix::mixture(p, s);
    const std::vector<double> eigs = hermitian_eigenvalues(mix.entries());
    CHECK(eigs.back() == doctest::Approx(0.7).epsilon(1e-8));
    CHECK(eigs[eigs.size() - 2] == doctest::Approx(0.3).epsilon(1e-8));
  }
  SUBCASE("argument validation") {
    const std::vector<CoefficientSequence> ss = {e0, e0};
    const std::vector<double> p_ok = {0.5, 0.5};
    CHECK_THROWS_AS(DensityMatrix::mixture(p_ok, ss), ArgumentError);  // not orthonormal
    const std::vector<CoefficientSequence> s2 = {e0, e1};
    const std::vector<double> p_neg = {1.5, -0.5};
    CHECK_THROWS_AS(DensityMatrix::mixture(p_neg, s2), ArgumentError);
    const std::vector<double> p_bad = {0.6, 0.6};
    CHECK_THROWS_AS(DensityMatrix::mixture(p_bad, s2), ArgumentError);
  }
}

TEST_CASE("density validation") {
  SUBCASE("normalized pure states pass everything") {
    std::mt19937 rng(47);
    const ValidationReport rep = validate_density(DensityMatrix::pure(random_unit(rng, 10)));
    CHECK(rep.hermitian == Verdict::pass);
    CHECK(rep.psd == Verdict::pass);
    CHECK(rep.trace_verdict == TraceVerdict::pass);
    CHECK(rep.physical());
  }
  SUBCASE("a truncated classical mixture passes") {
    CMatrix m(3, 3);
    m.at(0, 0) = 0.5;
    m.at(1, 1) = 0.5;
    const ValidationReport rep = validate_density(DensityMatrix::from_entries(std::move(m)));
    CHECK(rep.physical());
  }
  SUBCASE("the alternating-diagonal example fails positivity and unit trace") {
    const DensityMatrix rho = DensityMatrix::counterexample(400);
    const ValidationReport rep = validate_density(rho);
    CHECK(rep.hermitian == Verdict::pass);
    CHECK(rep.psd == Verdict::fail);
    CHECK(rep.min_eigenvalue == doctest::Approx(-1.0 / 6.0).epsilon(1e-10));
    CHECK(rep.trace_verdict == TraceVerdict::truncated);
    // partial alternating sums approach 2 log 2 - 1
    CHECK(rep.trace == doctest::Approx(2.0 * std::log(2.0) - 1.0).epsilon(1e-5));
    CHECK_FALSE(rep.physical());
  }
}

TEST_CASE("the example matrix is exactly as printed") {
  const DensityMatrix rho = DensityMatrix::counterexample(4);
  CHECK(rho.at(0, 0).real() == doctest::Approx(1.0 / 2.0).epsilon(1e-15));
  CHECK(rho.at(1, 1).real() == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
  CHECK(rho.at(2, 2).real() == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      if (m != n) CHECK(rho.at(m, n) == cplx(0, 0));
  CHECK(rho.provenance() == DensityMatrix::Provenance::counterexample);
}

TEST_CASE("closed-form Wigner value of the example state") {
  SUBCASE("origin value") {
    CHECK(counterexample_wigner_closed_form(0.0, 0.0) ==
          doctest::Approx(1.0 / M_PI).epsilon(1e-14));
  }
  SUBCASE("positive and below the Gaussian envelope everywhere sampled") {
    for (double r = 0.0; r <= 6.0; r += 0.125) {
      const double v = counterexample_wigner_closed_form(r, 0.0);
      CHECK(v > 0.0);
      CHECK(v <= std::exp(-r * r) / M_PI + 1e-15);
    }
  }
  SUBCASE("rotation invariance") {
    CHECK(counterexample_wigner_closed_form(0.6, 0.8) ==
          doctest::Approx(counterexample_wigner_closed_form(1.0, 0.0)).epsilon(1e-12));
  }
  SUBCASE("series approaches the closed form within the truncation tail") {
    // exact telescoping at the origin: the M-term series misses 1/((M+2) pi)
    const std::vector<double> origin = {0.0};
    for (int M : {100, 400}) {
      const double gap = counterexample_series_gap(M, origin);
      CHECK(gap == doctest::Approx(1.0 / ((M + 2.0) * M_PI)).epsilon(1e-9));
    }
    // away from the origin the oscillatory tail is smaller but still O(1/M)
    const std::vector<double> r1 = {1.0};
    const double g400 = counterexample_series_gap(400, r1);
    const double g3200 = counterexample_series_gap(3200, r1);
    CHECK(g400 <= 1.0 / 400.0);
    CHECK(g3200 < g400);
  }
}

TEST_CASE("decay experiment separates matrix decay from phase-space decay") {
  SUBCASE("asymptotic window") {
    const CounterexampleReport rep =
        decay_vs_wigner_experiment(400, uniform_grid(4.0, 8.0, 1.0 / 16.0));
    CHECK(rep.diag_fit_degenerate);
    CHECK(rep.closed_form_positive);
    CHECK(rep.closed_form_bounded);
    // frozen from the closed form itself: slope -1.027 on [4, 8]
    CHECK(rep.wigner_slope == doctest::Approx(-1.027).epsilon(0.02));
    CHECK(std::abs(rep.wigner_slope + 1.0) <= 0.05);
    // the truncation tail dominates the series gap: 1/(402 pi) ~ 7.9e-4
    CHECK(rep.series_max_gap ==
          doctest::Approx(1.0 / (402.0 * M_PI)).epsilon(0.05));
  }
  SUBCASE("near window still carries the logarithmic correction") {
    const CounterexampleReport rep =
        decay_vs_wigner_experiment(128, uniform_grid(1.0, 3.0, 1.0 / 32.0));
    // frozen from the closed form: least squares slope -1.205 on [1, 3]
    CHECK(rep.wigner_slope == doctest::Approx(-1.205).epsilon(0.02));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(decay_vs_wigner_experiment(32, uniform_grid(4.0, 8.0, 0.25)),
                    ArgumentError);
    CHECK_THROWS_AS(decay_vs_wigner_experiment(128, uniform_grid(4.0, 4.5, 0.25)),
                    ArgumentError);
  }
}

TEST_CASE("grid synthesis agrees with the independent diagonal recurrence") {
  // wigner_of_density assembles kernels through rescaled prefactors; the
  // series helper runs a bare Laguerre recurrence. Same sum, two code paths.
  const DensityMatrix rho = DensityMatrix::counterexample(400);
  const std::vector<double> axis = {-1.0, 0.0, 1.0};
  const PhaseSpaceGrid g = wigner_of_density(rho, axis, axis);
  // truncated telescoping sum at the origin: (1 - 1/(M+2)) / pi
  CHECK(g.values.at(1, 1).real() ==
        doctest::Approx((1.0 - 1.0 / 402.0) / M_PI).epsilon(1e-12));
  // off-origin value against the closed form, within the truncation tail
  const double closed = counterexample_wigner_closed_form(1.0, 0.0);
  CHECK(std::abs(g.values.at(2, 1).real() - closed) <=
        counterexample_series_gap(400, std::vector<double>{1.0}) + 1e-12);
}

TEST_CASE("pure-state matrix norm factorizes into the squared sequence norm") {
  std::mt19937 rng(53);
  const auto w = WeightFunction::power(0.4, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const CoefficientSequence a = random_unit(rng, 20);
    const double mn = matrix_norm(DensityMatrix::pure(a), w).value;
    const double sn = sequence_norm(a, w).value;
    CHECK(mn == doctest::Approx(sn * sn).epsilon(1e-12));
  }
}

TEST_CASE("hermitian eigenvalue kernel against analytic spectra") {
  SUBCASE("2x2 complex Hermitian") {
    CMatrix m(2, 2);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = 3.0;
    m.at(0, 1) = cplx(0.0, -2.0);
    m.at(1, 0) = cplx(0.0, 2.0);
    // eigenvalues 2 +- sqrt(5)
    const std::vector<double> eigs = hermitian_eigenvalues(m);
    CHECK(eigs[0] == doctest::Approx(2.0 - std::sqrt(5.0)).epsilon(1e-12));
    CHECK(eigs[1] == doctest::Approx(2.0 + std::sqrt(5.0)).epsilon(1e-12));
  }
  SUBCASE("random Hermitian: spectrum sums to the trace") {
    std::mt19937 rng(59);
    std::normal_distribution<double> gauss;
    const int N = 24;
    CMatrix m(N, N);
    for (int i = 0; i < N; ++i) {
      m.at(i, i) = gauss(rng);
      for (int j = i + 1; j < N; ++j) {
        m.at(i, j) = cplx(gauss(rng), gauss(rng));
        m.at(j, i) = std::conj(m.at(i, j));
      }
    }
    double tr = 0.0;
    for (int i = 0; i < N; ++i) tr += m.at(i, i).real();
    const std::vector<double> eigs = hermitian_eigenvalues(m);
    double sum = 0.0;
    for (double e : eigs) sum += e;
    CHECK(sum == doctest::Approx(tr).epsilon(1e-10));
  }
  SUBCASE("complex Hermitian circulant at the validation scale") {
    // C_{jk} = c_{(k-j) mod N} with c Hermitian-symmetric has the real
    // spectrum lambda_j = sum_m c_m e^{2 pi i j m / N}; at N = 512 this
    // pins the solver at the scale the validation contract names
    const int N = 512;
    std::vector<cplx> c(N, cplx(0, 0));
    c[0] = 1.0;
    c[1] = cplx(0.3, 0.1);
    c[N - 1] = std::conj(c[1]);
    c[7] = cplx(-0.05, 0.2);
    c[N - 7] = std::conj(c[7]);
    CMatrix m(N, N);
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) m.at(j, k) = c[((k - j) % N + N) % N];
    std::vector<double> want(N);
    for (int j = 0; j < N; ++j) {
      cplx acc(0, 0);
      for (int mm = 0; mm < N; ++mm)
        acc += c[mm] * std::polar(1.0, 2.0 * M_PI * j * mm / N);
      want[j] = acc.real();
    }
    std::sort(want.begin(), want.end());
    const std::vector<double> got = hermitian_eigenvalues(m);
    for (int j = 0; j < N; ++j) CHECK(std::abs(got[j] - want[j]) <= 1e-10);
  }
}
