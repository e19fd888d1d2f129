/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "eigen.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace fockwig {

namespace {

// Householder reduction of a dense symmetric matrix (row-major, n x n) to
// tridiagonal form; eigenvalues only, so transforms are not accumulated.
void tred_values(std::vector<double>& a, std::size_t n, std::vector<double>& d,
                 std::vector<double>& e) {
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  auto A = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (std::size_t i = n - 1; i >= 1; --i) {
    const std::size_t l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (std::size_t k = 0; k <= l; ++k) scale += std::abs(A(i, k));
      if (scale == 0.0) {
        e[i] = A(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          A(i, k) /= scale;
          h += A(i, k) * A(i, k);
        }
        double f = A(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        A(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
          e[j] = g / h;
          f += e[j] * A(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = A(i, j);
          e[j] = g = e[j] - hh * f;
          for (std::size_t k = 0; k <= j; ++k) A(j, k) -= f * e[k] + g * A(i, k);
        }
      }
    } else {
      e[i] = A(i, l);
    }
    d[i] = h;
  }
  e[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) d[i] = A(i, i);
}

// Implicit QL with shifts on a tridiagonal (d, e); e[0] unused.
void tqli_values(std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = d.size();
  if (n == 0) return;
  // shift the off-diagonal so that e[i] couples d[i] and d[i+1]
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw NumericError("tridiagonal QL: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (i == l) {
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
          }
        }
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag,
                                            std::vector<double> offdiag) {
  if (diag.empty()) return {};
  if (offdiag.size() + 1 != diag.size())
    throw ArgumentError("tridiagonal_eigenvalues: offdiag must have size n-1");
  // repack into the (d, e) layout used by the QL sweep: e[i] couples i-1, i
  std::vector<double> e(diag.size(), 0.0);
  for (std::size_t i = 1; i < diag.size(); ++i) e[i] = offdiag[i - 1];
  tqli_values(diag, e);
  return diag;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  if (m.rows != m.cols) throw ArgumentError("hermitian_eigenvalues: matrix must be square");
  const std::size_t n = m.rows;
  if (n == 0) return {};

  bool complexish = false;
  for (const auto& z : m.a)
    if (std::abs(z.imag()) > 0.0) {
      complexish = true;
      break;
    }

  std::vector<double> d, e;
  if (!complexish) {
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j).real();
    if (n == 1) return {a[0]};
    tred_values(a, n, d, e);
    tqli_values(d, e);
    return d;
  }

  const std::size_t N = 2 * n;
  std::vector<double> a(N * N, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double x = m.at(i, j).real(), y = m.at(i, j).imag();
      a[i * N + j] = x;
      a[(i + n) * N + (j + n)] = x;
      a[(i + n) * N + j] = y;
      a[i * N + (j + n)] = -y;
    }
  tred_values(a, N, d, e);
  tqli_values(d, e);
  // spectrum is doubled; keep one copy of each pair
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < N; i += 2) out.push_back(0.5 * (d[i] + d[i + 1]));
  return out;
}

}  // namespace fockwig
