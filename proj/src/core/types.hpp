/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fockwig {

using cplx = std::complex<double>;

enum class Verdict { pass, fail, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "inconclusive";
  }
}

/// Weighted grid supremum together with where it was attained.
///
/// `diverging` is set when the supremum sits in the outermost 5% of the
/// sampled range; on a finite grid that is the strongest available signal
/// that the true supremum is infinite.
struct SupNorm {
  double value = 0.0;
  bool diverging = false;
  double attained_at = 0.0;  // |x|, index, or max(m,n) depending on context

  bool finite() const { return std::isfinite(value) && !diverging; }
};

/// A function known through samples on a fixed grid.
struct SampledFunction {
  std::vector<double> xs;
  std::vector<cplx> values;
};

/// Dense row-major complex matrix, sized (rows x cols).
struct CMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<cplx> a;

  CMatrix() = default;
  CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, cplx(0.0, 0.0)) {}
  cplx& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

}  // namespace fockwig
