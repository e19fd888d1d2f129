/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "errors.hpp"

namespace fockwig {

namespace {

double simpson_segment(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double fa, double b,
                   double fb, double m, double fm, double whole, double rel_tol,
                   double abs_tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson_segment(a, fa, m, fm, flm);
  const double right = simpson_segment(m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * std::max(abs_tol, rel_tol * std::abs(left + right)))
    return left + right + delta / 15.0;
  if (depth <= 0)
    throw NumericError("adaptive_simpson: recursion depth exhausted before tolerance");
  return simpson_rec(f, a, fa, m, fm, lm, flm, left, rel_tol, abs_tol / 2.0, depth - 1) +
         simpson_rec(f, m, fm, b, fb, rm, frm, right, rel_tol, abs_tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = simpson_segment(a, fa, b, fb, fm);
  return simpson_rec(f, a, fa, b, fb, m, fm, whole, rel_tol, abs_tol, max_depth);
}

double trapezoid(std::span<const double> xs, std::span<const double> ys) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    acc += 0.5 * (xs[i + 1] - xs[i]) * (ys[i] + ys[i + 1]);
  return acc;
}

cplx trapezoid(std::span<const double> xs, std::span<const cplx> ys) {
  cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    acc += 0.5 * (xs[i + 1] - xs[i]) * (ys[i] + ys[i + 1]);
  return acc;
}

cplx refining_trapezoid(const std::function<cplx(double)>& f, double a, double b, double tol,
                        int max_halvings) {
  std::size_t n = 64;
  auto eval = [&](std::size_t pts) {
    const double h = (b - a) / static_cast<double>(pts);
    cplx acc = 0.5 * (f(a) + f(b));
    for (std::size_t i = 1; i < pts; ++i) acc += f(a + h * static_cast<double>(i));
    return acc * h;
  };
  cplx prev = eval(n);
  for (int k = 0; k < max_halvings; ++k) {
    n *= 2;
    const cplx cur = eval(n);
    if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw NumericError("refining_trapezoid: tolerance not met after max halvings");
}

cplx fourier_point(std::span<const double> xs, std::span<const cplx> fvals, double xi) {
  const std::size_t n = xs.size();
  cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    acc += w * fvals[i] * std::polar(1.0, -xi * xs[i]);
  }
  const double dx = n > 1 ? (xs.back() - xs.front()) / static_cast<double>(n - 1) : 0.0;
  return acc * dx / std::sqrt(2.0 * M_PI);
}

CMatrix fourier2d(std::span<const double> q_axis, std::span<const double> p_axis,
                  const CMatrix& values, std::span<const double> theta_axis,
                  std::span<const double> varpi_axis) {
  if (values.rows != q_axis.size() || values.cols != p_axis.size())
    throw ArgumentError("fourier2d: grid dimensions do not match axes");
  const std::size_t nq = q_axis.size(), np = p_axis.size();
  const std::size_t nt = theta_axis.size(), nv = varpi_axis.size();
  const double dq = nq > 1 ? (q_axis.back() - q_axis.front()) / static_cast<double>(nq - 1) : 0.0;
  const double dp = np > 1 ? (p_axis.back() - p_axis.front()) / static_cast<double>(np - 1) : 0.0;

  // pass 1: transform along q for every p-column
  CMatrix half(nt, np);
  for (std::size_t it = 0; it < nt; ++it) {
    std::vector<cplx> ph(nq);
    for (std::size_t i = 0; i < nq; ++i) {
      const double w = (i == 0 || i + 1 == nq) ? 0.5 : 1.0;
      ph[i] = w * std::polar(1.0, -theta_axis[it] * q_axis[i]);
    }
    for (std::size_t j = 0; j < np; ++j) {
      cplx acc(0.0, 0.0);
      for (std::size_t i = 0; i < nq; ++i) acc += ph[i] * values.at(i, j);
      half.at(it, j) = acc * dq;
    }
  }
  // pass 2: transform along p
  CMatrix out(nt, nv);
  for (std::size_t jv = 0; jv < nv; ++jv) {
    std::vector<cplx> ph(np);
    for (std::size_t j = 0; j < np; ++j) {
      const double w = (j == 0 || j + 1 == np) ? 0.5 : 1.0;
      ph[j] = w * std::polar(1.0, -varpi_axis[jv] * p_axis[j]);
    }
    for (std::size_t it = 0; it < nt; ++it) {
      cplx acc(0.0, 0.0);
      for (std::size_t j = 0; j < np; ++j) acc += ph[j] * half.at(it, j);
      out.at(it, jv) = acc * dp / (2.0 * M_PI);
    }
  }
  return out;
}

LineFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw ArgumentError("fit_line: need at least two matching points");
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double det = n * sxx - sx * sx;
  if (det == 0.0) throw ArgumentError("fit_line: degenerate abscissae");
  LineFit fit;
  fit.slope = (n * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / n;
  for (std::size_t i = 0; i < xs.size(); ++i)
    fit.max_residual =
        std::max(fit.max_residual, std::abs(ys[i] - fit.slope * xs[i] - fit.intercept));
  return fit;
}

std::pair<double, double> golden_max(const std::function<double(double)>& f, double lo,
                                     double hi, double tol) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
  if (step <= 0.0) throw ArgumentError("uniform_grid: step must be positive");
  if (hi < lo) throw ArgumentError("uniform_grid: hi < lo");
  std::vector<double> out;
  const std::size_t n = static_cast<std::size_t>(std::floor((hi - lo) / step + 0.5)) + 1;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(lo + step * static_cast<double>(i));
  return out;
}

std::vector<double> geometric_grid(double lo, double hi, int per_decade) {
  if (lo <= 0.0 || hi <= lo || per_decade < 1)
    throw ArgumentError("geometric_grid: need 0 < lo < hi and per_decade >= 1");
  std::vector<double> out;
  const double l0 = std::log10(lo), l1 = std::log10(hi);
  const int n = static_cast<int>(std::ceil((l1 - l0) * per_decade)) + 1;
  for (int i = 0; i < n; ++i)
    out.push_back(std::pow(10.0, l0 + (l1 - l0) * static_cast<double>(i) / (n - 1)));
  return out;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int threads) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : hw;
  workers = std::min<unsigned>(workers, hw);
  if (n == 0) return;
  if (workers <= 1 || n < 2 * workers) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fockwig
