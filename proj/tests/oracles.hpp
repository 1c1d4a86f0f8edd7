#pragma once

// Test-only reference implementations. None of these share code with the
// library: series instead of recurrences, physical polar coordinates
// instead of scaled Cartesian ones, finite differences and trapezoid sums
// instead of analytic derivatives and Gauss rules.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "lgbell/quadrature.hpp"

namespace lgbell::oracle {

inline long double factorial(int n) { return std::tgamma(static_cast<long double>(n) + 1.0L); }

inline long double choose(int n, int k) {
  if (k < 0 || k > n) return 0.0L;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

/// L_p^alpha(x) = sum_k C(p+alpha, p-k) (-x)^k / k!
inline double laguerre_series(int p, int alpha, double x) {
  long double sum = 0.0L;
  for (int k = 0; k <= p; ++k) {
    sum += choose(p + alpha, p - k) * std::pow(-static_cast<long double>(x), k) / factorial(k);
  }
  return static_cast<double>(sum);
}

/// H_n(x) = n! sum_k (-1)^k (2x)^{n-2k} / (k! (n-2k)!)
inline double hermite_series(int n, double x) {
  long double sum = 0.0L;
  for (int k = 0; 2 * k <= n; ++k) {
    const long double term = std::pow(2.0L * x, n - 2 * k) / (factorial(k) * factorial(n - 2 * k));
    sum += (k % 2 == 0) ? term : -term;
  }
  return static_cast<double>(factorial(n) * sum);
}

/// LG amplitude evaluated in physical polar form with beam waist w, then
/// rescaled by the Jacobian w/sqrt(2) so it is normalized in (X, Y).
/// Series coefficients are computed once per mode.
class LgPolar {
 public:
  LgPolar(int n, int m, double w = 1.7) : w_(w), l_(n - m), p_(std::min(n, m)) {
    const double sign = (p_ % 2 == 0) ? 1.0 : -1.0;
    prefactor_ = sign *
                 std::sqrt(2.0 / (std::numbers::pi * static_cast<double>(factorial(n)) *
                                  static_cast<double>(factorial(m)) * w * w)) *
                 static_cast<double>(factorial(p_)) * (w / std::numbers::sqrt2);
    const int a = std::abs(l_);
    for (int k = 0; k <= p_; ++k) {
      coeffs_.push_back(static_cast<double>(choose(p_ + a, p_ - k) / factorial(k)) *
                        ((k % 2 == 0) ? 1.0 : -1.0));
    }
  }

  std::complex<double> operator()(double x_scaled, double y_scaled) const {
    const double x = w_ * x_scaled / std::numbers::sqrt2;
    const double y = w_ * y_scaled / std::numbers::sqrt2;
    const double rho = std::hypot(x, y);
    const double theta = std::atan2(y, x);
    const double u = 2.0 * rho * rho / (w_ * w_);
    double series = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) series = series * u + coeffs_[k];
    const double radial = prefactor_ * std::exp(-rho * rho / (w_ * w_)) *
                          std::pow(rho * std::numbers::sqrt2 / w_, std::abs(l_)) * series;
    return std::polar(radial, l_ * theta);
  }

 private:
  double w_;
  int l_;
  int p_;
  double prefactor_ = 0.0;
  std::vector<double> coeffs_;
};

inline std::complex<double> lg_polar(int n, int m, double x_scaled, double y_scaled,
                                     double w = 1.7) {
  return LgPolar(n, m, w)(x_scaled, y_scaled);
}

/// Moments by trapezoid sums over [-L, L]^2 with central differences for
/// the momentum operators, all on lg_polar.
inline MomentTable brute_force_moments(int n, int m, double half_width = 9.0, int cells = 360) {
  const double h = 2.0 * half_width / cells;
  const double d = 1e-5;
  const std::complex<double> minus_i(0.0, -1.0);
  const LgPolar lg(n, m);
  MomentTable t;
  for (int i = 0; i <= cells; ++i) {
    const double x = -half_width + i * h;
    for (int j = 0; j <= cells; ++j) {
      const double y = -half_width + j * h;
      const auto phi = lg(x, y);
      const auto dx = (lg(x + d, y) - lg(x - d, y)) / (2.0 * d);
      const auto dy = (lg(x, y + d) - lg(x, y - d)) / (2.0 * d);
      const double rho = std::norm(phi);
      const auto px = minus_i * dx;
      const auto py = minus_i * dy;
      t.xx += rho * x * x;
      t.yy += rho * y * y;
      t.pxpx += std::norm(dx);
      t.pypy += std::norm(dy);
      t.xy += rho * x * y;
      t.pxpy += std::real(std::conj(px) * py);
      t.xpy += std::real(std::conj(phi) * x * py);
      t.ypx += std::real(std::conj(phi) * y * px);
      t.xpx_sym += std::real(std::conj(phi) * x * px);
      t.ypy_sym += std::real(std::conj(phi) * y * py);
    }
  }
  const double a = h * h;
  for (double* v : {&t.xx, &t.yy, &t.pxpx, &t.pypy, &t.xy, &t.pxpy, &t.xpy, &t.ypx, &t.xpx_sym,
                    &t.ypy_sym}) {
    *v *= a;
  }
  return t;
}

}  // namespace lgbell::oracle
