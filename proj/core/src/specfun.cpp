#include "lgbell/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lgbell {

namespace {

void check_degree(int n, const char* what) {
  if (n < 0 || n > kMaxDegree) {
    throw std::invalid_argument(std::string(what) + " degree " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxDegree) + "]");
  }
}

void check_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(what) + ": non-finite argument");
  }
}

constexpr int kTableSize = 256;

std::array<double, kTableSize + 1> make_ln_factorial_table() {
  std::array<double, kTableSize + 1> table{};
  table[0] = 0.0;
  for (int k = 1; k <= kTableSize; ++k) {
    table[k] = table[k - 1] + std::log(static_cast<double>(k));
  }
  return table;
}

}  // namespace

double laguerre(int p, int alpha, double x) {
  check_degree(p, "laguerre");
  check_degree(alpha, "laguerre alpha");
  check_finite(x, "laguerre");

  if (p == 0) return 1.0;
  const double a = alpha;
  double prev = 1.0;
  double curr = 1.0 + a - x;
  for (int k = 2; k <= p; ++k) {
    const double next = ((2.0 * k - 1.0 + a - x) * curr - (k - 1.0 + a) * prev) / k;
    prev = curr;
    curr = next;
  }
  return curr;
}

double hermite(int n, double x) {
  check_degree(n, "hermite");
  check_finite(x, "hermite");

  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 2.0 * x;
  for (int k = 2; k <= n; ++k) {
    const double next = 2.0 * x * curr - 2.0 * (k - 1.0) * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double hermite_function(int n, double x) {
  check_degree(n, "hermite_function");
  check_finite(x, "hermite_function");

  // pi^{-1/4}
  constexpr double kPiQuarter = 0.75112554446494248286;
  double prev = 0.0;
  double curr = kPiQuarter * std::exp(-0.5 * x * x);
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1.0)) * x * curr - std::sqrt(k / (k + 1.0)) * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double ln_factorial(int n) {
  if (n < 0 || n > kMaxLnFactorialArg) {
    throw std::invalid_argument("ln_factorial argument " + std::to_string(n) + " out of range");
  }
  static const auto table = make_ln_factorial_table();
  if (n <= kTableSize) return table[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double result = 1.0;
  for (int j = 1; j <= k; ++j) {
    result = result * (n - k + j) / j;
  }
  return std::round(result);
}

SignedLog to_signed_log(double value) {
  if (value == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
  return {std::log(std::abs(value)), value < 0.0 ? -1 : 1};
}

}  // namespace lgbell
