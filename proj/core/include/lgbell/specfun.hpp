#pragma once

// Special functions behind the LG/HG field amplitudes and their Wigner
// functions. Everything here is evaluated by forward recurrence; no
// factorial series, so degrees up to kMaxDegree stay well conditioned.

namespace lgbell {

inline constexpr int kMaxDegree = 64;

/// Degree and associated index of a generalized Laguerre polynomial.
struct PolynomialOrder {
  int p = 0;
  int alpha = 0;
};

/// Generalized Laguerre polynomial L_p^alpha(x).
///
/// Throws std::invalid_argument for p or alpha out of [0, kMaxDegree] and
/// std::domain_error for non-finite x.
double laguerre(int p, int alpha, double x);
inline double laguerre(PolynomialOrder order, double x) {
  return laguerre(order.p, order.alpha, x);
}

/// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x);

/// Normalized Hermite function psi_n(x) = (2^n n! sqrt(pi))^{-1/2} H_n(x) e^{-x^2/2},
/// computed with the orthonormal recurrence so it never overflows.
double hermite_function(int n, double x);

inline constexpr int kMaxLnFactorialArg = 1'000'000;

/// ln(n!) for 0 <= n <= 10^6.
double ln_factorial(int n);

/// Binomial coefficient C(n, k) as a double; 0 when k is outside [0, n].
double binomial(int n, int k);

/// Sign and log-magnitude of a real number, used when a product of a large
/// polynomial and a tiny exponential has to be formed without overflow.
struct SignedLog {
  double log_abs = 0.0;  // -inf for zero
  int sign = 1;          // 0 for zero
};

SignedLog to_signed_log(double value);

}  // namespace lgbell
