#include "lgbell/modes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lgbell {

namespace {

using std::numbers::pi;

// sqrt(min! min! / (pi n! m!)): the LG prefactor once Jacobian of the
// scaled coordinates is absorbed.
double lg_norm(ModeIndex mode) {
  const int p = std::min(mode.n, mode.m);
  const double log_norm =
      ln_factorial(p) - 0.5 * (ln_factorial(mode.n) + ln_factorial(mode.m)) - 0.5 * std::log(pi);
  return std::exp(log_norm);
}

// (X + iY)^l for l >= 0, (X - iY)^|l| for l < 0, i.e. R^|l| e^{i l theta}.
complex vortex_power(int l, double x, double y, int power) {
  const complex z = l >= 0 ? complex(x, y) : complex(x, -y);
  complex result = 1.0;
  for (int k = 0; k < power; ++k) result *= z;
  return result;
}

}  // namespace

void validate(ModeIndex mode) {
  if (mode.n < 0 || mode.m < 0 || mode.order() > kMaxDegree) {
    throw std::invalid_argument("invalid mode (" + std::to_string(mode.n) + ", " +
                                std::to_string(mode.m) + "): need n, m >= 0 and n + m <= " +
                                std::to_string(kMaxDegree));
  }
}

void validate(const ScaleParams& scale) {
  if (!(scale.w > 0.0) || !(scale.lambdabar > 0.0) || !std::isfinite(scale.w) ||
      !std::isfinite(scale.lambdabar)) {
    throw std::invalid_argument("beam waist and reduced wavelength must be positive");
  }
}

PhasePlanePoint physical_to_scaled(PhasePlanePoint physical, const ScaleParams& scale) {
  validate(scale);
  return {std::numbers::sqrt2 * physical.q / scale.w,
          scale.w * physical.p / (std::numbers::sqrt2 * scale.lambdabar)};
}

PhasePlanePoint scaled_to_physical(PhasePlanePoint scaled, const ScaleParams& scale) {
  validate(scale);
  return {scale.w * scaled.q / std::numbers::sqrt2,
          std::numbers::sqrt2 * scale.lambdabar * scaled.p / scale.w};
}

complex lg_amplitude(ModeIndex mode, double x, double y) {
  return lg_jet(mode, x, y).value;
}

FieldJet lg_jet(ModeIndex mode, double x, double y, bool with_envelope) {
  validate(mode);
  const int l = mode.orbital_angular_momentum();
  const int abs_l = std::abs(l);
  const int p = std::min(mode.n, mode.m);
  const double r2 = x * x + y * y;

  const double sign = (p % 2 == 0) ? 1.0 : -1.0;
  const double prefactor = sign * lg_norm(mode);
  const double envelope = with_envelope ? std::exp(-0.5 * r2) : 1.0;

  const double lag = laguerre(p, abs_l, r2);
  const double lag_prime = p > 0 ? -laguerre(p - 1, abs_l + 1, r2) : 0.0;

  const complex z_pow = vortex_power(l, x, y, abs_l);
  const complex z_pow_lower = abs_l > 0 ? vortex_power(l, x, y, abs_l - 1) : complex(0.0);
  // d/dX z = 1, d/dY z = +i for z = X + iY and -i for z = X - iY.
  const complex dz_dy = l >= 0 ? complex(0.0, 1.0) : complex(0.0, -1.0);

  FieldJet jet;
  jet.value = prefactor * envelope * z_pow * lag;
  jet.d_x = prefactor * envelope *
            (static_cast<double>(abs_l) * z_pow_lower * lag + z_pow * (2.0 * x * lag_prime - x * lag));
  jet.d_y = prefactor * envelope *
            (static_cast<double>(abs_l) * dz_dy * z_pow_lower * lag +
             z_pow * (2.0 * y * lag_prime - y * lag));
  return jet;
}

double hg_amplitude(ModeIndex mode, double x, double y) {
  validate(mode);
  return hermite_function(mode.n, x) * hermite_function(mode.m, y);
}

std::vector<SchmidtTerm> schmidt_coefficients(ModeIndex mode) {
  validate(mode);
  const int total = mode.order();
  const double log_base =
      -0.5 * (ln_factorial(mode.n) + ln_factorial(mode.m) + total * std::log(2.0));

  // (-i)^k cycles through 1, -i, -1, i.
  static constexpr complex kPhase[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};

  std::vector<SchmidtTerm> terms;
  terms.reserve(static_cast<std::size_t>(total) + 1);
  for (int k = 0; k <= total; ++k) {
    // [t^k] (1 - t)^n (1 + t)^m = f_k / k!
    double poly_coeff = 0.0;
    for (int j = std::max(0, k - mode.m); j <= std::min(k, mode.n); ++j) {
      const double term = binomial(mode.n, j) * binomial(mode.m, k - j);
      poly_coeff += (j % 2 == 0) ? term : -term;
    }
    const double scale =
        std::exp(log_base + 0.5 * (ln_factorial(k) + ln_factorial(total - k)));
    terms.push_back({ModeIndex{total - k, k}, kPhase[k % 4] * (poly_coeff * scale)});
  }
  return terms;
}

complex reconstruct_from_schmidt(const std::vector<SchmidtTerm>& terms, double x, double y) {
  complex sum = 0.0;
  for (const auto& term : terms) {
    sum += term.coefficient * hg_amplitude(term.hg_index, x, y);
  }
  return sum;
}

complex reconstruct_from_schmidt(ModeIndex mode, double x, double y) {
  return reconstruct_from_schmidt(schmidt_coefficients(mode), x, y);
}

}  // namespace lgbell
