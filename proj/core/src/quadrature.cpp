#include "lgbell/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "lgbell/wigner.hpp"

namespace lgbell {

namespace {

// Number of eigenvalues below x of the Hermite Jacobi matrix (zero
// diagonal, off-diagonal sqrt(j/2)), by the Sturm sequence.
int hermite_eigen_count_below(int n, double x) {
  int count = 0;
  double q = -x;
  if (q < 0.0) ++count;
  for (int j = 1; j < n; ++j) {
    if (q == 0.0) q = 1e-300;
    q = -x - (0.5 * j) / q;
    if (q < 0.0) ++count;
  }
  return count;
}

GaussRule hermite_rule(int order) {
  // Roots are bracketed by Sturm bisection on the Jacobi matrix, then
  // polished with Newton on the orthonormal Hermite recurrence, which
  // also supplies the weights.
  constexpr double kPiQuarterInv = 0.75112554446494248286;
  constexpr int kMaxNewton = 100;
  const int n = order;
  GaussRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);

  const double bound = std::sqrt(2.0 * n + 2.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // i-th largest root: exactly n - 1 - i eigenvalues lie below it.
    double lo = 0.0;
    double hi = bound;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      if (hermite_eigen_count_below(n, mid) > n - 1 - i) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    double z = 0.5 * (lo + hi);
    double derivative = 0.0;
    for (int it = 0; it < kMaxNewton; ++it) {
      double p1 = kPiQuarterInv;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
      }
      derivative = std::sqrt(2.0 * n) * p2;
      const double step = p1 / derivative;
      z -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    if (n % 2 == 1 && i == half - 1) z = 0.0;
    rule.nodes[i] = z;
    rule.nodes[n - 1 - i] = -z;
    rule.weights[i] = 2.0 / (derivative * derivative);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  std::reverse(rule.nodes.begin(), rule.nodes.end());
  std::reverse(rule.weights.begin(), rule.weights.end());
  return rule;
}

GaussRule legendre_rule(int order, double half_width) {
  constexpr int kMaxNewton = 100;
  const int n = order;
  GaussRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int it = 0; it < kMaxNewton; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      derivative = n * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / derivative;
      z -= step;
      if (std::abs(step) <= 1e-16) break;
    }
    if (n % 2 == 1 && i == half - 1) z = 0.0;
    const double w = 2.0 / ((1.0 - z * z) * derivative * derivative);
    rule.nodes[i] = -z * half_width;
    rule.nodes[n - 1 - i] = z * half_width;
    rule.weights[i] = w * half_width;
    rule.weights[n - 1 - i] = w * half_width;
  }
  return rule;
}

double pairwise(std::span<const double> terms) {
  if (terms.size() <= 8) {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  }
  const std::size_t mid = terms.size() / 2;
  return pairwise(terms.first(mid)) + pairwise(terms.subspan(mid));
}

// Order of the comparison integral for the doubling check.
int check_order(int order) {
  return 2 * order <= kMaxQuadratureOrder ? 2 * order : order / 2;
}

constexpr int kMomentCount = 10;
constexpr int kMeanCount = 4;

struct FieldIntegrals {
  std::array<double, kMomentCount> moments{};
  std::array<double, kMeanCount> means{};
};

MomentTable to_table(const std::array<double, kMomentCount>& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
}

FieldIntegrals integrate_field(ModeIndex mode, int order) {
  const GaussRule rule = gauss_nodes(QuadratureRule::gauss_hermite, order);
  const std::size_t count = rule.nodes.size() * rule.nodes.size();
  std::array<std::vector<double>, kMomentCount + kMeanCount> terms;
  for (auto& t : terms) t.reserve(count);

  const complex minus_i(0.0, -1.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double y = rule.nodes[j];
      const double w = rule.weights[i] * rule.weights[j];
      const FieldJet jet = lg_jet(mode, x, y, /*with_envelope=*/false);
      const double density = std::norm(jet.value);
      const complex px_phi = minus_i * jet.d_x;
      const complex py_phi = minus_i * jet.d_y;
      const complex conj_phi = std::conj(jet.value);

      terms[0].push_back(w * density * x * x);
      terms[1].push_back(w * density * y * y);
      terms[2].push_back(w * std::norm(jet.d_x));
      terms[3].push_back(w * std::norm(jet.d_y));
      terms[4].push_back(w * density * x * y);
      terms[5].push_back(w * std::real(std::conj(px_phi) * py_phi));
      terms[6].push_back(w * std::real(conj_phi * x * py_phi));
      terms[7].push_back(w * std::real(conj_phi * y * px_phi));
      terms[8].push_back(w * std::real(conj_phi * x * px_phi));
      terms[9].push_back(w * std::real(conj_phi * y * py_phi));

      terms[10].push_back(w * density * x);
      terms[11].push_back(w * density * y);
      terms[12].push_back(w * std::real(conj_phi * px_phi));
      terms[13].push_back(w * std::real(conj_phi * py_phi));
    }
  }

  FieldIntegrals out;
  for (int k = 0; k < kMomentCount; ++k) out.moments[k] = stable_sum(terms[k]);
  for (int k = 0; k < kMeanCount; ++k) out.means[k] = stable_sum(terms[kMomentCount + k]);
  return out;
}

void check_field_config(ModeIndex mode, const QuadratureConfig& config) {
  validate(mode);
  validate(config);
  if (config.rule != QuadratureRule::gauss_hermite) {
    throw std::invalid_argument("beam moments need a gauss_hermite rule");
  }
  if (config.order < min_moment_order(mode)) {
    throw std::invalid_argument("quadrature order " + std::to_string(config.order) +
                                " below the minimum " + std::to_string(min_moment_order(mode)) +
                                " for this mode");
  }
}

FieldIntegrals checked_field_integrals(ModeIndex mode, const QuadratureConfig& config) {
  check_field_config(mode, config);
  constexpr double kStabilityTol = 1e-8;
  const FieldIntegrals main = integrate_field(mode, config.order);
  const FieldIntegrals check = integrate_field(mode, check_order(config.order));
  double worst = 0.0;
  for (int k = 0; k < kMomentCount; ++k) {
    worst = std::max(worst, std::abs(main.moments[k] - check.moments[k]));
  }
  for (int k = 0; k < kMeanCount; ++k) {
    worst = std::max(worst, std::abs(main.means[k] - check.means[k]));
  }
  if (!(worst < kStabilityTol)) {
    throw QuadratureError("moment integrals not resolved at order " +
                          std::to_string(config.order) + " (doubling change " +
                          std::to_string(worst) + ")");
  }
  return main;
}

}  // namespace

void validate(const QuadratureConfig& config) {
  if (config.order < kMinQuadratureOrder || config.order > kMaxQuadratureOrder) {
    throw std::invalid_argument("quadrature order " + std::to_string(config.order) +
                                " outside [8, 256]");
  }
  if (!(config.half_width > 0.0) || !std::isfinite(config.half_width)) {
    throw std::invalid_argument("quadrature half_width must be positive");
  }
}

GaussRule gauss_nodes(QuadratureRule rule, int order, double half_width) {
  if (order < 1 || order > kMaxQuadratureOrder) {
    throw std::invalid_argument("unsupported quadrature order " + std::to_string(order));
  }
  if (rule == QuadratureRule::gauss_hermite) return hermite_rule(order);
  if (!(half_width > 0.0)) throw std::invalid_argument("half_width must be positive");
  return legendre_rule(order, half_width);
}

GaussRule gauss_nodes(const QuadratureConfig& config) {
  validate(config);
  return gauss_nodes(config.rule, config.order, config.half_width);
}

double stable_sum(std::span<double> terms) {
  std::sort(terms.begin(), terms.end(),
            [](double a, double b) { return std::abs(a) < std::abs(b); });
  return pairwise(terms);
}

int min_moment_order(ModeIndex mode) {
  return std::max(kMinQuadratureOrder, 2 * mode.order() + 16);
}

QuadratureConfig default_moment_quadrature(ModeIndex mode) {
  return {min_moment_order(mode), 8.0, QuadratureRule::gauss_hermite};
}

MomentTable moments(ModeIndex mode, const QuadratureConfig& config) {
  return to_table(checked_field_integrals(mode, config).moments);
}

double expectation_mean(ModeIndex mode, Quadrature1D which, const QuadratureConfig& config) {
  const FieldIntegrals integrals = checked_field_integrals(mode, config);
  return integrals.means[static_cast<int>(which)];
}

MomentTable wigner_moments(ModeIndex mode, const QuadratureConfig& config) {
  validate(mode);
  validate(config);
  if (config.rule != QuadratureRule::gauss_hermite) {
    throw std::invalid_argument("wigner moments need a gauss_hermite rule");
  }
  const GaussRule rule = gauss_nodes(config);
  const std::size_t n = rule.nodes.size();
  std::array<std::vector<double>, kMomentCount> terms;
  for (auto& t : terms) t.reserve(n * n * n * n);

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          const PhasePoint pt{rule.nodes[a], rule.nodes[b], rule.nodes[c], rule.nodes[d]};
          const double w = rule.weights[a] * rule.weights[b] * rule.weights[c] *
                           rule.weights[d] * wigner_lg_polynomial(mode, pt);
          terms[0].push_back(w * pt.x * pt.x);
          terms[1].push_back(w * pt.y * pt.y);
          terms[2].push_back(w * pt.px * pt.px);
          terms[3].push_back(w * pt.py * pt.py);
          terms[4].push_back(w * pt.x * pt.y);
          terms[5].push_back(w * pt.px * pt.py);
          terms[6].push_back(w * pt.x * pt.py);
          terms[7].push_back(w * pt.y * pt.px);
          terms[8].push_back(w * pt.x * pt.px);
          terms[9].push_back(w * pt.y * pt.py);
        }
      }
    }
  }
  std::array<double, kMomentCount> values{};
  for (int k = 0; k < kMomentCount; ++k) values[k] = stable_sum(terms[k]);
  return to_table(values);
}

}  // namespace lgbell
