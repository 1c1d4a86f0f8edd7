#include "lgbell/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lgbell {

namespace {

constexpr double kInvPi2 = 1.0 / (std::numbers::pi * std::numbers::pi);
constexpr double kLogDomainThreshold = 60.0;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double parity_sign(ModeIndex mode) { return mode.order() % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

WignerArgs wigner_args(const PhasePoint& p) {
  return {0.25 * (p.x * p.x + p.y * p.y + p.px * p.px + p.py * p.py),
          0.5 * (p.x * p.py - p.y * p.px)};
}

double wigner_lg_polynomial(ModeIndex mode, const PhasePoint& point) {
  validate(mode);
  const WignerArgs args = wigner_args(point);
  return parity_sign(mode) * kInvPi2 * laguerre(mode.n, 0, 4.0 * (args.q0 + args.q2)) *
         laguerre(mode.m, 0, 4.0 * (args.q0 - args.q2));
}

double wigner_lg(ModeIndex mode, const PhasePoint& point) {
  validate(mode);
  const WignerArgs args = wigner_args(point);
  const double u = 4.0 * (args.q0 + args.q2);
  const double v = 4.0 * (args.q0 - args.q2);
  const double ln = laguerre(mode.n, 0, u);
  const double lm = laguerre(mode.m, 0, v);

  if (std::max(std::abs(u), std::abs(v)) <= kLogDomainThreshold) {
    return parity_sign(mode) * kInvPi2 * ln * lm * std::exp(-4.0 * args.q0);
  }
  const SignedLog a = to_signed_log(ln);
  const SignedLog b = to_signed_log(lm);
  const int sign = a.sign * b.sign * static_cast<int>(parity_sign(mode));
  if (sign == 0) return 0.0;
  return sign * kInvPi2 * std::exp(a.log_abs + b.log_abs - 4.0 * args.q0);
}

double wigner_transform(ModeIndex mode, const PhasePoint& point) {
  return std::numbers::pi * std::numbers::pi * wigner_lg(mode, point);
}

void validate(const EllipticalParams& params) {
  if (!std::isfinite(params.t) || std::abs(params.t) > kMaxEllipticalT) {
    throw std::invalid_argument("elliptical squeeze parameter |t| must be <= 5");
  }
  if (params.sign != 1 && params.sign != -1) {
    throw std::invalid_argument("elliptical sign must be +1 or -1");
  }
}

double elliptical_field(const EllipticalParams& params, double x, double y) {
  validate(params);
  const double c = std::cosh(2.0 * params.t);
  const double s = params.sign * std::sinh(2.0 * params.t);
  return std::exp(-0.5 * (x * x + y * y) * c + s * x * y) / std::sqrt(std::numbers::pi);
}

double wigner_elliptical(const EllipticalParams& params, const PhasePoint& p) {
  validate(params);
  const double c = std::cosh(2.0 * params.t);
  const double s = params.sign * std::sinh(2.0 * params.t);
  // det A = c^2 - s^2 = 1, so A^-1 = [[c, s], [s, c]].
  const double position = c * (p.x * p.x + p.y * p.y) - 2.0 * s * p.x * p.y;
  const double momentum = c * (p.px * p.px + p.py * p.py) + 2.0 * s * p.px * p.py;
  return kInvPi2 * std::exp(-position - momentum);
}

double elliptical_transform(const EllipticalParams& params, const PhasePoint& point) {
  return std::numbers::pi * std::numbers::pi * wigner_elliptical(params, point);
}

QuadratureConfig default_wigner_quadrature(ModeIndex mode) {
  validate(mode);
  const double half_width = 5.0 + std::sqrt(2.0 * mode.order() + 1.0);
  const int order = std::min(kMaxQuadratureOrder, 48 + 4 * mode.order());
  return {order, half_width, QuadratureRule::gauss_legendre};
}

QuadratureConfig default_wigner_quadrature(const EllipticalParams& params) {
  validate(params);
  const double stretch = std::exp(std::abs(params.t));
  const double half_width = 6.0 * stretch;
  const int order = std::min(kMaxQuadratureOrder, static_cast<int>(std::ceil(48.0 * stretch * stretch)));
  return {std::max(order, 48), half_width, QuadratureRule::gauss_legendre};
}

NumericWigner::NumericWigner(FieldFunction field, const QuadratureConfig& config)
    : field_(std::move(field)) {
  validate(config);
  if (config.rule != QuadratureRule::gauss_legendre) {
    throw std::invalid_argument("numeric Wigner engine needs a gauss_legendre rule");
  }
  rule_ = gauss_nodes(config);

  auto norm_with = [this](const GaussRule& rule) {
    std::vector<double> terms;
    terms.reserve(rule.nodes.size() * rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        terms.push_back(rule.weights[i] * rule.weights[j] *
                        std::norm(field_(rule.nodes[i], rule.nodes[j])));
      }
    }
    return stable_sum(terms);
  };

  const double norm = norm_with(rule_);
  const int check = 2 * config.order <= kMaxQuadratureOrder ? 2 * config.order : config.order / 2;
  const double reference =
      norm_with(gauss_nodes(QuadratureRule::gauss_legendre, check, config.half_width));

  double edge = 0.0;
  for (double s : rule_.nodes) {
    const double h = config.half_width;
    edge = std::max({edge, std::abs(field_(s, h)), std::abs(field_(s, -h)),
                     std::abs(field_(h, s)), std::abs(field_(-h, s))});
  }

  diagnostics_.field_norm = norm;
  diagnostics_.norm_change = std::abs(norm - reference);
  diagnostics_.edge_amplitude = edge;
  diagnostics_.resolved = diagnostics_.norm_change < 1e-8 && edge < 1e-6;

  if (!(std::abs(norm - 1.0) <= 1e-3)) {
    throw std::invalid_argument("field is not L2-normalized on the quadrature box (norm " +
                                std::to_string(norm) + ")");
  }
}

double NumericWigner::operator()(const PhasePoint& point) const {
  const std::size_t n = rule_.nodes.size();
  std::vector<double> terms;
  terms.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi_x = rule_.nodes[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double xi_y = rule_.nodes[j];
      const complex kernel = std::polar(1.0, 2.0 * (point.px * xi_x + point.py * xi_y));
      const complex product =
          std::conj(field_(point.x + xi_x, point.y + xi_y)) * field_(point.x - xi_x, point.y - xi_y);
      terms.push_back(rule_.weights[i] * rule_.weights[j] * std::real(kernel * product));
    }
  }
  return kInvPi2 * stable_sum(terms);
}

double wigner_numeric(const FieldFunction& field, const PhasePoint& point,
                      const QuadratureConfig& config) {
  const NumericWigner engine(field, config);
  if (!engine.diagnostics().resolved) {
    throw QuadratureError("numeric Wigner plan under-resolved (norm change " +
                          sci(engine.diagnostics().norm_change) + ", edge amplitude " +
                          sci(engine.diagnostics().edge_amplitude) + ")");
  }
  return engine(point);
}

}  // namespace lgbell
