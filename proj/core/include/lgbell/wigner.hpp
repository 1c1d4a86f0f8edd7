#pragma once

#include <functional>
#include <vector>

#include "lgbell/modes.hpp"
#include "lgbell/quadrature.hpp"

namespace lgbell {

/// Dimensionless phase-space point (X, P_X; Y, P_Y).
struct PhasePoint {
  double x = 0.0;
  double px = 0.0;
  double y = 0.0;
  double py = 0.0;
};

/// Q0 = (X^2 + Y^2 + P_X^2 + P_Y^2)/4 and Q2 = (X P_Y - Y P_X)/2.
/// The LG Wigner function depends on the point only through these.
struct WignerArgs {
  double q0 = 0.0;
  double q2 = 0.0;
};

WignerArgs wigner_args(const PhasePoint& point);

/// Closed-form LG Wigner function
///   W = (-1)^{n+m} pi^-2 L_n[4(Q0+Q2)] L_m[4(Q0-Q2)] exp(-4 Q0).
/// Switches to a log-domain product once a Laguerre argument exceeds 60.
double wigner_lg(ModeIndex mode, const PhasePoint& point);

/// W / exp(-4 Q0): the polynomial part, for Gauss-Hermite integration.
double wigner_lg_polynomial(ModeIndex mode, const PhasePoint& point);

/// Wigner transform pi^2 W, the displaced-parity analog; |Pi| <= 1.
double wigner_transform(ModeIndex mode, const PhasePoint& point);

/// Elliptical (two-axis squeezed) Gaussian beam
///   Phi = pi^{-1/2} exp[-(X^2+Y^2) cosh(2t)/2 + sign X Y sinh(2t)].
struct EllipticalParams {
  double t = 0.0;
  int sign = +1;
};

inline constexpr double kMaxEllipticalT = 5.0;

void validate(const EllipticalParams& params);

double elliptical_field(const EllipticalParams& params, double x, double y);

/// Closed-form Gaussian Wigner function of elliptical_field:
///   W = pi^-2 exp(-r^T A r - p^T A^-1 p),  A = [[c, -s], [-s, c]],
/// with c = cosh 2t, s = sign sinh 2t, r = (X, Y), p = (P_X, P_Y).
double wigner_elliptical(const EllipticalParams& params, const PhasePoint& point);
double elliptical_transform(const EllipticalParams& params, const PhasePoint& point);

using FieldFunction = std::function<complex(double, double)>;

/// Legendre box suited to an LG mode: half-width 5 + sqrt(2(n+m)+1).
QuadratureConfig default_wigner_quadrature(ModeIndex mode);
QuadratureConfig default_wigner_quadrature(const EllipticalParams& params);

struct QuadratureDiagnostics {
  double field_norm = 0.0;
  double norm_change = 0.0;     // |norm(order) - norm(2 order)|, or order/2 at the cap
  double edge_amplitude = 0.0;  // max |E| on the box boundary
  bool resolved = false;
};

/// Numerical Wigner function of an arbitrary transverse field,
///   W(R, P) = pi^-2 integral d^2 xi exp(2i P.xi) E*(R + xi) E(R - xi),
/// on a tensor Gauss-Legendre plan over the xi box. The field is
/// tabulated lazily per evaluation; the plan itself is immutable.
class NumericWigner {
 public:
  /// Throws std::invalid_argument when the rule is not gauss_legendre or
  /// when the field norm on the box deviates from 1 by more than 1e-3.
  NumericWigner(FieldFunction field, const QuadratureConfig& config);

  double operator()(const PhasePoint& point) const;

  const QuadratureDiagnostics& diagnostics() const { return diagnostics_; }

 private:
  FieldFunction field_;
  GaussRule rule_;
  QuadratureDiagnostics diagnostics_;
};

/// One-shot numerical Wigner value. Throws QuadratureError if the plan
/// fails its resolution check.
double wigner_numeric(const FieldFunction& field, const PhasePoint& point,
                      const QuadratureConfig& config);

}  // namespace lgbell
