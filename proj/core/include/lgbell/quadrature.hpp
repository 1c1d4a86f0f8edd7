#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgbell/modes.hpp"

namespace lgbell {

enum class QuadratureRule { gauss_hermite, gauss_legendre };

/// Tensor-product rule description. `half_width` only matters for
/// Gauss-Legendre, which integrates over [-half_width, half_width].
struct QuadratureConfig {
  int order = 64;
  double half_width = 8.0;
  QuadratureRule rule = QuadratureRule::gauss_hermite;
};

inline constexpr int kMinQuadratureOrder = 8;
inline constexpr int kMaxQuadratureOrder = 256;

/// Throws std::invalid_argument unless 8 <= order <= 256 and half_width > 0.
void validate(const QuadratureConfig& config);

/// Raised when a doubling-order check shows an integral is not resolved.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes/weights for 1 <= order <= 256, no lower bound, so tiny rules can
/// be used directly. Hermite uses weight exp(-x^2) on the real line;
/// Legendre is mapped to [-half_width, half_width] with unit weight.
GaussRule gauss_nodes(QuadratureRule rule, int order, double half_width = 1.0);

/// Same, with the config validated first.
GaussRule gauss_nodes(const QuadratureConfig& config);

/// Deterministic sum: terms sorted by magnitude, then summed pairwise.
/// Reorders `terms` in place.
double stable_sum(std::span<double> terms);

/// Second moments of a beam over both transverse modes (scaled units).
struct MomentTable {
  double xx = 0.0;       // <X^2>
  double yy = 0.0;       // <Y^2>
  double pxpx = 0.0;     // <P_X^2>
  double pypy = 0.0;     // <P_Y^2>
  double xy = 0.0;       // <XY>
  double pxpy = 0.0;     // <P_X P_Y>
  double xpy = 0.0;      // <X P_Y>
  double ypx = 0.0;      // <Y P_X>
  double xpx_sym = 0.0;  // <(X P_X + P_X X)/2>
  double ypy_sym = 0.0;  // <(Y P_Y + P_Y Y)/2>
};

/// Smallest Gauss-Hermite order accepted by moments() for a mode.
int min_moment_order(ModeIndex mode);

/// Field-side moments of an LG mode. Position moments weight |Phi|^2,
/// momentum moments use the analytic gradient from lg_jet, e.g.
/// <X P_Y> = Re integral Phi^* X (-i d_Y Phi).
///
/// config.rule must be gauss_hermite and config.order >= min_moment_order.
/// Each integral is recomputed at twice the order (or half, at the cap);
/// a disagreement above 1e-8 raises QuadratureError.
MomentTable moments(ModeIndex mode, const QuadratureConfig& config);

/// The same moments taken over the closed-form Wigner function in 4D,
/// with exp(-4 Q0) folded into a Gauss-Hermite weight. Cost is order^4.
MomentTable wigner_moments(ModeIndex mode, const QuadratureConfig& config);

enum class Quadrature1D { X, Y, P_X, P_Y };

/// First moment <X>, <Y>, <P_X> or <P_Y> of an LG mode.
double expectation_mean(ModeIndex mode, Quadrature1D which, const QuadratureConfig& config);

/// Gauss-Hermite config used when callers do not pick one.
QuadratureConfig default_moment_quadrature(ModeIndex mode);

}  // namespace lgbell
