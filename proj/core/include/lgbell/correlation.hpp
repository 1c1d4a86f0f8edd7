#pragma once

#include <vector>

#include "lgbell/modes.hpp"
#include "lgbell/quadrature.hpp"

namespace lgbell {

/// Quadrature phases: X_theta = cos(theta) X + sin(theta) P_X on side A,
/// Y_phi = cos(phi) Y + sin(phi) P_Y on side B.
struct QuadratureAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// C_{theta,phi} = <X_theta Y_phi> / sqrt(<X_theta^2> <Y_phi^2>).
double quadrature_correlation(const MomentTable& moments, const QuadratureAngles& angles);
double quadrature_correlation(ModeIndex mode, const QuadratureAngles& angles,
                              const QuadratureConfig& quad);

/// Signed maximum <X P_Y> / sqrt(<X^2> <P_Y^2>), reached at phi - theta = pi/2.
double max_correlation(const MomentTable& moments);
double max_correlation(ModeIndex mode, const QuadratureConfig& quad);

/// The equivalent form -<P_X Y> / sqrt(<P_X^2> <Y^2>).
double max_correlation_alt(const MomentTable& moments);

struct CorrelationRow {
  double theta = 0.0;
  double phi = 0.0;
  double c = 0.0;
};

/// Row-major over theta_grid (outer) and phi_grid (inner).
std::vector<CorrelationRow> correlation_scan(ModeIndex mode, const std::vector<double>& theta_grid,
                                             const std::vector<double>& phi_grid,
                                             const QuadratureConfig& quad);

/// `points` equispaced angles in [0, 2 pi).
std::vector<double> angle_grid(int points);

}  // namespace lgbell
