#include "lgbell/correlation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lgbell {

double quadrature_correlation(const MomentTable& mt, const QuadratureAngles& angles) {
  const double ct = std::cos(angles.theta);
  const double st = std::sin(angles.theta);
  const double cp = std::cos(angles.phi);
  const double sp = std::sin(angles.phi);

  const double cross = ct * cp * mt.xy + ct * sp * mt.xpy + st * cp * mt.ypx + st * sp * mt.pxpy;
  const double var_a = ct * ct * mt.xx + st * st * mt.pxpx + 2.0 * ct * st * mt.xpx_sym;
  const double var_b = cp * cp * mt.yy + sp * sp * mt.pypy + 2.0 * cp * sp * mt.ypy_sym;
  if (!(var_a > 0.0) || !(var_b > 0.0)) {
    throw std::domain_error("quadrature variance is not positive");
  }
  return cross / std::sqrt(var_a * var_b);
}

double quadrature_correlation(ModeIndex mode, const QuadratureAngles& angles,
                              const QuadratureConfig& quad) {
  return quadrature_correlation(moments(mode, quad), angles);
}

double max_correlation(const MomentTable& mt) { return mt.xpy / std::sqrt(mt.xx * mt.pypy); }

double max_correlation_alt(const MomentTable& mt) {
  return -mt.ypx / std::sqrt(mt.pxpx * mt.yy);
}

double max_correlation(ModeIndex mode, const QuadratureConfig& quad) {
  return max_correlation(moments(mode, quad));
}

std::vector<CorrelationRow> correlation_scan(ModeIndex mode, const std::vector<double>& theta_grid,
                                             const std::vector<double>& phi_grid,
                                             const QuadratureConfig& quad) {
  if (theta_grid.empty() || phi_grid.empty()) {
    throw std::invalid_argument("correlation_scan needs nonempty angle grids");
  }
  const MomentTable mt = moments(mode, quad);
  std::vector<CorrelationRow> rows;
  rows.reserve(theta_grid.size() * phi_grid.size());
  for (double theta : theta_grid) {
    for (double phi : phi_grid) {
      rows.push_back({theta, phi, quadrature_correlation(mt, {theta, phi})});
    }
  }
  return rows;
}

std::vector<double> angle_grid(int points) {
  if (points < 1) throw std::invalid_argument("angle grid needs at least one point");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) grid.push_back(2.0 * std::numbers::pi * k / points);
  return grid;
}

}  // namespace lgbell
