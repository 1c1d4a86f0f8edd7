#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lgbell/modes.hpp"
#include "lgbell/nelder_mead.hpp"
#include "lgbell/wigner.hpp"

namespace lgbell {

/// A Wigner-transform evaluator Pi(X, P_X; Y, P_Y), |Pi| <= 1.
using PiFunction = std::function<double(const PhasePoint&)>;

PiFunction lg_pi(ModeIndex mode);
PiFunction elliptical_pi(const EllipticalParams& params);

/// Side A measures at (0,0) or (x,0) in its (X, P_X) plane, side B at
/// (0,0) or (0,py) in its (Y, P_Y) plane.
struct BellSettingsRestricted {
  double x = 0.0;
  double py = 0.0;
};

/// Two settings per side: a1, a2 in (X, P_X), b1, b2 in (Y, P_Y).
struct BellSettingsGeneral {
  PhasePlanePoint a1;
  PhasePlanePoint a2;
  PhasePlanePoint b1;
  PhasePlanePoint b2;

  static BellSettingsGeneral from_vector(std::span<const double> v);
  std::vector<double> to_vector() const;
};

BellSettingsGeneral embed(const BellSettingsRestricted& s);

/// Pi(0,0;0,0) + Pi(x,0;0,0) + Pi(0,0;0,py) - Pi(x,0;0,py).
double bell_sum_restricted(const PiFunction& pi, const BellSettingsRestricted& s);

/// Closed form of the restricted sum for the (1,0) mode:
///   e^{-py^2}(py^2 - 1) + e^{-x^2}(x^2 - 1) - e^{-py^2-x^2}((py+x)^2 - 1) - 1.
double bell_closed_form_10(double x, double py);

/// Pi(a1;b1) + Pi(a2;b1) + Pi(a1;b2) - Pi(a2;b2).
double bell_sum_general(const PiFunction& pi, const BellSettingsGeneral& s);

enum class SettingsKind { restricted_2, general_8 };

inline constexpr int dimension(SettingsKind kind) {
  return kind == SettingsKind::restricted_2 ? 2 : 8;
}

struct OptimizerConfig {
  double grid_bounds = 2.0;
  int grid_points = 21;
  int restarts = 8;
  double simplex_tol = 1e-9;
  int max_iters = 20000;
  std::uint64_t seed = 20130101;

  /// 21 points per axis over [-2, 2]^2.
  static OptimizerConfig restricted_defaults();
  /// 7 points per axis over [-2, 2]^8, of which 16 lattice points are drawn
  /// at random, plus 64 uniform random seeds.
  static OptimizerConfig general_defaults();
  static OptimizerConfig defaults_for(SettingsKind kind);
};

void validate(const OptimizerConfig& cfg);

inline constexpr int kGeneralLatticeSeeds = 16;
inline constexpr int kGeneralRandomSeeds = 64;

struct OptimizationResult {
  double best_value = 0.0;     // |B| at argmax
  double signed_value = 0.0;   // B at argmax
  std::vector<double> argmax;  // (x, py) or (X1, P_X1, X2, P_X2, Y1, P_Y1, Y2, P_Y2)
  long evaluations = 0;
  bool converged = false;
};

/// Maximizes |B| over the settings. Seeds come from the grid described in
/// OptimizerConfig (plus `extra_seeds`, and for general_8 the embedded
/// restricted optimum); the best `restarts` seeds are each refined with
/// Nelder-Mead. A non-finite Pi value ends that path (treated as -inf).
/// Deterministic for a given config and seed.
OptimizationResult maximize_bell(const PiFunction& pi, SettingsKind kind,
                                 const OptimizerConfig& cfg,
                                 const std::vector<std::vector<double>>& extra_seeds = {});

struct BellScanRow {
  double x = 0.0;
  double py = 0.0;
  double abs_b = 0.0;
};

/// P_Y rule for a 1D scan: py = x (diagonal) or a fixed py.
struct PyRule {
  std::optional<double> fixed_py;  // empty: py follows x
  static PyRule diagonal() { return {}; }
  static PyRule fixed(double py) { return {py}; }
};

/// `samples` equispaced x values in [x_min, x_max] (inclusive).
std::vector<BellScanRow> bell_scan(const PiFunction& pi, double x_min, double x_max, PyRule rule,
                                   int samples);
std::vector<BellScanRow> bell_scan(ModeIndex mode, double x_min, double x_max, PyRule rule,
                                   int samples);

/// Full samples x samples grid, row-major with x outermost.
std::vector<BellScanRow> bell_scan_grid(const PiFunction& pi, double min, double max, int samples);

struct EllipticalProfileRow {
  double t = 0.0;
  OptimizationResult result;
};

struct EllipticalProfile {
  std::vector<EllipticalProfileRow> rows;
  double supremum = 0.0;
  double t_at_supremum = 0.0;
};

/// Best |B| for the elliptical beam at each t. Each optimization is also
/// seeded with the argmax found at the previous t; gaps wider than 0.1
/// (including the one from t = 0 to the first value) are bridged by
/// unreported intermediate optimizations.
EllipticalProfile elliptical_profile(const std::vector<double>& t_values, int sign,
                                     SettingsKind kind, const OptimizerConfig& cfg);

/// t = 0, 0.1, ..., 2.0.
std::vector<double> default_t_grid();

}  // namespace lgbell
