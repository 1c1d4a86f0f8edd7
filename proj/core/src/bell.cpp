#include "lgbell/bell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace lgbell {

namespace {

struct Seed {
  std::vector<double> x;
  double abs_b = 0.0;
  std::size_t index = 0;
};

double objective_abs(const PiFunction& pi, SettingsKind kind, std::span<const double> v) {
  const double b = kind == SettingsKind::restricted_2
                       ? bell_sum_restricted(pi, {v[0], v[1]})
                       : bell_sum_general(pi, BellSettingsGeneral::from_vector(v));
  return std::isfinite(b) ? std::abs(b) : -std::numeric_limits<double>::infinity();
}

double signed_sum(const PiFunction& pi, SettingsKind kind, std::span<const double> v) {
  return kind == SettingsKind::restricted_2
             ? bell_sum_restricted(pi, {v[0], v[1]})
             : bell_sum_general(pi, BellSettingsGeneral::from_vector(v));
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double lattice(int index, const OptimizerConfig& cfg) {
  return -cfg.grid_bounds + 2.0 * cfg.grid_bounds * index / (cfg.grid_points - 1);
}

// Highest |B| first; equal values keep generation order.
void rank(std::vector<Seed>& seeds) {
  std::stable_sort(seeds.begin(), seeds.end(),
                   [](const Seed& a, const Seed& b) { return a.abs_b > b.abs_b; });
}

std::vector<Seed> grid_seeds(const PiFunction& pi, SettingsKind kind, const OptimizerConfig& cfg) {
  std::vector<Seed> seeds;
  if (kind == SettingsKind::restricted_2) {
    for (int i = 0; i < cfg.grid_points; ++i) {
      for (int j = 0; j < cfg.grid_points; ++j) {
        std::vector<double> x{lattice(i, cfg), lattice(j, cfg)};
        const double v = objective_abs(pi, kind, x);
        seeds.push_back({std::move(x), v, seeds.size()});
      }
    }
    return seeds;
  }

  std::mt19937_64 rng(cfg.seed);
  for (int s = 0; s < kGeneralLatticeSeeds; ++s) {
    std::vector<double> x(8);
    for (double& c : x) c = lattice(static_cast<int>(rng() % cfg.grid_points), cfg);
    const double v = objective_abs(pi, kind, x);
    seeds.push_back({std::move(x), v, seeds.size()});
  }
  for (int s = 0; s < kGeneralRandomSeeds; ++s) {
    std::vector<double> x(8);
    for (double& c : x) c = cfg.grid_bounds * (2.0 * unit_uniform(rng) - 1.0);
    const double v = objective_abs(pi, kind, x);
    seeds.push_back({std::move(x), v, seeds.size()});
  }
  return seeds;
}

}  // namespace

PiFunction lg_pi(ModeIndex mode) {
  validate(mode);
  return [mode](const PhasePoint& p) { return wigner_transform(mode, p); };
}

PiFunction elliptical_pi(const EllipticalParams& params) {
  validate(params);
  return [params](const PhasePoint& p) { return elliptical_transform(params, p); };
}

BellSettingsGeneral BellSettingsGeneral::from_vector(std::span<const double> v) {
  if (v.size() != 8) throw std::invalid_argument("general Bell settings need 8 components");
  return {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
}

std::vector<double> BellSettingsGeneral::to_vector() const {
  return {a1.q, a1.p, a2.q, a2.p, b1.q, b1.p, b2.q, b2.p};
}

BellSettingsGeneral embed(const BellSettingsRestricted& s) {
  return {{0.0, 0.0}, {s.x, 0.0}, {0.0, 0.0}, {0.0, s.py}};
}

double bell_sum_restricted(const PiFunction& pi, const BellSettingsRestricted& s) {
  return pi({0.0, 0.0, 0.0, 0.0}) + pi({s.x, 0.0, 0.0, 0.0}) + pi({0.0, 0.0, 0.0, s.py}) -
         pi({s.x, 0.0, 0.0, s.py});
}

double bell_closed_form_10(double x, double py) {
  const double x2 = x * x;
  const double py2 = py * py;
  return std::exp(-py2) * (py2 - 1.0) + std::exp(-x2) * (x2 - 1.0) -
         std::exp(-py2 - x2) * ((py + x) * (py + x) - 1.0) - 1.0;
}

double bell_sum_general(const PiFunction& pi, const BellSettingsGeneral& s) {
  auto at = [&pi](PhasePlanePoint a, PhasePlanePoint b) { return pi({a.q, a.p, b.q, b.p}); };
  return at(s.a1, s.b1) + at(s.a2, s.b1) + at(s.a1, s.b2) - at(s.a2, s.b2);
}

OptimizerConfig OptimizerConfig::restricted_defaults() { return {}; }

OptimizerConfig OptimizerConfig::general_defaults() {
  OptimizerConfig cfg;
  cfg.grid_points = 7;
  cfg.restarts = 16;
  return cfg;
}

OptimizerConfig OptimizerConfig::defaults_for(SettingsKind kind) {
  return kind == SettingsKind::restricted_2 ? restricted_defaults() : general_defaults();
}

void validate(const OptimizerConfig& cfg) {
  if (!(cfg.grid_bounds > 0.0) || !std::isfinite(cfg.grid_bounds)) {
    throw std::invalid_argument("grid_bounds must be positive");
  }
  if (cfg.grid_points < 3) throw std::invalid_argument("grid_points must be >= 3");
  if (cfg.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (!(cfg.simplex_tol >= 1e-12)) throw std::invalid_argument("simplex_tol must be >= 1e-12");
  if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
}

OptimizationResult maximize_bell(const PiFunction& pi, SettingsKind kind,
                                 const OptimizerConfig& cfg,
                                 const std::vector<std::vector<double>>& extra_seeds) {
  validate(cfg);
  const std::size_t dim = static_cast<std::size_t>(dimension(kind));
  for (const auto& s : extra_seeds) {
    if (s.size() != dim) throw std::invalid_argument("extra seed has wrong dimension");
  }

  OptimizationResult best;
  best.best_value = -std::numeric_limits<double>::infinity();

  std::vector<Seed> seeds = grid_seeds(pi, kind, cfg);
  best.evaluations += static_cast<long>(seeds.size());
  rank(seeds);
  seeds.resize(std::min(seeds.size(), static_cast<std::size_t>(cfg.restarts)));

  if (kind == SettingsKind::general_8) {
    OptimizerConfig restricted_cfg = cfg;
    restricted_cfg.grid_points = OptimizerConfig::restricted_defaults().grid_points;
    restricted_cfg.restarts = OptimizerConfig::restricted_defaults().restarts;
    const OptimizationResult restricted = maximize_bell(pi, SettingsKind::restricted_2, restricted_cfg);
    best.evaluations += restricted.evaluations;
    seeds.push_back({embed({restricted.argmax[0], restricted.argmax[1]}).to_vector(),
                     restricted.best_value, seeds.size()});
  }
  for (const auto& s : extra_seeds) seeds.push_back({s, 0.0, seeds.size()});

  const double step = 2.0 * cfg.grid_bounds / (cfg.grid_points - 1);
  NelderMeadOptions options;
  options.diameter_tol = cfg.simplex_tol;
  options.max_iters = cfg.max_iters;
  const Objective objective = [&](std::span<const double> v) {
    return -objective_abs(pi, kind, v);
  };

  for (const Seed& seed : seeds) {
    const NelderMeadResult refined = nelder_mead(objective, seed.x, step, options);
    best.evaluations += refined.evaluations;
    const double value = -refined.value;
    const bool better = value > best.best_value ||
                        (value == best.best_value && refined.x < best.argmax);
    if (better) {
      best.best_value = value;
      best.argmax = refined.x;
      best.converged = refined.converged;
    }
  }
  if (!std::isfinite(best.best_value)) {
    best.converged = false;
    best.best_value = std::numeric_limits<double>::quiet_NaN();
    best.signed_value = std::numeric_limits<double>::quiet_NaN();
    return best;
  }
  best.signed_value = signed_sum(pi, kind, best.argmax);
  return best;
}

std::vector<BellScanRow> bell_scan(const PiFunction& pi, double x_min, double x_max, PyRule rule,
                                   int samples) {
  if (samples < 2) throw std::invalid_argument("bell_scan needs at least 2 samples");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min <= x_max)) {
    throw std::invalid_argument("bell_scan needs a finite range with x_min <= x_max");
  }
  std::vector<BellScanRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double x = x_min + (x_max - x_min) * i / (samples - 1);
    const double py = rule.fixed_py.value_or(x);
    rows.push_back({x, py, std::abs(bell_sum_restricted(pi, {x, py}))});
  }
  return rows;
}

std::vector<BellScanRow> bell_scan(ModeIndex mode, double x_min, double x_max, PyRule rule,
                                   int samples) {
  return bell_scan(lg_pi(mode), x_min, x_max, rule, samples);
}

std::vector<BellScanRow> bell_scan_grid(const PiFunction& pi, double min, double max, int samples) {
  if (samples < 2) throw std::invalid_argument("bell_scan_grid needs at least 2 samples");
  if (!std::isfinite(min) || !std::isfinite(max) || !(min <= max)) {
    throw std::invalid_argument("bell_scan_grid needs a finite range with min <= max");
  }
  std::vector<BellScanRow> rows;
  rows.reserve(static_cast<std::size_t>(samples) * samples);
  for (int i = 0; i < samples; ++i) {
    const double x = min + (max - min) * i / (samples - 1);
    for (int j = 0; j < samples; ++j) {
      const double py = min + (max - min) * j / (samples - 1);
      rows.push_back({x, py, std::abs(bell_sum_restricted(pi, {x, py}))});
    }
  }
  return rows;
}

std::vector<double> default_t_grid() {
  std::vector<double> t;
  for (int k = 0; k <= 20; ++k) t.push_back(0.1 * k);
  return t;
}

EllipticalProfile elliptical_profile(const std::vector<double>& t_values, int sign,
                                     SettingsKind kind, const OptimizerConfig& cfg) {
  // Optima at large |t| sit at small displacements the seed lattice misses,
  // so every t is reached by continuation from t = 0 in steps of at most
  // kMaxContinuationStep, whatever spacing the caller asks for.
  constexpr double kMaxContinuationStep = 0.1;
  for (double t : t_values) validate(EllipticalParams{t, sign});

  EllipticalProfile profile;
  profile.supremum = -std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> carry;
  double t_prev = 0.0;
  bool have_prev = false;
  for (double t : t_values) {
    const double from = have_prev ? t_prev : 0.0;
    const int steps = static_cast<int>(std::ceil(std::abs(t - from) / kMaxContinuationStep - 1e-9));
    const int first = have_prev ? 1 : 0;
    for (int k = first; k < steps; ++k) {
      const double tk = from + (t - from) * k / steps;
      const OptimizationResult warm = maximize_bell(elliptical_pi({tk, sign}), kind, cfg, carry);
      if (!warm.argmax.empty()) carry = {warm.argmax};
    }
    OptimizationResult result = maximize_bell(elliptical_pi({t, sign}), kind, cfg, carry);
    if (!result.argmax.empty()) carry = {result.argmax};
    t_prev = t;
    have_prev = true;
    if (result.best_value > profile.supremum) {
      profile.supremum = result.best_value;
      profile.t_at_supremum = t;
    }
    profile.rows.push_back({t, std::move(result)});
  }
  return profile;
}

}  // namespace lgbell
