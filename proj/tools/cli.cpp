#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lgbell/bell.hpp"
#include "lgbell/correlation.hpp"
#include "lgbell/modes.hpp"
#include "lgbell/quadrature.hpp"
#include "lgbell/wigner.hpp"

namespace lgbell::cli {

namespace {

using nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string iso8601_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

// 17 significant digits: round-trips every double.
std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json manifest(const std::string& command, ordered_json parameters, std::uint64_t seed) {
  ordered_json m;
  m["command"] = command;
  m["parameters"] = std::move(parameters);
  m["artifact_version"] = LGBELL_VERSION;
  m["seed"] = seed;
  m["timestamp"] = iso8601_now();
  return m;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << content;
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

void emit_json(const ordered_json& doc, const std::string& out_path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
}

void emit_csv(const std::string& csv, const ordered_json& manifest_doc, const std::string& out_path,
              std::ostream& out) {
  if (out_path.empty()) {
    out << csv;
    return;
  }
  write_file(out_path, csv);
  write_file(out_path + ".manifest.json", manifest_doc.dump(2) + "\n");
}

// Beam selection shared by the Bell and Wigner commands: an LG mode, or
// the elliptical Gaussian when --t is given.
struct BeamOptions {
  int n = 1;
  int m = 0;
  std::optional<double> t;
  int sign = 1;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--n", n, "LG index n")->capture_default_str();
    cmd.add_option("--m", m, "LG index m")->capture_default_str();
    cmd.add_option("--t", t, "use the elliptical Gaussian beam with squeeze parameter t");
    cmd.add_option("--sign", sign, "sign of the XY term of the elliptical beam (+1 or -1)")
        ->capture_default_str();
  }

  PiFunction pi() const {
    if (t) return elliptical_pi({*t, sign});
    return lg_pi({n, m});
  }

  ordered_json describe() const {
    ordered_json j;
    if (t) {
      j["beam"] = "elliptical";
      j["t"] = *t;
      j["sign"] = sign;
    } else {
      j["beam"] = "lg";
      j["n"] = n;
      j["m"] = m;
    }
    return j;
  }
};

SettingsKind parse_settings(const std::string& s) {
  if (s == "restricted") return SettingsKind::restricted_2;
  if (s == "general") return SettingsKind::general_8;
  throw std::invalid_argument("--settings must be 'restricted' or 'general'");
}

// Optimizer flags; unset values fall back to the per-kind defaults.
struct OptimizerOptions {
  std::optional<double> grid_bounds;
  std::optional<int> grid_points;
  std::optional<int> restarts;
  std::optional<double> tol;
  std::optional<int> max_iters;
  std::uint64_t seed = OptimizerConfig{}.seed;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--grid-bounds", grid_bounds, "seed box half-width per parameter (default 2)");
    cmd.add_option("--grid-points", grid_points,
                   "seed lattice points per axis (default 21 restricted, 7 general)");
    cmd.add_option("--restarts", restarts, "seeds refined by Nelder-Mead (default 8 / 16)");
    cmd.add_option("--tol", tol, "simplex diameter tolerance (default 1e-9)");
    cmd.add_option("--max-iters", max_iters, "Nelder-Mead iteration cap (default 20000)");
    cmd.add_option("--seed", seed, "pseudo-random seed")->capture_default_str();
  }

  OptimizerConfig config(SettingsKind kind) const {
    OptimizerConfig cfg = OptimizerConfig::defaults_for(kind);
    if (grid_bounds) cfg.grid_bounds = *grid_bounds;
    if (grid_points) cfg.grid_points = *grid_points;
    if (restarts) cfg.restarts = *restarts;
    if (tol) cfg.simplex_tol = *tol;
    if (max_iters) cfg.max_iters = *max_iters;
    cfg.seed = seed;
    validate(cfg);
    return cfg;
  }
};

ordered_json describe(const OptimizerConfig& cfg) {
  return {{"grid_bounds", cfg.grid_bounds}, {"grid_points", cfg.grid_points},
          {"restarts", cfg.restarts},       {"simplex_tol", cfg.simplex_tol},
          {"max_iters", cfg.max_iters}};
}

ordered_json result_json(const OptimizationResult& r) {
  ordered_json j;
  j["best_value"] = r.best_value;
  j["signed_value"] = r.signed_value;
  j["argmax"] = r.argmax;
  j["evaluations"] = r.evaluations;
  j["converged"] = r.converged;
  return j;
}

QuadratureConfig moment_config(ModeIndex mode, std::optional<int> order) {
  QuadratureConfig q = default_moment_quadrature(mode);
  if (order) q.order = *order;
  return q;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bell-CHSH sums, Wigner functions and quadrature correlations of LG vortex beams",
               "lgbell"};
  app.require_subcommand(1);
  std::function<int()> action;

  // bell-max
  BeamOptions bell_max_beam;
  OptimizerOptions bell_max_opt;
  std::string bell_max_settings = "restricted";
  std::string bell_max_out;
  auto* bell_max = app.add_subcommand("bell-max", "maximize |B| over measurement settings");
  bell_max_beam.add_to(*bell_max);
  bell_max_opt.add_to(*bell_max);
  bell_max->add_option("--settings", bell_max_settings, "restricted | general")
      ->capture_default_str();
  bell_max->add_option("--out", bell_max_out, "write the JSON result here instead of stdout");
  bell_max->callback([&] {
    action = [&] {
      const SettingsKind kind = parse_settings(bell_max_settings);
      const OptimizerConfig cfg = bell_max_opt.config(kind);
      const OptimizationResult r = maximize_bell(bell_max_beam.pi(), kind, cfg);
      ordered_json params = bell_max_beam.describe();
      params["settings"] = bell_max_settings;
      params["optimizer"] = describe(cfg);
      ordered_json doc = result_json(r);
      doc["manifest"] = manifest("bell-max", params, cfg.seed);
      emit_json(doc, bell_max_out, out);
      return r.converged ? kExitOk : kExitNotConverged;
    };
  });

  // bell-scan
  BeamOptions scan_beam;
  double scan_min = -2.0;
  double scan_max = 2.0;
  int scan_samples = 101;
  std::optional<double> scan_py;
  bool scan_grid = false;
  std::string scan_out;
  auto* bell_scan_cmd = app.add_subcommand("bell-scan", "tabulate |B| for restricted settings");
  scan_beam.add_to(*bell_scan_cmd);
  bell_scan_cmd->add_option("--x-min", scan_min, "first x")->capture_default_str();
  bell_scan_cmd->add_option("--x-max", scan_max, "last x")->capture_default_str();
  bell_scan_cmd->add_option("--samples", scan_samples, "points per axis (>= 2)")
      ->capture_default_str();
  auto* py_opt = bell_scan_cmd->add_option("--py", scan_py, "hold P_Y fixed (default: py = x)");
  bell_scan_cmd->add_flag("--grid", scan_grid, "full 2D (x, py) grid over [x-min, x-max]^2")
      ->excludes(py_opt);
  bell_scan_cmd->add_option("--out", scan_out, "CSV output path");
  bell_scan_cmd->callback([&] {
    action = [&] {
      const PiFunction pi = scan_beam.pi();
      const std::vector<BellScanRow> rows =
          scan_grid ? bell_scan_grid(pi, scan_min, scan_max, scan_samples)
                    : bell_scan(pi, scan_min, scan_max,
                                scan_py ? PyRule::fixed(*scan_py) : PyRule::diagonal(),
                                scan_samples);
      std::string csv = "x,py,abs_B\n";
      for (const auto& r : rows) csv += num(r.x) + "," + num(r.py) + "," + num(r.abs_b) + "\n";
      ordered_json params = scan_beam.describe();
      params["x_min"] = scan_min;
      params["x_max"] = scan_max;
      params["samples"] = scan_samples;
      params["mode"] = scan_grid ? "grid" : (scan_py ? "fixed_py" : "diagonal");
      if (scan_py) params["py"] = *scan_py;
      emit_csv(csv, manifest("bell-scan", params, 0), scan_out, out);
      return kExitOk;
    };
  });

  // corr
  int corr_n = 1;
  int corr_m = 0;
  bool corr_max = false;
  int corr_theta_points = 36;
  int corr_phi_points = 36;
  std::optional<int> corr_order;
  std::string corr_out;
  auto* corr = app.add_subcommand("corr", "quadrature correlation coefficients");
  corr->add_option("--n", corr_n, "LG index n")->capture_default_str();
  corr->add_option("--m", corr_m, "LG index m")->capture_default_str();
  corr->add_flag("--max", corr_max, "emit only the maximum correlation as JSON");
  corr->add_option("--theta-points", corr_theta_points, "theta grid size over [0, 2pi)")
      ->capture_default_str();
  corr->add_option("--phi-points", corr_phi_points, "phi grid size over [0, 2pi)")
      ->capture_default_str();
  corr->add_option("--order", corr_order, "Gauss-Hermite order (default 2(n+m)+16)");
  corr->add_option("--out", corr_out, "output path");
  corr->callback([&] {
    action = [&] {
      const ModeIndex mode{corr_n, corr_m};
      validate(mode);
      const QuadratureConfig quad = moment_config(mode, corr_order);
      ordered_json params{{"n", corr_n}, {"m", corr_m}, {"order", quad.order}};
      if (corr_max) {
        const MomentTable mt = moments(mode, quad);
        ordered_json doc;
        doc["n"] = corr_n;
        doc["m"] = corr_m;
        doc["c_max"] = max_correlation(mt);
        doc["c_max_alt"] = max_correlation_alt(mt);
        params["max"] = true;
        doc["manifest"] = manifest("corr", params, 0);
        emit_json(doc, corr_out, out);
        return kExitOk;
      }
      params["theta_points"] = corr_theta_points;
      params["phi_points"] = corr_phi_points;
      const auto rows =
          correlation_scan(mode, angle_grid(corr_theta_points), angle_grid(corr_phi_points), quad);
      std::string csv = "theta,phi,c\n";
      for (const auto& r : rows) csv += num(r.theta) + "," + num(r.phi) + "," + num(r.c) + "\n";
      emit_csv(csv, manifest("corr", params, 0), corr_out, out);
      return kExitOk;
    };
  });

  // schmidt
  int schmidt_n = 1;
  int schmidt_m = 0;
  std::string schmidt_out;
  auto* schmidt = app.add_subcommand("schmidt", "LG to HG expansion coefficients");
  schmidt->add_option("--n", schmidt_n, "LG index n")->capture_default_str();
  schmidt->add_option("--m", schmidt_m, "LG index m")->capture_default_str();
  schmidt->add_option("--out", schmidt_out, "write the JSON here instead of stdout");
  schmidt->callback([&] {
    action = [&] {
      const ModeIndex mode{schmidt_n, schmidt_m};
      const auto terms = schmidt_coefficients(mode);
      ordered_json doc;
      doc["n"] = schmidt_n;
      doc["m"] = schmidt_m;
      doc["phase_convention"] = "(-i)^k";
      doc["terms"] = ordered_json::array();
      double total = 0.0;
      for (std::size_t k = 0; k < terms.size(); ++k) {
        const double abs2 = std::norm(terms[k].coefficient);
        total += abs2;
        doc["terms"].push_back({{"k", k},
                                {"hg", {terms[k].hg_index.n, terms[k].hg_index.m}},
                                {"re", terms[k].coefficient.real()},
                                {"im", terms[k].coefficient.imag()},
                                {"abs2", abs2}});
      }
      doc["sum_abs2"] = total;
      doc["manifest"] = manifest("schmidt", {{"n", schmidt_n}, {"m", schmidt_m}}, 0);
      emit_json(doc, schmidt_out, out);
      return kExitOk;
    };
  });

  // wigner
  BeamOptions wigner_beam;
  double wigner_min = -2.0;
  double wigner_max = 2.0;
  int wigner_points = 5;
  bool wigner_numeric_flag = false;
  std::optional<int> wigner_order;
  std::string wigner_out;
  auto* wigner = app.add_subcommand("wigner", "tabulate W and Pi on a 4D grid");
  wigner_beam.add_to(*wigner);
  wigner->add_option("--min", wigner_min, "grid start on every axis")->capture_default_str();
  wigner->add_option("--max", wigner_max, "grid end on every axis")->capture_default_str();
  wigner->add_option("--points", wigner_points, "points per axis (1 uses --min only)")
      ->capture_default_str();
  wigner->add_flag("--numeric", wigner_numeric_flag,
                   "use the numerical Fourier-transform engine instead of the closed form");
  wigner->add_option("--order", wigner_order, "Gauss-Legendre order for --numeric");
  wigner->add_option("--out", wigner_out, "CSV output path");
  wigner->callback([&] {
    action = [&] {
      if (wigner_points < 1) throw std::invalid_argument("--points must be >= 1");
      if (!(wigner_min <= wigner_max)) throw std::invalid_argument("--min must be <= --max");
      const bool elliptical = wigner_beam.t.has_value();
      const EllipticalParams ep{wigner_beam.t.value_or(0.0), wigner_beam.sign};
      const ModeIndex mode{wigner_beam.n, wigner_beam.m};
      if (elliptical) {
        validate(ep);
      } else {
        validate(mode);
      }

      std::function<double(const PhasePoint&)> w;
      std::optional<NumericWigner> engine;
      if (wigner_numeric_flag) {
        QuadratureConfig q =
            elliptical ? default_wigner_quadrature(ep) : default_wigner_quadrature(mode);
        if (wigner_order) q.order = *wigner_order;
        FieldFunction field = elliptical
            ? FieldFunction([ep](double x, double y) { return complex(elliptical_field(ep, x, y)); })
            : FieldFunction([mode](double x, double y) { return lg_amplitude(mode, x, y); });
        engine.emplace(std::move(field), q);
        if (!engine->diagnostics().resolved) {
          err << "warning: numeric Wigner quadrature may be under-resolved\n";
        }
        w = [&engine](const PhasePoint& p) { return (*engine)(p); };
      } else if (elliptical) {
        w = [ep](const PhasePoint& p) { return wigner_elliptical(ep, p); };
      } else {
        w = [mode](const PhasePoint& p) { return wigner_lg(mode, p); };
      }

      std::vector<double> axis;
      for (int i = 0; i < wigner_points; ++i) {
        axis.push_back(wigner_points == 1 ? wigner_min
                                          : wigner_min + (wigner_max - wigner_min) * i /
                                                             (wigner_points - 1));
      }
      constexpr double kPi2 = 9.8696044010893586188;
      std::string csv = "x,px,y,py,w,pi\n";
      for (double x : axis)
        for (double px : axis)
          for (double y : axis)
            for (double py : axis) {
              const double value = w({x, px, y, py});
              csv += num(x) + "," + num(px) + "," + num(y) + "," + num(py) + "," + num(value) +
                     "," + num(kPi2 * value) + "\n";
            }
      ordered_json params = wigner_beam.describe();
      params["min"] = wigner_min;
      params["max"] = wigner_max;
      params["points"] = wigner_points;
      params["numeric"] = wigner_numeric_flag;
      emit_csv(csv, manifest("wigner", params, 0), wigner_out, out);
      return kExitOk;
    };
  });

  // elliptical-profile
  double prof_t_min = 0.0;
  double prof_t_max = 2.0;
  double prof_t_step = 0.1;
  int prof_sign = 1;
  std::string prof_settings = "general";
  OptimizerOptions prof_opt;
  std::string prof_out;
  auto* profile = app.add_subcommand("elliptical-profile",
                                     "best |B| of the elliptical Gaussian beam versus t");
  profile->add_option("--t-min", prof_t_min, "first t")->capture_default_str();
  profile->add_option("--t-max", prof_t_max, "last t")->capture_default_str();
  profile->add_option("--t-step", prof_t_step, "t increment")->capture_default_str();
  profile->add_option("--sign", prof_sign, "sign of the XY term (+1 or -1)")->capture_default_str();
  profile->add_option("--settings", prof_settings, "restricted | general")->capture_default_str();
  prof_opt.add_to(*profile);
  profile->add_option("--out", prof_out, "CSV output path (JSON footer still goes to stdout)");
  profile->callback([&] {
    action = [&] {
      if (!(prof_t_min >= 0.0 && prof_t_max <= 2.0 && prof_t_min <= prof_t_max)) {
        throw std::invalid_argument("t range must lie within [0, 2]");
      }
      if (!(prof_t_step > 0.0)) throw std::invalid_argument("--t-step must be positive");
      const SettingsKind kind = parse_settings(prof_settings);
      const OptimizerConfig cfg = prof_opt.config(kind);
      std::vector<double> ts;
      const int steps = static_cast<int>(std::floor((prof_t_max - prof_t_min) / prof_t_step + 1e-9));
      for (int k = 0; k <= steps; ++k) ts.push_back(prof_t_min + k * prof_t_step);

      const EllipticalProfile prof = elliptical_profile(ts, prof_sign, kind, cfg);
      std::string csv = "t,best_abs_B\n";
      bool all_converged = true;
      for (const auto& row : prof.rows) {
        csv += num(row.t) + "," + num(row.result.best_value) + "\n";
        all_converged = all_converged && row.result.converged;
      }
      ordered_json params{{"t_min", prof_t_min},   {"t_max", prof_t_max},
                          {"t_step", prof_t_step}, {"sign", prof_sign},
                          {"settings", prof_settings}, {"optimizer", describe(cfg)}};
      const ordered_json m = manifest("elliptical-profile", params, cfg.seed);
      emit_csv(csv, m, prof_out, out);
      ordered_json footer;
      footer["supremum"] = prof.supremum;
      footer["t_at_supremum"] = prof.t_at_supremum;
      footer["all_converged"] = all_converged;
      footer["manifest"] = m;
      out << footer.dump() << "\n";
      return all_converged ? kExitOk : kExitNotConverged;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests print to `out` and exit 0; everything else is a usage error.
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace lgbell::cli
