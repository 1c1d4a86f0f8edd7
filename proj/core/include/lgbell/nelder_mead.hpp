#pragma once

#include <functional>
#include <span>
#include <vector>

namespace lgbell {

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double diameter_tol = 1e-9;
  int max_iters = 20000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes `f` from `start` with an axis-aligned initial simplex of edge
/// `step`. Non-finite objective values are treated as +inf, so a vertex
/// that hits one is always the first to be replaced. Stops when the
/// simplex diameter (max pairwise vertex distance) drops below
/// diameter_tol, or after max_iters iterations with converged = false.
NelderMeadResult nelder_mead(const Objective& f, std::span<const double> start, double step,
                             const NelderMeadOptions& options = {});

}  // namespace lgbell
