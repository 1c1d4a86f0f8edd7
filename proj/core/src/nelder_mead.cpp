#include "lgbell/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lgbell {

namespace {

using Point = std::vector<double>;

double distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

double diameter(const std::vector<Point>& simplex) {
  double d = 0.0;
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    for (std::size_t j = i + 1; j < simplex.size(); ++j) {
      d = std::max(d, distance(simplex[i], simplex[j]));
    }
  }
  return d;
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::span<const double> start, double step,
                             const NelderMeadOptions& options) {
  const std::size_t dim = start.size();
  if (dim == 0) throw std::invalid_argument("nelder_mead: empty start point");
  if (!(step > 0.0)) throw std::invalid_argument("nelder_mead: step must be positive");

  NelderMeadResult result;
  auto eval = [&](const Point& p) {
    ++result.evaluations;
    const double v = f(p);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  std::vector<Point> simplex(dim + 1, Point(start.begin(), start.end()));
  for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += step;
  std::vector<double> values(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(dim + 1);
  Point centroid(dim);
  auto affine = [&](const Point& from, double t) {
    // centroid + t (from - centroid)
    Point p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = centroid[i] + t * (from[i] - centroid[i]);
    return p;
  };

  for (; result.iterations < options.max_iters; ++result.iterations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    {
      std::vector<Point> sorted_simplex(dim + 1);
      std::vector<double> sorted_values(dim + 1);
      for (std::size_t i = 0; i <= dim; ++i) {
        sorted_simplex[i] = std::move(simplex[order[i]]);
        sorted_values[i] = values[order[i]];
      }
      simplex = std::move(sorted_simplex);
      values = std::move(sorted_values);
    }

    if (diameter(simplex) < options.diameter_tol) {
      result.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t v = 0; v < dim; ++v) {
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v][i];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    const Point& worst = simplex[dim];
    const Point reflected = affine(worst, -options.reflection);
    const double f_reflected = eval(reflected);

    if (f_reflected < values[0]) {
      const Point expanded = affine(worst, -options.reflection * options.expansion);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        simplex[dim] = expanded;
        values[dim] = f_expanded;
      } else {
        simplex[dim] = reflected;
        values[dim] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[dim - 1]) {
      simplex[dim] = reflected;
      values[dim] = f_reflected;
      continue;
    }

    // Outside contraction if the reflection improved on the worst vertex,
    // inside contraction otherwise.
    const bool outside = f_reflected < values[dim];
    const Point contracted = outside ? affine(reflected, options.contraction)
                                     : affine(worst, options.contraction);
    const double f_contracted = eval(contracted);
    if (f_contracted < std::min(f_reflected, values[dim])) {
      simplex[dim] = contracted;
      values[dim] = f_contracted;
      continue;
    }

    for (std::size_t v = 1; v <= dim; ++v) {
      for (std::size_t i = 0; i < dim; ++i) {
        simplex[v][i] = simplex[0][i] + options.shrink * (simplex[v][i] - simplex[0][i]);
      }
      values[v] = eval(simplex[v]);
    }
  }

  const auto best = std::min_element(values.begin(), values.end()) - values.begin();
  result.x = simplex[static_cast<std::size_t>(best)];
  result.value = values[static_cast<std::size_t>(best)];
  return result;
}

}  // namespace lgbell
