#include "gfbm/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace gfbm {

TimeGrid TimeGrid::uniform(double t_max, std::size_t n_steps) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw std::invalid_argument("time grid: t_max must be finite and > 0");
  }
  if (n_steps < 1) {
    throw std::invalid_argument("time grid: need at least one step");
  }
  const double step = t_max / static_cast<double>(n_steps);
  std::vector<double> points(n_steps + 1);
  for (std::size_t k = 0; k <= n_steps; ++k) {
    points[k] = static_cast<double>(k) * step;
  }
  return TimeGrid(std::move(points), true, step);
}

TimeGrid TimeGrid::from_points(std::vector<double> points) {
  if (points.empty()) {
    throw std::invalid_argument("time grid: empty point list");
  }
  if (points.front() != 0.0) {
    throw std::invalid_argument("time grid: first point must be exactly 0");
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!std::isfinite(points[k])) {
      throw std::invalid_argument("time grid: points must be finite");
    }
    if (k > 0 && !(points[k] > points[k - 1])) {
      throw std::invalid_argument("time grid: points must be strictly increasing");
    }
  }
  if (points.size() == 1) {
    return TimeGrid(std::move(points), false, 0.0);
  }
  const double step = points.back() / static_cast<double>(points.size() - 1);
  bool uniform = true;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const double expected = static_cast<double>(k) * step;
    const double scale = std::max(std::fabs(points[k]), step);
    if (std::fabs(points[k] - expected) > 1e-12 * scale) {
      uniform = false;
      break;
    }
  }
  return TimeGrid(std::move(points), uniform, uniform ? step : 0.0);
}

double TimeGrid::step() const {
  if (!uniform_) {
    throw std::logic_error("time grid: step() is defined only for uniform grids");
  }
  return step_;
}

}  // namespace gfbm
