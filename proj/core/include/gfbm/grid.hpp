#pragma once

#include <cstddef>
#include <vector>

namespace gfbm {

// Ordered sampling times on [0, T]. The first point is always exactly 0
// (where the process is deterministically 0); uniformity is detected once at
// construction so samplers can branch on it.
class TimeGrid {
public:
  // {0, step, 2*step, ..., n_steps*step} with step = t_max / n_steps.
  static TimeGrid uniform(double t_max, std::size_t n_steps);

  // Arbitrary strictly increasing times starting at exactly 0. Uniformity is
  // flagged when every point matches k*step to relative tolerance 1e-12.
  static TimeGrid from_points(std::vector<double> points);

  const std::vector<double>& points() const noexcept { return points_; }
  double point(std::size_t k) const { return points_.at(k); }
  std::size_t size() const noexcept { return points_.size(); }
  double t_max() const noexcept { return points_.back(); }

  bool is_uniform() const noexcept { return uniform_; }

  // Grid spacing; only meaningful for uniform grids.
  double step() const;

private:
  TimeGrid(std::vector<double> points, bool uniform, double step)
      : points_(std::move(points)), uniform_(uniform), step_(step) {}

  std::vector<double> points_;
  bool uniform_;
  double step_;
};

}  // namespace gfbm
