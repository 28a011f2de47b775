#pragma once

#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "gfbm/ensemble.hpp"

namespace gfbm {

// Covariance matrix over the strictly positive grid points. The t = 0 point
// is excluded: Z_0 = 0 with zero variance would make the matrix singular, so
// samplers prepend the deterministic zero instead.
Eigen::MatrixXd build_covariance_matrix(const GfbmParams& params, const TimeGrid& grid);

struct CholeskyFactor {
  Eigen::MatrixXd lower;
  double jitter;  // diagonal shift that made the factorization succeed
};

// L with L L^T = cov + eps I. eps escalates through {0, 1e-12, 1e-10, 1e-8}
// times trace/n until the factorization succeeds; the value used is returned.
// Failure at the top of the ladder throws not_positive_definite_error.
CholeskyFactor cholesky_factor(const Eigen::MatrixXd& cov);

// Exact-in-distribution sampler: path = L g with g i.i.d. standard normal
// drawn from substream `path_index` of the seed. O(n^2) per path after an
// O(n^3) setup, so grids beyond 4096 positive points are refused up front
// (use the circulant sampler for long uniform grids).
class CholeskySampler {
public:
  static constexpr std::size_t kMaxPoints = 4096;

  CholeskySampler(const GfbmParams& params, const TimeGrid& grid);

  // Fills grid.size() values, leading zero included. Deterministic in
  // (params, grid, seed, path_index) alone.
  void generate_path(std::uint64_t seed, std::uint64_t path_index,
                     std::span<double> out) const;

  double jitter() const noexcept { return factor_.jitter; }

private:
  GfbmParams params_;
  TimeGrid grid_;
  CholeskyFactor factor_;
};

PathEnsemble sample_cholesky(const GfbmParams& params, const TimeGrid& grid,
                             const SampleSpec& spec);

}  // namespace gfbm
