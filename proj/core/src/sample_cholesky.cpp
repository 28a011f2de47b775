#include "gfbm/sample_cholesky.hpp"

#include <sstream>
#include <stdexcept>

#include "gfbm/errors.hpp"
#include "gfbm/kernel.hpp"
#include "gfbm/rng.hpp"

namespace gfbm {

Eigen::MatrixXd build_covariance_matrix(const GfbmParams& params, const TimeGrid& grid) {
  const auto& points = grid.points();
  const Eigen::Index n = static_cast<Eigen::Index>(grid.size()) - 1;
  Eigen::MatrixXd cov(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double value = covariance(params, points[i + 1], points[j + 1]);
      cov(i, j) = value;
      cov(j, i) = value;
    }
  }
  return cov;
}

CholeskyFactor cholesky_factor(const Eigen::MatrixXd& cov) {
  if (cov.rows() != cov.cols()) {
    throw std::invalid_argument("cholesky_factor: matrix must be square");
  }
  if (cov.rows() == 0) {
    return {Eigen::MatrixXd(0, 0), 0.0};
  }
  const double scale = cov.trace() / static_cast<double>(cov.rows());
  for (const double level : {0.0, 1e-12, 1e-10, 1e-8}) {
    const double eps = level * scale;
    Eigen::MatrixXd shifted = cov;
    shifted.diagonal().array() += eps;
    Eigen::LLT<Eigen::MatrixXd> llt(shifted);
    if (llt.info() == Eigen::Success) {
      Eigen::MatrixXd lower = llt.matrixL();
      if (lower.allFinite()) {
        return {std::move(lower), eps};
      }
    }
  }
  std::ostringstream msg;
  msg << "covariance factorization failed at maximum jitter (1e-8 * trace/n) for a "
      << cov.rows() << "x" << cov.cols() << " matrix";
  throw not_positive_definite_error(msg.str());
}

CholeskySampler::CholeskySampler(const GfbmParams& params, const TimeGrid& grid)
    : params_(params), grid_(grid), factor_{Eigen::MatrixXd(0, 0), 0.0} {
  const std::size_t n = grid.size() - 1;
  if (n > kMaxPoints) {
    std::ostringstream msg;
    msg << "cholesky sampler: grid has " << n << " positive points, above the cap of "
        << kMaxPoints << "; use the circulant sampler for long uniform grids";
    throw std::invalid_argument(msg.str());
  }
  if (n == 0) return;
  try {
    factor_ = cholesky_factor(build_covariance_matrix(params, grid));
  } catch (const not_positive_definite_error& err) {
    std::ostringstream msg;
    msg << err.what() << " [a=" << params.a() << " b=" << params.b()
        << " H=" << params.hurst() << " grid points=" << grid.size()
        << " t_max=" << grid.t_max() << "]";
    throw not_positive_definite_error(msg.str());
  }
}

void CholeskySampler::generate_path(std::uint64_t seed, std::uint64_t path_index,
                                    std::span<double> out) const {
  const Eigen::Index n = factor_.lower.rows();
  if (out.size() != grid_.size()) {
    throw std::invalid_argument("cholesky sampler: output span has wrong length");
  }
  out[0] = 0.0;
  if (n == 0) return;
  RandomStream stream(seed, path_index);
  Eigen::VectorXd normals(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    normals[k] = stream.next_normal();
  }
  const Eigen::VectorXd path = factor_.lower.triangularView<Eigen::Lower>() * normals;
  for (Eigen::Index k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k) + 1] = path[k];
  }
}

PathEnsemble sample_cholesky(const GfbmParams& params, const TimeGrid& grid,
                             const SampleSpec& spec) {
  if (spec.method != SampleMethod::Cholesky) {
    throw std::invalid_argument("sample_cholesky: spec.method must be Cholesky");
  }
  CholeskySampler sampler(params, grid);
  SampleProvenance provenance;
  provenance.method = SampleMethod::Cholesky;
  provenance.seed = spec.seed;
  provenance.jitter = sampler.jitter();
  PathEnsemble ensemble(params, grid, spec, provenance);
  for (std::size_t p = 0; p < spec.n_paths; ++p) {
    sampler.generate_path(spec.seed, p, ensemble.mutable_path(p));
  }
  return ensemble;
}

}  // namespace gfbm
