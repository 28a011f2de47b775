#include "gfbm/ensemble.hpp"

#include <stdexcept>

namespace gfbm {

std::string to_string(SampleMethod method) {
  return method == SampleMethod::Cholesky ? "cholesky" : "circulant";
}

SampleMethod sample_method_from_string(const std::string& name) {
  if (name == "cholesky") return SampleMethod::Cholesky;
  if (name == "circulant") return SampleMethod::Circulant;
  throw std::invalid_argument("unknown sample method '" + name +
                              "' (expected cholesky or circulant)");
}

PathEnsemble::PathEnsemble(GfbmParams params, TimeGrid grid, SampleSpec spec,
                           SampleProvenance provenance)
    : params_(params),
      grid_(std::move(grid)),
      spec_(spec),
      provenance_(provenance),
      values_(spec.n_paths * grid_.size(), 0.0) {
  if (spec_.n_paths < 1) {
    throw std::invalid_argument("path ensemble: need at least one path");
  }
}

}  // namespace gfbm
