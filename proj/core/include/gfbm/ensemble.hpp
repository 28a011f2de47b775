#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gfbm/grid.hpp"
#include "gfbm/params.hpp"

namespace gfbm {

enum class SampleMethod { Cholesky, Circulant };

std::string to_string(SampleMethod method);
SampleMethod sample_method_from_string(const std::string& name);

struct SampleSpec {
  std::size_t n_paths = 1;
  std::uint64_t seed = 0;
  SampleMethod method = SampleMethod::Cholesky;
};

// What actually happened while sampling: the seed everything derived from,
// plus the numerical fallbacks taken, so a run can be audited and replayed.
struct SampleProvenance {
  SampleMethod method = SampleMethod::Cholesky;
  std::uint64_t seed = 0;
  double jitter = 0.0;              // Cholesky: diagonal shift that made LL^T succeed
  std::size_t embedding_size = 0;   // Circulant: circulant dimension used
  std::size_t embedding_doublings = 0;  // Circulant: pad doublings beyond the base size
  double min_eigenvalue = 0.0;      // Circulant: smallest embedding eigenvalue
  double max_eigenvalue = 0.0;
};

// Simulated sample paths over a grid, one row per path, column k at grid
// point k. Column 0 is identically zero (the process starts at 0
// deterministically). Storage is row-major.
class PathEnsemble {
public:
  PathEnsemble(GfbmParams params, TimeGrid grid, SampleSpec spec,
               SampleProvenance provenance);

  const GfbmParams& params() const noexcept { return params_; }
  const TimeGrid& grid() const noexcept { return grid_; }
  const SampleSpec& spec() const noexcept { return spec_; }
  const SampleProvenance& provenance() const noexcept { return provenance_; }

  std::size_t n_paths() const noexcept { return spec_.n_paths; }
  std::size_t n_points() const noexcept { return grid_.size(); }

  double value(std::size_t path, std::size_t point) const {
    return values_[path * grid_.size() + point];
  }
  std::span<const double> path(std::size_t index) const {
    return {values_.data() + index * grid_.size(), grid_.size()};
  }

  // Writable row for the samplers filling the ensemble in.
  std::span<double> mutable_path(std::size_t index) {
    return {values_.data() + index * grid_.size(), grid_.size()};
  }

private:
  GfbmParams params_;
  TimeGrid grid_;
  SampleSpec spec_;
  SampleProvenance provenance_;
  std::vector<double> values_;
};

}  // namespace gfbm
