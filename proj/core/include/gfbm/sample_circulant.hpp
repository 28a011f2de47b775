#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "gfbm/ensemble.hpp"

namespace gfbm {

// Autocovariance of the stationary increment sequence B_{(j+1)step} - B_{j step}
// of two-sided fBm, at integer lag: step^{2H} ((|k|+1)^{2H} - 2|k|^{2H} + (|k|-1)^{2H})/2.
// Valid for every integer lag, negative included (the sequence is stationary
// over the whole line, which is what makes the two-sided construction exact).
double fgn_autocovariance(double hurst, std::int64_t lag, double step);

// Exact sampler for uniform grids via circulant embedding. The 2n increments
// spanning [-n*step, n*step] are drawn jointly as stationary Gaussian noise:
// the autocovariance is embedded in a circulant of power-of-two size >= 4n,
// its spectrum checked nonnegative (padding doubles until it is, up to 2^26,
// then embedding_error), and each path costs one length-m FFT. Increments are
// then cumulated away from 0 in both directions and combined as a*B_t + b*B_{-t}.
class CirculantSampler {
public:
  static constexpr std::size_t kMaxEmbedding = std::size_t{1} << 26;

  CirculantSampler(const GfbmParams& params, const TimeGrid& grid);
  ~CirculantSampler();

  CirculantSampler(CirculantSampler&&) noexcept;
  CirculantSampler& operator=(CirculantSampler&&) noexcept;
  CirculantSampler(const CirculantSampler&) = delete;
  CirculantSampler& operator=(const CirculantSampler&) = delete;

  // Fills grid.size() values, leading zero included. Deterministic in
  // (params, grid, seed, path_index). Uses internal FFT buffers: one instance
  // must not run concurrent calls (workers each build their own instance;
  // results depend only on the arguments, so any partitioning agrees).
  void generate_path(std::uint64_t seed, std::uint64_t path_index, std::span<double> out);

  std::size_t embedding_size() const noexcept { return embedding_size_; }
  std::size_t embedding_doublings() const noexcept { return doublings_; }
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }
  double max_eigenvalue() const noexcept { return max_eigenvalue_; }

private:
  struct Fft;  // FFTW plan + buffers

  GfbmParams params_;
  TimeGrid grid_;
  std::size_t embedding_size_ = 0;
  std::size_t doublings_ = 0;
  double min_eigenvalue_ = 0.0;
  double max_eigenvalue_ = 0.0;
  std::vector<double> amplitude_;  // per-frequency scale for the spectral draws
  std::unique_ptr<Fft> fft_;
};

PathEnsemble sample_circulant(const GfbmParams& params, const TimeGrid& grid,
                              const SampleSpec& spec);

}  // namespace gfbm
