#include "gfbm/sample_circulant.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gfbm/errors.hpp"
#include "gfbm/kernel.hpp"
#include "gfbm/rng.hpp"

namespace gfbm {

double fgn_autocovariance(double hurst, std::int64_t lag, double step) {
  if (!(step > 0.0)) {
    throw std::invalid_argument("fgn_autocovariance requires step > 0");
  }
  const std::int64_t k = lag < 0 ? -lag : lag;
  const double scale = abs_pow_2h(step, hurst);
  if (k == 0) return scale;
  return scale * r_b(hurst, k);
}

struct CirculantSampler::Fft {
  std::size_t size;
  fftw_complex* spectrum;
  double* series;
  fftw_plan forward;   // series -> spectrum (r2c), used once for eigenvalues
  fftw_plan backward;  // spectrum -> series (c2r), executed per path

  explicit Fft(std::size_t m)
      : size(m),
        spectrum(fftw_alloc_complex(m / 2 + 1)),
        series(fftw_alloc_real(m)),
        forward(nullptr),
        backward(nullptr) {
    if (spectrum == nullptr || series == nullptr) {
      fftw_free(spectrum);
      fftw_free(series);
      throw std::bad_alloc();
    }
    const int im = static_cast<int>(m);
    forward = fftw_plan_dft_r2c_1d(im, series, spectrum, FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(im, spectrum, series, FFTW_ESTIMATE);
  }

  ~Fft() {
    if (forward != nullptr) fftw_destroy_plan(forward);
    if (backward != nullptr) fftw_destroy_plan(backward);
    fftw_free(spectrum);
    fftw_free(series);
  }

  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;
};

CirculantSampler::CirculantSampler(const GfbmParams& params, const TimeGrid& grid)
    : params_(params), grid_(grid) {
  const std::size_t n = grid.size() - 1;
  if (n == 0) return;  // single-point grid: nothing stochastic to set up
  if (!grid.is_uniform()) {
    throw std::invalid_argument(
        "circulant sampler requires a uniform grid (use the cholesky sampler "
        "for irregular time points)");
  }
  const double step = grid.step();
  const double hurst = params.hurst();

  std::size_t m = 1;
  while (m < 4 * n) m <<= 1;

  for (;; m <<= 1, ++doublings_) {
    if (m > kMaxEmbedding) {
      std::ostringstream msg;
      msg << "circulant embedding kept a negative eigenvalue at the padding cap "
          << kMaxEmbedding << " (H=" << hurst << ", " << n
          << " grid steps, min eigenvalue " << min_eigenvalue_ << ")";
      throw embedding_error(msg.str());
    }
    auto fft = std::make_unique<Fft>(m);
    const std::size_t half = m / 2;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t folded = std::min(j, m - j);
      fft->series[j] = fgn_autocovariance(hurst, static_cast<std::int64_t>(folded), step);
    }
    fftw_execute(fft->forward);

    double min_eig = std::numeric_limits<double>::infinity();
    double max_eig = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k <= half; ++k) {
      const double eig = fft->spectrum[k][0];
      min_eig = std::min(min_eig, eig);
      max_eig = std::max(max_eig, eig);
    }
    min_eigenvalue_ = min_eig;
    max_eigenvalue_ = max_eig;
    if (min_eig < -1e-9 * max_eig) continue;  // pad further

    // Spectral amplitudes: frequency k carries variance eig_k/m split across
    // its real and imaginary draws; the self-conjugate ends (k = 0, m/2) are
    // purely real and carry it in one draw.
    amplitude_.assign(half + 1, 0.0);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k <= half; ++k) {
      const double eig = std::max(fft->spectrum[k][0], 0.0);
      const double share = (k == 0 || k == half) ? eig * inv_m : 0.5 * eig * inv_m;
      amplitude_[k] = std::sqrt(share);
    }
    embedding_size_ = m;
    fft_ = std::move(fft);
    return;
  }
}

CirculantSampler::~CirculantSampler() = default;
CirculantSampler::CirculantSampler(CirculantSampler&&) noexcept = default;
CirculantSampler& CirculantSampler::operator=(CirculantSampler&&) noexcept = default;

void CirculantSampler::generate_path(std::uint64_t seed, std::uint64_t path_index,
                                     std::span<double> out) {
  if (out.size() != grid_.size()) {
    throw std::invalid_argument("circulant sampler: output span has wrong length");
  }
  out[0] = 0.0;
  const std::size_t n = grid_.size() - 1;
  if (n == 0) return;

  // Hermitian spectral noise: draw order is fixed (real, then imaginary, by
  // ascending frequency) so a path is a pure function of (seed, path_index).
  RandomStream stream(seed, path_index);
  const std::size_t half = embedding_size_ / 2;
  fftw_complex* spectrum = fft_->spectrum;
  spectrum[0][0] = amplitude_[0] * stream.next_normal();
  spectrum[0][1] = 0.0;
  for (std::size_t k = 1; k < half; ++k) {
    spectrum[k][0] = amplitude_[k] * stream.next_normal();
    spectrum[k][1] = amplitude_[k] * stream.next_normal();
  }
  spectrum[half][0] = amplitude_[half] * stream.next_normal();
  spectrum[half][1] = 0.0;
  fftw_execute(fft_->backward);

  // series[0 .. 2n-1] are now the fGn increments over [-n*step, n*step]:
  // series[j] covers [(j-n)*step, (j-n+1)*step]. Integrate away from zero in
  // both directions and combine the two sides.
  const double* increments = fft_->series;
  const double a = params_.a();
  const double b = params_.b();
  double forward_sum = 0.0;   // B_{k*step}
  double backward_sum = 0.0;  // B_{-k*step}
  for (std::size_t k = 1; k <= n; ++k) {
    forward_sum += increments[n + k - 1];
    backward_sum -= increments[n - k];
    out[k] = a * forward_sum + b * backward_sum;
  }
}

PathEnsemble sample_circulant(const GfbmParams& params, const TimeGrid& grid,
                              const SampleSpec& spec) {
  if (spec.method != SampleMethod::Circulant) {
    throw std::invalid_argument("sample_circulant: spec.method must be Circulant");
  }
  CirculantSampler sampler(params, grid);
  SampleProvenance provenance;
  provenance.method = SampleMethod::Circulant;
  provenance.seed = spec.seed;
  provenance.embedding_size = sampler.embedding_size();
  provenance.embedding_doublings = sampler.embedding_doublings();
  provenance.min_eigenvalue = sampler.min_eigenvalue();
  provenance.max_eigenvalue = sampler.max_eigenvalue();
  PathEnsemble ensemble(params, grid, spec, provenance);
  for (std::size_t p = 0; p < spec.n_paths; ++p) {
    sampler.generate_path(spec.seed, p, ensemble.mutable_path(p));
  }
  return ensemble;
}

}  // namespace gfbm
