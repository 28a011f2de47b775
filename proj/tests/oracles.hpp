// Independent re-derivations used as test oracles. Everything here is written
// from the defining decompositions, on purpose NOT by calling the library's
// collected formulas, so a transcription error in the library cannot cancel.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <gfbm/params.hpp>

namespace oracle {

// Standard normal CDF through the C library's erfc; independent of the
// library's rational-approximation quantile.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

inline double pow2h(double x, double hurst) {
    return x == 0.0 ? 0.0 : std::pow(std::fabs(x), 2.0 * hurst);
}

// Cov(B_t, B_s) over the whole line, straight from the definition.
inline double fbm_cov(double hurst, double t, double s) {
    return 0.5 * (pow2h(t, hurst) + pow2h(s, hurst) - pow2h(t - s, hurst));
}

// Cov(Z_t, Z_s) assembled term by term from Z = a B_t + b B_{-t}; no
// algebraic collection.
inline double gfbm_cov(double a, double b, double hurst, double t, double s) {
    return a * a * fbm_cov(hurst, t, s) + b * b * fbm_cov(hurst, -t, -s) +
           a * b * (fbm_cov(hurst, t, -s) + fbm_cov(hurst, -t, s));
}

inline double increment_msq(double a, double b, double hurst, double s, double t) {
    return gfbm_cov(a, b, hurst, t, t) + gfbm_cov(a, b, hurst, s, s) -
           2.0 * gfbm_cov(a, b, hurst, t, s);
}

// Closed form of sum_{n=1..N} Cov(Z_{p+1}-Z_p, Z_{p+n+1}-Z_{p+n}) obtained by
// telescoping the two second differences; checks the term-by-term
// accumulation in the library.
inline double partial_sum_closed_form(const gfbm::GfbmParams& params, std::int64_t p,
                                      std::int64_t n_max) {
    const double a = params.a(), b = params.b(), h = params.hurst();
    auto g = [h](double x) { return x <= 0.0 ? 0.0 : std::pow(x, 2.0 * h); };
    const double nd = static_cast<double>(n_max);
    const double fbm_part = 0.5 * (g(nd + 1) - g(nd) - g(1) + g(0));
    const double q0 = static_cast<double>(2 * p + 2);
    const double q1 = static_cast<double>(2 * p + n_max + 1);
    const double two_sided_part = g(q1 + 1) - g(q1) - g(q0) + g(q0 - 1);
    return (a * a + b * b) * fbm_part - a * b * two_sided_part;
}

// Hand-rolled Cholesky of a small covariance matrix plus a Mersenne Twister:
// a Monte Carlo oracle sharing no code with the library's samplers or RNG.
template <std::size_t N>
class TinyGaussian {
public:
    explicit TinyGaussian(const std::array<std::array<double, N>, N>& cov) {
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                double sum = cov[i][j];
                for (std::size_t k = 0; k < j; ++k) sum -= lower_[i][k] * lower_[j][k];
                if (i == j) {
                    if (sum <= 0.0) throw std::runtime_error("oracle covariance not PD");
                    lower_[i][i] = std::sqrt(sum);
                } else {
                    lower_[i][j] = sum / lower_[j][j];
                }
            }
        }
    }

    template <typename Rng>
    std::array<double, N> draw(Rng& rng) {
        std::normal_distribution<double> normal;
        std::array<double, N> g{};
        for (auto& x : g) x = normal(rng);
        std::array<double, N> out{};
        for (std::size_t i = 0; i < N; ++i) {
            double sum = 0.0;
            for (std::size_t k = 0; k <= i; ++k) sum += lower_[i][k] * g[k];
            out[i] = sum;
        }
        return out;
    }

private:
    std::array<std::array<double, N>, N> lower_{};
};

struct MeanSe {
    double mean;
    double se;
};

inline MeanSe mean_and_se(const std::vector<double>& xs) {
    const double n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= (n - 1.0);
    return {mean, std::sqrt(var / n)};
}

}  // namespace oracle
