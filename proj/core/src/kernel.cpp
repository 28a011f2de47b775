#include "gfbm/kernel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gfbm {
namespace {

void check_hurst(double hurst) {
  if (!(hurst > 0.0) || !(hurst < 1.0)) {
    std::ostringstream msg;
    msg << "Hurst parameter must lie strictly in (0, 1), got " << hurst;
    throw std::invalid_argument(msg.str());
  }
}

void check_time(double value, const char* name) {
  if (!(value >= 0.0)) {
    std::ostringstream msg;
    msg << name << " must be >= 0, got " << value;
    throw std::invalid_argument(msg.str());
  }
}

// (c+1)^{2H} - 2 c^{2H} + (c-1)^{2H} for c >= 1, written so the two outer
// terms are differenced against the middle one before the O(c^{2H}) magnitude
// enters: c^{2H} * (expm1(2H log1p(1/c)) + expm1(2H log1p(-1/c))). The naive
// three-term sum loses ~2(1-H)log2(c) bits to cancellation; this form keeps
// relative accuracy ~eps*c even at c = 10^6. At c = 1 it degenerates cleanly:
// log1p(-1) = -inf, expm1(-inf) = -1, giving 2^{2H} - 2 exactly.
double second_difference_2h(double center, double hurst) {
  // Second difference of a linear function is identically zero; the expm1
  // route below would leave ~1e-17 residue that downstream exact-zero
  // identities (r_z at H = 1/2) would inherit.
  if (hurst == 0.5) return 0.0;
  const double u = 1.0 / center;
  const double up = std::expm1(2.0 * hurst * std::log1p(u));
  const double dn = std::expm1(2.0 * hurst * std::log1p(-u));
  return std::exp(2.0 * hurst * std::log(center)) * (up + dn);
}

}  // namespace

double abs_pow_2h(double x, double hurst) {
  if (x == 0.0) return 0.0;
  return std::exp(2.0 * hurst * std::log(std::fabs(x)));
}

double fbm_covariance(double hurst, double t, double s) {
  check_hurst(hurst);
  return 0.5 * (abs_pow_2h(s, hurst) + abs_pow_2h(t, hurst) - abs_pow_2h(t - s, hurst));
}

double sfbm_covariance(double hurst, double t, double s) {
  check_hurst(hurst);
  check_time(t, "t");
  check_time(s, "s");
  return abs_pow_2h(t, hurst) + abs_pow_2h(s, hurst) -
         0.5 * (abs_pow_2h(t + s, hurst) + abs_pow_2h(t - s, hurst));
}

double covariance(const GfbmParams& params, double t, double s) {
  check_time(t, "t");
  check_time(s, "s");
  // Z_0 = 0 almost surely, so anything against t = 0 is exactly zero. The
  // three-term formula below only cancels to ~1e-18 there (the coefficient
  // products round differently), which matters to callers comparing against
  // deterministic zeros.
  if (t == 0.0 || s == 0.0) return 0.0;
  const double a = params.a();
  const double b = params.b();
  const double h = params.hurst();
  const double sum_sq = 0.5 * (a + b) * (a + b);
  return sum_sq * (abs_pow_2h(s, h) + abs_pow_2h(t, h)) -
         a * b * abs_pow_2h(t + s, h) -
         0.5 * (a * a + b * b) * abs_pow_2h(t - s, h);
}

double variance(const GfbmParams& params, double t) {
  check_time(t, "t");
  return params.variance_coefficient() * abs_pow_2h(t, params.hurst());
}

double increment_second_moment(const GfbmParams& params, double s, double t) {
  check_time(t, "t");
  check_time(s, "s");
  if (s > t) std::swap(s, t);
  if (s == t) return 0.0;
  const double a = params.a();
  const double b = params.b();
  const double h = params.hurst();
  const double ab = a * b;
  return (a * a + b * b) * abs_pow_2h(t - s, h) -
         std::exp2(2.0 * h) * ab * (abs_pow_2h(t, h) + abs_pow_2h(s, h)) +
         2.0 * ab * abs_pow_2h(t + s, h);
}

IncrementBounds increment_bounds(const GfbmParams& params) {
  const double sum_sq = params.a() * params.a() + params.b() * params.b();
  const double coef = params.variance_coefficient();
  const Regime regime = params.regime();
  if (regime == Regime::C) return {coef, sum_sq, regime};
  return {sum_sq, coef, regime};
}

double markov_residual(const GfbmParams& params, double s, double t, double u) {
  if (!(0.0 < s && s < t && t < u)) {
    throw std::invalid_argument("markov_residual requires 0 < s < t < u");
  }
  return covariance(params, s, u) * variance(params, t) -
         covariance(params, s, t) * covariance(params, t, u);
}

double r_b(double hurst, std::int64_t lag) {
  check_hurst(hurst);
  if (lag < 1) throw std::invalid_argument("r_b requires lag >= 1");
  return 0.5 * second_difference_2h(static_cast<double>(lag), hurst);
}

double r_z(const GfbmParams& params, std::int64_t start, std::int64_t lag) {
  if (start < 0) throw std::invalid_argument("r_z requires start >= 0");
  if (lag < 1) throw std::invalid_argument("r_z requires lag >= 1");
  const double a = params.a();
  const double b = params.b();
  const double f = second_difference_2h(static_cast<double>(2 * start + lag + 1),
                                        params.hurst());
  return (a * a + b * b) * r_b(params.hurst(), lag) - a * b * f;
}

double rz_asymptote(const GfbmParams& params, std::int64_t start, std::int64_t lag) {
  if (start < 1) throw std::invalid_argument("rz_asymptote requires start >= 1");
  if (lag < 1) throw std::invalid_argument("rz_asymptote requires lag >= 1");
  const double a = params.a();
  const double b = params.b();
  const double h = params.hurst();
  const double correction = std::exp2(2.0 * h - 1.0) * h * (2.0 * h - 1.0) *
                            std::exp(2.0 * (h - 1.0) * std::log(static_cast<double>(start)));
  return (a * a + b * b) * r_b(h, lag) - a * b * correction;
}

double increment_char_function(const GfbmParams& params, double s, double t, double u) {
  return std::exp(-0.5 * u * u * increment_second_moment(params, s, t));
}

double increment_density(const GfbmParams& params, double s, double t, double x) {
  if (s == t) {
    throw std::invalid_argument("increment_density requires s != t (degenerate variance)");
  }
  const double var = increment_second_moment(params, s, t);
  return std::exp(-0.5 * x * x / var) / std::sqrt(2.0 * std::numbers::pi * var);
}

}  // namespace gfbm
