#pragma once

#include <cstdint>

#include "gfbm/params.hpp"

namespace gfbm {

// Closed-form second-order theory of Z_t = a*B_t + b*B_{-t}. Everything in
// this header is a pure double-precision function; sampling and Monte Carlo
// live in separate headers.

// |x|^{2H} with the exact-zero shortcut 0 -> 0. Evaluated as exp(2H*ln|x|) so
// negative arguments are handled identically on every platform.
double abs_pow_2h(double x, double hurst);

// Cov(B_t, B_s) of two-sided fractional Brownian motion:
// (|t|^{2H} + |s|^{2H} - |t-s|^{2H}) / 2. Valid for all real t, s.
double fbm_covariance(double hurst, double t, double s);

// Sub-fractional covariance S(t,s) = t^{2H} + s^{2H} - ((t+s)^{2H} + |t-s|^{2H})/2
// for t, s >= 0.
double sfbm_covariance(double hurst, double t, double s);

// Cov(Z_t, Z_s) for t, s >= 0:
// (a+b)^2 (t^{2H}+s^{2H})/2 - ab (t+s)^{2H} - (a^2+b^2) |t-s|^{2H} / 2.
double covariance(const GfbmParams& params, double t, double s);

// Var(Z_t) = c(a,b,H) t^{2H}.
double variance(const GfbmParams& params, double t);

// E(Z_t - Z_s)^2 = (a^2+b^2)|t-s|^{2H} - 2^{2H} ab (t^{2H}+s^{2H}) + 2ab (t+s)^{2H}.
// Arguments may come in either order; both must be >= 0.
double increment_second_moment(const GfbmParams& params, double s, double t);

struct IncrementBounds {
  double lower;  // sharp constant below E(Z_t - Z_s)^2 / (t-s)^{2H}
  double upper;  // sharp constant above it
  Regime regime;
};

// The sharp constants bracketing the normalized increment second moment over
// 0 <= s < t. {lower, upper} is always {c(a,b,H), a^2+b^2} as a set; which is
// which depends on the regime (see Regime).
IncrementBounds increment_bounds(const GfbmParams& params);

// Cov(Z_s,Z_u) Var(Z_t) - Cov(Z_s,Z_t) Cov(Z_t,Z_u) for 0 < s < t < u.
// A Gaussian process is Markov iff this vanishes for all such triples; here
// that happens exactly at H = 1/2.
double markov_residual(const GfbmParams& params, double s, double t, double u);

// Autocovariance of unit-step fBm increments at lag n >= 1:
// ((n+1)^{2H} - 2 n^{2H} + (n-1)^{2H}) / 2. Uses an expm1/log1p form of the
// second difference, accurate to ~1e-9 relative even at n = 10^6 where the
// naive three-term sum has lost most of its digits.
double r_b(double hurst, std::int64_t lag);

// Autocovariance of unit-step Z increments, Cov(Z_{p+1}-Z_p, Z_{p+n+1}-Z_{p+n})
// = (a^2+b^2) r_b(n) - ab f_p(n),
// f_p(n) = (2p+n+2)^{2H} - 2(2p+n+1)^{2H} + (2p+n)^{2H}. Accepts start >= 0
// (the formula extends to p = 0 even though stationarity arguments start at 1).
double r_z(const GfbmParams& params, std::int64_t start, std::int64_t lag);

// Two-term large-p approximation to r_z:
// (a^2+b^2) r_b(n) - ab 2^{2H-1} H(2H-1) p^{2(H-1)}. Diagnostic companion for
// the p -> infinity limit; requires start >= 1.
double rz_asymptote(const GfbmParams& params, std::int64_t start, std::int64_t lag);

// E exp(iu(Z_t - Z_s)) = exp(-u^2 E(Z_t-Z_s)^2 / 2); real-valued since the
// increment is centered Gaussian.
double increment_char_function(const GfbmParams& params, double s, double t, double u);

// Gaussian density of Z_t - Z_s at x. Requires s != t (nondegenerate variance).
double increment_density(const GfbmParams& params, double s, double t, double x);

}  // namespace gfbm
