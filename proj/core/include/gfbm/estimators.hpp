#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gfbm/ensemble.hpp"
#include "gfbm/report.hpp"

namespace gfbm {

struct MeanStdError {
  double mean;
  double std_error;
};

// Mean of Z_{t_i} Z_{t_j} across paths and its standard error. The process is
// centered, so products are averaged without mean subtraction.
MeanStdError empirical_covariance(const PathEnsemble& ensemble, std::size_t i,
                                  std::size_t j);

// Scans guard against comparing an ensemble to parameters it was not
// generated under; Allow is for deliberate negative controls.
enum class MismatchPolicy { Reject, Allow };

// Max |empirical - analytic| / SE over all grid pairs; passes below 5.
// Deterministic entries (both sides exactly zero, e.g. the t=0 row) are not
// counted as comparisons.
VerificationReport covariance_discrepancy_scan(const PathEnsemble& ensemble,
                                               const GfbmParams& params,
                                               MismatchPolicy policy = MismatchPolicy::Reject);

// Per-entry z-test that two ensembles (typically one per sampler) share a
// covariance; passes when every |z| < 5.
VerificationReport cross_method_covariance_check(const PathEnsemble& first,
                                                 const PathEnsemble& second);

// Checks gamma (t-s)^{2H} <= E(Z_t-Z_s)^2 <= nu (t-s)^{2H} over n_pairs random
// pairs in (0,10] with log-uniform gaps, plus deterministic families hugging
// s << t and s -> t that recover the sharp constants (reported as the
// inf/sup probe). Passes with zero violations beyond rounding tolerance.
VerificationReport verify_increment_bounds(const GfbmParams& params, std::size_t n_pairs,
                                           std::uint64_t seed);

// Evaluates the Markov determinant residual over random triples plus the
// structured family (sqrt(t), t, t^2), t in {4, 16, 64}, normalized by
// Var(Z_t)^2. At H = 1/2 passes iff the max residual stays below 1e-10; away
// from 1/2 passes iff a residual above 1e-6 is found (non-Markov witness).
VerificationReport markov_scan(const GfbmParams& params, std::size_t n_triples,
                               std::uint64_t seed);

struct PartialSum {
  std::int64_t n;
  double sum;  // sum of r_z(start, k) for k = 1..n
};

// Cumulative increment-autocovariance sums at log-spaced checkpoints up to
// n_max (term-by-term accumulation; no closed form is consulted).
std::vector<PartialSum> lrd_partial_sums(const GfbmParams& params, std::int64_t start,
                                         std::int64_t n_max);

enum class DependenceKind { ShortRange, LongRange };

struct LrdClassification {
  DependenceKind kind;
  double slope;           // fitted log-log slope of the partial sums (NaN if sums <= 0)
  double expected_slope;  // 2H - 1
  double tail_increment;  // relative change of the sum over the last decade
};

// Declares long-range dependence when the partial sums stay positive and grow
// with log-log slope within +-0.05 of 2H-1 > 0; short-range otherwise.
LrdClassification classify_lrd(const GfbmParams& params,
                               const std::vector<PartialSum>& sums);

struct HurstEstimate {
  double mean;        // across paths
  double dispersion;  // sample standard deviation across paths
  double first_order_mean;  // first-order variations, diagnostic only
  std::size_t n_paths;
  std::size_t n_degenerate;  // paths skipped for zero quadratic variation
};

// Second-order discrete variations estimate: per path, with second
// differences d_k = Z_{k+2} - 2 Z_{k+1} + Z_k at dilations 1 and 2,
// H_hat = log2(V_2 / V_1) / 2. The second-order filter kills the
// nonstationary cross-term the two-sided construction introduces; plain first
// differences (reported as a diagnostic) are biased for b != 0. Invariant
// under path scaling (bitwise so for power-of-two factors). Requires a
// uniform grid of >= 256 points.
HurstEstimate hurst_estimate(const PathEnsemble& ensemble);

// For each epsilon (non-increasing, each >= the local grid step), the max of
// |Z(t) - Z(t0)| / |t - t0| over grid points within [t0-eps, t0+eps]. t0 must
// be an interior grid point. A diagnostic: on a fixed grid the sup is finite
// by construction, so growth under refinement is reported, never asserted.
std::vector<double> difference_quotient_sup(std::span<const double> path,
                                            const TimeGrid& grid, double t0,
                                            std::span<const double> eps_sequence);

struct LocalTimeEstimate {
  std::vector<double> bin_edges;  // n_bins + 1 increasing edges
  std::vector<double> density;    // occupation density per bin
  double horizon;                 // T
  bool degenerate;                // constant path collapsed to one bin

  double occupation_integral() const;  // sum density * binwidth; equals T
  double square_integral() const;      // sum density^2 * binwidth
};

// Histogram occupation density of a path over [0, T]: each of the n-1
// positive-time samples carries weight T/(n-1). The t=0 sample is excluded so
// the occupation identity sum(density * binwidth) = T holds exactly.
LocalTimeEstimate occupation_local_time(std::span<const double> path, const TimeGrid& grid,
                                        std::size_t n_bins);

// Midpoint-rule estimate of the double integral over [0,T]^2 of the density
// of Z_t - Z_s at zero, with the diagonal cells |t - s| < T/n_quad excluded
// (the integrand has an integrable |t-s|^{-H} singularity there).
double density_double_integral(const GfbmParams& params, double t_max, std::size_t n_quad);

// Compares second moments of the dilated ensemble against
// dilation^{2H} * (second moments of the base ensemble) at every positive grid
// point; passes when all z-scores are below 5. The grids themselves must be
// related by the stated dilation.
VerificationReport self_similarity_check(const GfbmParams& params, double dilation,
                                         const PathEnsemble& base,
                                         const PathEnsemble& dilated);

}  // namespace gfbm
