#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gfbm/params.hpp"
#include "gfbm/report.hpp"

namespace gfbm {

// Knobs for the end-to-end verification suite. Defaults are sized to finish
// in a few seconds while keeping every Monte Carlo band meaningful.
struct VerifyOptions {
  std::vector<std::string> checks;  // empty = run everything
  bool inject_mismatch = false;     // negative control: sabotage the covariance scans

  std::size_t n_paths = 20000;      // ensembles behind the covariance checks
  std::size_t grid_points = 16;     // positive grid points for those ensembles
  double t_max = 1.0;
  std::size_t n_pairs = 10000;      // increment-bound scan
  std::size_t n_triples = 200;      // markov scan
  std::int64_t lrd_n_max = 1000000;
  std::size_t hurst_paths = 50;
  std::size_t hurst_points = 8192;
  std::size_t local_time_paths = 100;
  std::size_t local_time_points = 4096;
  std::size_t local_time_bins = 128;
  std::size_t quad_base = 256;      // density integral runs at base..base*8
};

// The recognized check names, in execution order.
const std::vector<std::string>& verification_check_names();

// Runs the selected checks. Every stochastic step derives its own seed from
// (seed, check index), recorded in the report details, so any single check is
// reproducible in isolation. A check that throws is reported as failed with
// the error message in its details rather than aborting the suite. Unknown
// check names throw std::invalid_argument.
std::vector<VerificationReport> run_verification_suite(const GfbmParams& params,
                                                       std::uint64_t seed,
                                                       const VerifyOptions& options = {});

}  // namespace gfbm
