#pragma once

#include <array>
#include <cstdint>

namespace gfbm {

// Philox 4x64 keyed counter permutation, 10 rounds. Counter-based generation
// is what makes every sampler here reproducible under any worker
// partitioning: the value of draw k in stream j depends only on (key, j, k),
// never on how many draws other streams have consumed.
std::array<std::uint64_t, 4> philox4x64_block(std::array<std::uint64_t, 4> counter,
                                              std::array<std::uint64_t, 2> key);

// Inverse standard normal CDF (Wichura's PPND16 rational approximation),
// accurate to ~1e-16 relative over p in (0,1). Out-of-range p is a domain
// error.
double inverse_normal_cdf(double p);

// One independent substream of the seeded generator.
//
// Derivation contract: key = (seed, domain), counter = (block, stream, 0, 0).
// `stream` is the substream index (samplers use the path index), `domain`
// separates unrelated uses of one seed (0 = path noise; estimators and seed
// derivation use nonzero domains). Draw k of a stream reads word k%4 of block
// k/4, so streams never overlap and a stream's draws are position-addressable.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0,
                        std::uint64_t domain = 0);

  std::uint64_t next_u64();

  // Uniform on (0,1): top 53 bits plus a half-ulp offset, so 0 and 1 are
  // unreachable and the inverse-CDF transform below never sees an endpoint.
  double next_uniform();

  // Standard normal via inverse-CDF transform (monotone in the uniform draw,
  // which keeps cross-seed regressions stable; never Box-Muller).
  double next_normal();

private:
  std::array<std::uint64_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 4> buffer_{};
  unsigned position_ = 4;
};

}  // namespace gfbm
