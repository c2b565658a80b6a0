// Counter-based deterministic random number generator.
//
// Every consumer owns an independent stream identified by (seed, stream_id).
// The n-th output is a pure function of (seed, stream_id, n), so draw order
// across streams never matters and results are bit-reproducible on every
// platform. The algorithm is fixed for the life of the project because
// golden test vectors depend on it:
//
//   key   = mix(mix(seed) ^ mix(stream_id * 0x9E3779B97F4A7C15 + 1))
//   out_n = mix(key + (n+1) * 0x9E3779B97F4A7C15)
//
// where mix() is the splitmix64 finalizer. Uniform doubles take the top
// 53 bits; Gaussians use Box-Muller on two consecutive uniforms (no
// caching, so the counter advances by exactly 2 per Gaussian).
#pragma once

#include <cstdint>

namespace rootcomm {

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  // Next raw 64-bit word.
  std::uint64_t next_u64();

  // Uniform in [0, 1).
  double uniform();
  // Uniform in [lo, hi).
  double uniform(double lo, double hi);
  // Gaussian with the given mean and standard deviation.
  double gaussian(double mean, double stddev);

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace rootcomm
