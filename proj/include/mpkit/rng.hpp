#pragma once

#include <array>
#include <cstdint>

namespace mpkit {

// Simulation RNG, fixed once for reproducibility:
//   * xoshiro256++ as the 64-bit generator, its state filled by splitmix64;
//   * uniforms strictly inside (0,1) via (k + 0.5) * 2^-53;
//   * normal variates by the inverse-CDF method (Wichura's AS 241),
//     exactly one uniform consumed per variate;
//   * independent substreams through derive_stream, so parallel work units
//     never share a stream and execution order cannot change results.
// The draw sequence is part of the library contract; none of these choices
// may change without invalidating every seeded output.

uint64_t splitmix64_next(uint64_t& state);

// Decorrelated child seed for work unit (salt_a, salt_b) of a base seed.
uint64_t derive_stream(uint64_t seed, uint64_t salt_a, uint64_t salt_b = 0);

// Standard normal quantile (AS 241 PPND16, double precision). Requires
// 0 < u < 1.
double normal_quantile(double u);

class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(uint64_t seed);

  uint64_t next();
  double uniform01();        // strictly inside (0, 1)
  double standard_normal();  // normal_quantile(uniform01())

 private:
  std::array<uint64_t, 4> state_;
};

}  // namespace mpkit
