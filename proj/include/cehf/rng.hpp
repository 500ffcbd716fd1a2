#pragma once

#include <cstdint>

namespace cehf {

/// xoshiro256** seeded through splitmix64. All derived draws below use only
/// integer arithmetic so a given seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform01();
  /// Uniform integer in [lo, hi] (inclusive) by rejection sampling.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t s_[4];
};

/// Derives an independent stream seed for sub-task `index` of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace cehf
