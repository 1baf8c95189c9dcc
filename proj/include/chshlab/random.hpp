#pragma once

#include <cstdint>
#include <random>

namespace chshlab {

/// Seeded stream generator: std::mt19937_64 initialized through std::seed_seq
/// from (seed, stream). Both are fully specified by the C++ standard, so a
/// given (seed, stream) pair yields the same sequence on every platform.
/// Distinct stream ids give independent per-chunk streams for counter-based
/// parallel work.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bit() { return (engine_() >> 63) != 0; }

  /// Standard normal via Box-Muller on uniform().
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace chshlab
