#pragma once

#include <cstdint>

namespace movsig {

/// Counter-style deterministic generator built on the SplitMix64 mixer.
/// Substream `stream` of a given seed starts from mix(mix(seed) + stream),
/// so every draw is a pure function of (seed, stream, position). Trials
/// keyed by substream produce identical values under any thread schedule.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform01();

  /// Uniform in [a, b).
  double uniform(double a, double b);

  /// Uniform angle in [-pi/2, pi/2).
  double angle();

 private:
  std::uint64_t state_;
};

}  // namespace movsig
