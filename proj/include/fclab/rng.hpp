#pragma once

#include <cstdint>

namespace fclab {

/// Splittable deterministic generator (SplitMix64). Streams for parallel work
/// are derived from (seed, stream index), never by sharing state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Seed of the independent stream for a (seed, index) pair; identical
  /// across runs and thread schedules.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix(seed + 0x9E3779B97F4A7C15ull) ^ mix(stream + 0xD1B54A32D192ED03ull);
  }

  static SplitMix64 derive(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64(derive_seed(seed, stream));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  /// Uniform variate strictly inside (0, 1).
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace fclab
