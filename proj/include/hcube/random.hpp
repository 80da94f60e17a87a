#pragma once

#include <cstdint>
#include <random>

namespace hcube {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed for the i-th independent trial under a master seed:
/// mix64(master + (i + 1) * 0x9E3779B97F4A7C15). Trials can run in any order
/// or on any worker without changing their streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// mt19937_64 whose output sequence is fixed by the C++ standard; bounded
/// draws use rejection sampling rather than std distributions, whose
/// algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace hcube
