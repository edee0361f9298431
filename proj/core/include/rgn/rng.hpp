#pragma once

#include <cstdint>
#include <random>

#include "rgn/types.hpp"

namespace rgn {

/// Seeded random stream with explicit uniform/Gaussian mappings so that a
/// given seed reproduces the same values on every run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in (0, 1].
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Standard normal via the Box-Muller transform.
  double gaussian();

  /// Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
  Index uniform_index(Index n);

  Vector gaussian_vector(Index n);
  Matrix gaussian_matrix(Index rows, Index cols);

 private:
  std::mt19937_64 engine_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

/// Stable per-stream seed derivation (SplitMix64 over the pair), used to
/// give each trial of an experiment its own independent stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace rgn
