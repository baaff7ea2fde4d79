#pragma once
// Deterministic randomness helpers. The engine (mt19937_64) and every draw
// procedure here are pinned: given the same seed the byte-for-byte same
// stream of samples is produced on every platform. Never use
// std::uniform_*_distribution in library code; its output is
// implementation-defined.

#include <cstdint>
#include <random>
#include <span>

namespace indsup {

using Engine = std::mt19937_64;

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Engine& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Inverse-CDF draw: first index whose cumulative probability exceeds u.
std::size_t sample_categorical(Engine& g, std::span<const double> probs);

// Uniform index in [0, n) by rejection (no modulo bias).
std::size_t sample_index(Engine& g, std::size_t n);

// Seed mixing contract used by every multi-trial procedure:
// trial i uses base_seed + i.
inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t trial_index) {
  return base_seed + trial_index;
}

}  // namespace indsup
