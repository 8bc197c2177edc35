#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace bqsolve {

/// All stochastic solvers draw from std::mt19937_64 through the helpers
/// below instead of <random> distributions, whose output is not pinned by
/// the standard. This keeps seeded runs identical across platforms.
using RandomEngine = std::mt19937_64;

/// Uniform double in [0, 1): top 53 bits of one engine output.
inline double uniform01(RandomEngine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Uniform bit from the low bit of one engine output.
inline bool uniform_bit(RandomEngine& engine) { return (engine() & 1u) != 0; }

/// Engine seeded with `seed` when given, otherwise from std::random_device.
RandomEngine make_engine(std::optional<std::uint64_t> seed);

}  // namespace bqsolve
