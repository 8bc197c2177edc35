#include "bqsolve/rng.hpp"

namespace bqsolve {

RandomEngine make_engine(std::optional<std::uint64_t> seed) {
  if (seed) {
    return RandomEngine(*seed);
  }
  std::random_device device;
  const std::uint64_t entropy =
      (static_cast<std::uint64_t>(device()) << 32) ^ device();
  return RandomEngine(entropy);
}

}  // namespace bqsolve
