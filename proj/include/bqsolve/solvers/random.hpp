#pragma once

#include <cstdint>
#include <optional>

#include "bqsolve/model.hpp"
#include "bqsolve/registry.hpp"
#include "bqsolve/sampleset.hpp"

namespace bqsolve {

/// Draws `num_solutions` assignments uniformly over the vartype domain, one
/// independent value per variable (ascending label order, one engine output
/// per value). Fixed seeds reproduce exactly; an absent seed is drawn from
/// the system. Throws SolverError when num_solutions < 1.
SampleSet sample_random(const BinaryQuadraticModel& bqm,
                        std::int64_t num_solutions,
                        std::optional<std::uint64_t> seed = std::nullopt);

/// Descriptor for the "random" subcommand: sample-scoped --num_solutions
/// (default 1) and an init-scoped optional --seed.
SolverDescriptor random_descriptor();

}  // namespace bqsolve
