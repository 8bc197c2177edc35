#include "bqsolve/solvers/random.hpp"

#include <memory>
#include <utility>
#include <vector>

#include "bqsolve/errors.hpp"
#include "bqsolve/rng.hpp"

namespace bqsolve {

SampleSet sample_random(const BinaryQuadraticModel& bqm,
                        std::int64_t num_solutions,
                        std::optional<std::uint64_t> seed) {
  if (num_solutions < 1) {
    throw SolverError("random: num_solutions must be >= 1");
  }
  RandomEngine engine = make_engine(seed);
  const int low = domain_low(bqm.vartype());
  const int high = domain_high(bqm.vartype());
  const auto& labels = bqm.labels();

  std::vector<Assignment> assignments;
  assignments.reserve(static_cast<std::size_t>(num_solutions));
  for (std::int64_t s = 0; s < num_solutions; ++s) {
    std::vector<int> values(labels.size());
    for (auto& value : values) {
      value = uniform_bit(engine) ? high : low;
    }
    assignments.emplace_back(labels, std::move(values));
  }
  return from_assignments(bqm, assignments);
}

namespace {

class RandomSolver : public Solver {
 public:
  explicit RandomSolver(std::optional<std::uint64_t> seed) : seed_(seed) {}

  SampleSet sample(const BinaryQuadraticModel& bqm,
                   const ArgValues& values) override {
    return sample_random(bqm, std::get<std::int64_t>(values.at("num_solutions")),
                         seed_);
  }

 private:
  std::optional<std::uint64_t> seed_;
};

}  // namespace

SolverDescriptor random_descriptor() {
  SolverDescriptor descriptor;
  descriptor.name = "random";
  descriptor.description = "Uniform random sampler";
  descriptor.args = {
      {"num_solutions", ArgKind::Integer, ArgScope::Sample,
       "number of random solutions to draw (default 1)",
       ArgValue{std::int64_t{1}}, {}, false},
      {"seed", ArgKind::Integer, ArgScope::Init,
       "seed of the random number generator", std::nullopt, {}, true},
  };
  descriptor.construct = [](const ArgValues& values) {
    std::optional<std::uint64_t> seed;
    if (const auto it = values.find("seed"); it != values.end()) {
      seed = static_cast<std::uint64_t>(std::get<std::int64_t>(it->second));
    }
    return std::make_unique<RandomSolver>(seed);
  };
  return descriptor;
}

}  // namespace bqsolve
