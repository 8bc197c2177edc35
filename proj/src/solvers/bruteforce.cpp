#include "bqsolve/solvers/bruteforce.hpp"

#include <memory>

namespace bqsolve {

SampleSet scan(const BinaryQuadraticModel& bqm, const BfParams& params) {
  return scan_observed(bqm, params,
                       [](std::uint64_t, std::uint64_t, double) {});
}

namespace {

class BruteForceSolver : public Solver {
 public:
  SampleSet sample(const BinaryQuadraticModel& bqm,
                   const ArgValues& values) override {
    BfParams params;
    params.num_states = std::get<std::int64_t>(values.at("num_states"));
    return scan(bqm, params);
  }
};

}  // namespace

SolverDescriptor bruteforce_descriptor() {
  SolverDescriptor descriptor;
  descriptor.name = "bruteforce";
  descriptor.description = "Exhaustive Gray-code search sampler";
  descriptor.args = {
      {"num_states", ArgKind::Integer, ArgScope::Sample,
       "number of lowest-energy states to return (default 1)",
       ArgValue{std::int64_t{1}}, {}, false},
  };
  descriptor.construct = [](const ArgValues&) {
    return std::make_unique<BruteForceSolver>();
  };
  return descriptor;
}

}  // namespace bqsolve
