#include "bqsolve/solvers/pt.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <utility>

#include "bqsolve/errors.hpp"

namespace bqsolve {

namespace {

void validate(const PtParams& params) {
  if (params.num_replicas < 1) {
    throw SolverError("pt: num_replicas must be >= 1");
  }
  if (params.num_pt_steps < 1 || params.num_sweeps < 1) {
    throw SolverError("pt: num_pt_steps and num_sweeps must be >= 1");
  }
  if (!(params.beta_min > 0.0) || !(params.beta_min <= params.beta_max)) {
    throw SolverError("pt: requires 0 < beta_min <= beta_max");
  }
}

}  // namespace

std::vector<double> beta_ladder(double beta_min, double beta_max,
                                std::int64_t num_replicas) {
  PtParams probe;
  probe.beta_min = beta_min;
  probe.beta_max = beta_max;
  probe.num_replicas = num_replicas;
  validate(probe);

  if (num_replicas == 1) {
    return {beta_max};
  }
  std::vector<double> betas(static_cast<std::size_t>(num_replicas));
  const double ratio = beta_max / beta_min;
  for (std::int64_t k = 0; k < num_replicas; ++k) {
    betas[static_cast<std::size_t>(k)] =
        beta_min * std::pow(ratio, static_cast<double>(k) /
                                       static_cast<double>(num_replicas - 1));
  }
  betas.front() = beta_min;
  betas.back() = beta_max;
  return betas;
}

PtRunner::PtRunner(const DenseModel& spin_model, const PtParams& params)
    : model_(&spin_model), params_(params) {
  validate(params_);
  if (spin_model.vartype != Vartype::SPIN) {
    throw SolverError("pt: the runner operates on a SPIN-form model");
  }
  if (spin_model.num_variables() == 0) {
    throw SolverError("pt: the model has no variables");
  }
  betas_ = beta_ladder(params_.beta_min, params_.beta_max,
                       params_.num_replicas);

  // One stream per ladder position plus one for exchanges, all spawned from
  // the master seed, so replica sweeps may run concurrently without
  // affecting results.
  RandomEngine master = make_engine(params_.seed);
  const auto replicas = static_cast<std::size_t>(params_.num_replicas);
  engines_.reserve(replicas);
  for (std::size_t r = 0; r < replicas; ++r) {
    engines_.emplace_back(master());
  }
  exchange_engine_.seed(master());

  const Eigen::Index n = spin_model.num_variables();
  states_.resize(replicas);
  fields_.resize(replicas);
  energies_.resize(replicas);
  best_energy_ = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < replicas; ++r) {
    Eigen::VectorXd state(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      state[i] = uniform_bit(engines_[r]) ? 1.0 : -1.0;
    }
    states_[r] = std::move(state);
    fields_[r] = model_->local_fields(states_[r]);
    energies_[r] = model_->energy(states_[r]);
    observe(states_[r], energies_[r]);
  }
}

void PtRunner::observe(const Eigen::VectorXd& state, double energy) {
  if (energy < best_energy_) {
    best_energy_ = energy;
    best_state_ = state;
  }
}

void PtRunner::step() {
  sweep_phase();
  exchange_phase();
  ++steps_taken_;
}

void PtRunner::sweep_phase() {
  const auto replicas = static_cast<std::size_t>(params_.num_replicas);
  for (std::size_t r = 0; r < replicas; ++r) {
    for (std::int64_t sweep = 0; sweep < params_.num_sweeps; ++sweep) {
      metropolis_sweep(
          *model_, states_[r], fields_[r], energies_[r], betas_[r],
          engines_[r],
          [this](const Eigen::VectorXd& state, double energy) {
            observe(state, energy);
          });
    }
  }
}

void PtRunner::exchange_phase() {
  const auto replicas = static_cast<std::size_t>(params_.num_replicas);
  // Even-indexed pairs on even steps, odd-indexed on odd steps.
  for (std::size_t r = steps_taken_ % 2 == 0 ? 0 : 1; r + 1 < replicas;
       r += 2) {
    const double p = exchange_probability(betas_[r], betas_[r + 1],
                                          energies_[r], energies_[r + 1]);
    if (uniform01(exchange_engine_) < p) {
      states_[r].swap(states_[r + 1]);
      fields_[r].swap(fields_[r + 1]);
      std::swap(energies_[r], energies_[r + 1]);
    }
  }
}

void PtRunner::run() {
  for (std::int64_t s = 0; s < params_.num_pt_steps; ++s) {
    step();
  }
}

SampleSet sample_pt(const BinaryQuadraticModel& bqm, const PtParams& params) {
  validate(params);
  if (bqm.num_variables() == 0) {
    throw SolverError("pt: the model has no variables");
  }

  const bool converted = bqm.vartype() != Vartype::SPIN;
  const BinaryQuadraticModel spin_bqm =
      converted ? change_vartype(bqm, Vartype::SPIN) : bqm;
  const DenseModel dense = DenseModel::from(spin_bqm);

  PtRunner runner(dense, params);
  runner.run();

  Eigen::VectorXd best = runner.best_state();
  if (converted) {
    best = (best.array() + 1.0) / 2.0;  // x = (s + 1)/2
  }
  const Assignment assignment = dense.to_assignment(best);

  SampleSet out(bqm.labels());
  out.push_back({assignment, energy(bqm, assignment), 1});
  return out;
}

namespace {

class PtSolver : public Solver {
 public:
  explicit PtSolver(std::optional<std::uint64_t> seed) : seed_(seed) {}

  SampleSet sample(const BinaryQuadraticModel& bqm,
                   const ArgValues& values) override {
    auto real_of = [&](const char* name) {
      const ArgValue& value = values.at(name);
      return std::holds_alternative<double>(value)
                 ? std::get<double>(value)
                 : static_cast<double>(std::get<std::int64_t>(value));
    };
    PtParams params;
    params.num_replicas = std::get<std::int64_t>(values.at("num_replicas"));
    params.num_pt_steps = std::get<std::int64_t>(values.at("num_pt_steps"));
    params.num_sweeps = std::get<std::int64_t>(values.at("num_sweeps"));
    params.beta_min = real_of("beta_min");
    params.beta_max = real_of("beta_max");
    params.seed = seed_;
    return sample_pt(bqm, params);
  }

 private:
  std::optional<std::uint64_t> seed_;
};

}  // namespace

SolverDescriptor pt_descriptor() {
  const PtParams defaults;
  SolverDescriptor descriptor;
  descriptor.name = "pt";
  descriptor.description = "Parallel tempering sampler";
  descriptor.args = {
      {"num_replicas", ArgKind::Integer, ArgScope::Sample,
       "number of replicas to simulate (default 10)",
       ArgValue{defaults.num_replicas}, {}, false},
      {"num_pt_steps", ArgKind::Integer, ArgScope::Sample,
       "number of parallel tempering steps",
       ArgValue{defaults.num_pt_steps}, {}, false},
      {"num_sweeps", ArgKind::Integer, ArgScope::Sample,
       "number of Monte Carlo sweeps per parallel tempering step",
       ArgValue{defaults.num_sweeps}, {}, false},
      {"beta_min", ArgKind::Real, ArgScope::Sample,
       "inverse temperature of the hottest replica",
       ArgValue{defaults.beta_min}, {}, false},
      {"beta_max", ArgKind::Real, ArgScope::Sample,
       "inverse temperature of the coldest replica",
       ArgValue{defaults.beta_max}, {}, false},
      {"seed", ArgKind::Integer, ArgScope::Init,
       "seed of the random number generator", std::nullopt, {}, true},
  };
  descriptor.construct = [](const ArgValues& values) {
    std::optional<std::uint64_t> seed;
    if (const auto it = values.find("seed"); it != values.end()) {
      seed = static_cast<std::uint64_t>(std::get<std::int64_t>(it->second));
    }
    return std::make_unique<PtSolver>(seed);
  };
  return descriptor;
}

}  // namespace bqsolve
