#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "bqsolve/dense_model.hpp"
#include "bqsolve/model.hpp"
#include "bqsolve/registry.hpp"
#include "bqsolve/rng.hpp"
#include "bqsolve/sampleset.hpp"

namespace bqsolve {

struct PtParams {
  std::int64_t num_replicas = 10;
  std::int64_t num_pt_steps = 1000;
  std::int64_t num_sweeps = 100;
  double beta_min = 0.1;   // hottest replica
  double beta_max = 1.0;   // coldest replica
  std::optional<std::uint64_t> seed;
};

/// Geometric ladder of inverse temperatures: beta_k = beta_min *
/// (beta_max/beta_min)^(k/(R-1)), with both endpoints hit exactly.
/// R = 1 yields [beta_max]. Throws SolverError on invalid parameters
/// (requires 0 < beta_min <= beta_max, R >= 1).
std::vector<double> beta_ladder(double beta_min, double beta_max,
                                std::int64_t num_replicas);

/// Replica-exchange acceptance:
/// min(1, exp((beta_a - beta_b) * (energy_a - energy_b))).
inline double exchange_probability(double beta_a, double beta_b,
                                   double energy_a, double energy_b) {
  return std::min(1.0, std::exp((beta_a - beta_b) * (energy_a - energy_b)));
}

/// One single-spin-flip Metropolis pass over a SPIN-form dense model.
/// Visits every variable once in ascending index order, proposes flipping
/// it, and accepts with probability min(1, exp(-beta * delta)). `fields`
/// must equal model.local_fields(state) and `energy` model.energy(state) on
/// entry; both are maintained incrementally. `on_accept(state, energy)`
/// fires after every accepted flip.
template <class Observer>
void metropolis_sweep(const DenseModel& model, Eigen::VectorXd& state,
                      Eigen::VectorXd& fields, double& energy, double beta,
                      RandomEngine& engine, Observer&& on_accept) {
  const Eigen::Index n = state.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double dv = -2.0 * state[i];
    const double delta = dv * fields[i];
    if (delta <= 0.0 || uniform01(engine) < std::exp(-beta * delta)) {
      state[i] += dv;
      fields.noalias() += model.quadratic.col(i) * dv;
      energy += delta;
      on_accept(state, energy);
    }
  }
}

inline void metropolis_sweep(const DenseModel& model, Eigen::VectorXd& state,
                             Eigen::VectorXd& fields, double& energy,
                             double beta, RandomEngine& engine) {
  metropolis_sweep(model, state, fields, energy, beta, engine,
                   [](const Eigen::VectorXd&, double) {});
}

/// Replica-exchange driver over a SPIN-form dense model. Replica r sits at
/// ladder position r (hottest first) and owns an independent engine spawned
/// from the master seed, so replicas could be swept concurrently without
/// changing results; exchanges use a separate engine and run at the
/// synchronization point between steps. step() runs num_sweeps Metropolis
/// sweeps per replica, then one exchange pass over adjacent pairs,
/// alternating even- and odd-indexed pairings. The lowest energy seen by
/// any replica at any point is tracked.
class PtRunner {
 public:
  PtRunner(const DenseModel& spin_model, const PtParams& params);

  void step();  // sweep_phase + exchange_phase
  void run();   // num_pt_steps steps

  /// num_sweeps Metropolis sweeps for every replica.
  void sweep_phase();
  /// One pass over adjacent ladder pairs; the pairing alternates with the
  /// step parity. Swaps permute the replica states, nothing else.
  void exchange_phase();

  std::int64_t steps_taken() const noexcept { return steps_taken_; }
  const std::vector<double>& betas() const noexcept { return betas_; }
  const Eigen::VectorXd& replica_state(std::int64_t r) const {
    return states_.at(r);
  }
  double replica_energy(std::int64_t r) const { return energies_.at(r); }
  double best_energy() const noexcept { return best_energy_; }
  const Eigen::VectorXd& best_state() const noexcept { return best_state_; }

 private:
  void observe(const Eigen::VectorXd& state, double energy);

  const DenseModel* model_;
  PtParams params_;
  std::vector<double> betas_;
  std::vector<Eigen::VectorXd> states_;
  std::vector<Eigen::VectorXd> fields_;
  std::vector<double> energies_;
  std::vector<RandomEngine> engines_;
  RandomEngine exchange_engine_;
  Eigen::VectorXd best_state_;
  double best_energy_;
  std::int64_t steps_taken_ = 0;
};

/// Runs parallel tempering and returns a single record: the best assignment
/// observed, with its energy evaluated on the caller's model in the
/// caller's vartype. BINARY input is converted to SPIN internally.
/// Deterministic under a fixed seed. Throws SolverError on invalid
/// parameters or a model with no variables.
SampleSet sample_pt(const BinaryQuadraticModel& bqm, const PtParams& params);

/// Descriptor for the "pt" subcommand: sample-scoped --num_replicas,
/// --num_pt_steps, --num_sweeps, --beta_min, --beta_max and an init-scoped
/// optional --seed.
SolverDescriptor pt_descriptor();

}  // namespace bqsolve
