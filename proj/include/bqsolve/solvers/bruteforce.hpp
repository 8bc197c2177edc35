#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "bqsolve/dense_model.hpp"
#include "bqsolve/errors.hpp"
#include "bqsolve/model.hpp"
#include "bqsolve/registry.hpp"
#include "bqsolve/sampleset.hpp"

namespace bqsolve {

/// Reflected binary Gray code: k XOR (k >> 1). Consecutive codes differ in
/// exactly one bit.
constexpr std::uint64_t gray_code(std::uint64_t k) noexcept {
  return k ^ (k >> 1);
}

/// The bit position in which gray_code(k) differs from gray_code(k - 1):
/// the number of trailing zero bits of k. Throws std::domain_error for
/// k = 0, which has no predecessor.
inline int flip_index(std::uint64_t k) {
  if (k == 0) {
    throw std::domain_error("flip_index: k must be >= 1");
  }
  return std::countr_zero(k);
}

struct BfParams {
  std::int64_t num_states = 1;  // k lowest-energy states to return
};

namespace detail {

struct ScanEntry {
  double energy;       // running energy at the time of the visit
  std::uint64_t step;  // visit index; earlier-visited wins boundary ties
  std::uint64_t code;  // Gray code word; bit b set means label b is at +1/1
};

// Worst state on top: highest energy, then latest visited.
struct ScanEntryBetter {
  bool operator()(const ScanEntry& a, const ScanEntry& b) const {
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.step < b.step;
  }
};

}  // namespace detail

/// Exhaustive scan over all 2^N assignments in Gray-code order, starting
/// from the all-minimum state (code 0). Each step flips the single variable
/// flip_index(step) and updates the running energy through the maintained
/// local fields, so a step costs O(N) regardless of the model's density.
/// A bounded worst-out heap keeps the num_states lowest-energy states seen;
/// ties at the boundary keep the earlier-visited state. The returned set is
/// sorted ascending by energy (ties by lexicographic assignment values) with
/// record energies re-evaluated exactly on the caller's model.
///
/// `observer(step, code, running_energy)` fires at every visited state,
/// including step 0.
///
/// Throws SolverError when the model has more than 64 variables or
/// num_states < 1. A model with no variables yields one empty record with
/// energy equal to the offset.
template <class Observer>
SampleSet scan_observed(const BinaryQuadraticModel& bqm,
                        const BfParams& params, Observer&& observer) {
  if (params.num_states < 1) {
    throw SolverError("bruteforce: num_states must be >= 1");
  }
  const std::size_t n = bqm.num_variables();
  if (n > 64) {
    throw SolverError(
        "bruteforce: the scan is limited to 64 variables (the Gray counter "
        "is a 64-bit word); the model has " +
        std::to_string(n));
  }

  SampleSet out(bqm.labels());
  if (n == 0) {
    out.push_back({Assignment{}, bqm.offset(), 1});
    return out;
  }

  const DenseModel dense = DenseModel::from(bqm);
  const double low = domain_low(dense.vartype);
  const double high = domain_high(dense.vartype);

  Eigen::VectorXd state = Eigen::VectorXd::Constant(n, low);
  Eigen::VectorXd fields = dense.local_fields(state);
  double energy = dense.energy(state);

  std::priority_queue<detail::ScanEntry, std::vector<detail::ScanEntry>,
                      detail::ScanEntryBetter>
      keep;
  const auto capacity = static_cast<std::uint64_t>(params.num_states);
  auto offer = [&](const detail::ScanEntry& entry) {
    if (keep.size() < capacity) {
      keep.push(entry);
    } else if (entry.energy < keep.top().energy) {
      keep.pop();
      keep.push(entry);
    }
  };

  observer(std::uint64_t{0}, std::uint64_t{0}, energy);
  offer({energy, 0, 0});

  // n = 64 wraps the end marker to 0; the loop then stops when the counter
  // itself wraps, after visiting all 2^64 codes.
  const std::uint64_t end = n == 64 ? 0 : (std::uint64_t{1} << n);
  for (std::uint64_t step = 1; step != end; ++step) {
    const int i = std::countr_zero(step);
    const double dv = state[i] == low ? high - low : low - high;
    energy += dv * fields[i];
    state[i] += dv;
    fields.noalias() += dense.quadratic.col(i) * dv;

    observer(step, gray_code(step), energy);
    offer({energy, step, gray_code(step)});
  }

  std::vector<detail::ScanEntry> entries;
  entries.reserve(keep.size());
  while (!keep.empty()) {
    entries.push_back(keep.top());
    keep.pop();
  }

  std::vector<SampleRecord> records;
  records.reserve(entries.size());
  for (const auto& entry : entries) {
    std::vector<int> values(n);
    for (std::size_t b = 0; b < n; ++b) {
      values[b] = (entry.code >> b) & 1 ? domain_high(dense.vartype)
                                        : domain_low(dense.vartype);
    }
    Assignment a(dense.labels, std::move(values));
    const double exact = bqsolve::energy(bqm, a);
    records.push_back({std::move(a), exact, 1});
  }
  std::sort(records.begin(), records.end(),
            [](const SampleRecord& a, const SampleRecord& b) {
              if (a.energy != b.energy) return a.energy < b.energy;
              return std::lexicographical_compare(
                  a.assignment.values().begin(), a.assignment.values().end(),
                  b.assignment.values().begin(), b.assignment.values().end());
            });
  for (auto& record : records) {
    out.push_back(std::move(record));
  }
  return out;
}

/// scan_observed without an observer.
SampleSet scan(const BinaryQuadraticModel& bqm, const BfParams& params);

/// Descriptor for the "bruteforce" subcommand: sample-scoped --num_states
/// (default 1).
SolverDescriptor bruteforce_descriptor();

}  // namespace bqsolve
