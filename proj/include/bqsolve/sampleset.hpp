#pragma once

#include <cstdint>
#include <vector>

#include "bqsolve/model.hpp"

namespace bqsolve {

struct SampleRecord {
  Assignment assignment;
  double energy = 0.0;
  std::int64_t num_occurrences = 1;

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

/// Ordered solver output: records of (assignment, energy, occurrences), all
/// conforming to one ascending label order. Immutable in use; the transforms
/// below return new sets.
class SampleSet {
 public:
  SampleSet() = default;
  explicit SampleSet(std::vector<Label> label_order);

  const std::vector<Label>& label_order() const noexcept {
    return label_order_;
  }
  const std::vector<SampleRecord>& records() const noexcept {
    return records_;
  }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  /// Appends a record; throws std::invalid_argument if its assignment does
  /// not share this set's label order.
  void push_back(SampleRecord record);

  friend bool operator==(const SampleSet&, const SampleSet&) = default;

 private:
  std::vector<Label> label_order_;
  std::vector<SampleRecord> records_;
};

/// One record per assignment, in input order, with num_occurrences = 1 and
/// the energy computed against `bqm`. Conformance errors propagate.
SampleSet from_assignments(const BinaryQuadraticModel& bqm,
                           const std::vector<Assignment>& assignments);

/// Merges identical assignments, summing occurrences; first-seen order of
/// the distinct assignments is preserved.
SampleSet aggregate(const SampleSet& ss);

/// Ascending energy; exact ties broken by lexicographic comparison of the
/// assignment values in label order.
SampleSet sort_by_energy(const SampleSet& ss);

/// First k records (all of them when k >= size). k must be >= 1.
SampleSet truncate(const SampleSet& ss, std::int64_t k);

/// The record that sorts first under sort_by_energy. Throws
/// std::out_of_range on an empty set.
SampleRecord lowest(const SampleSet& ss);

}  // namespace bqsolve
