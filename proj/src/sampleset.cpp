#include "bqsolve/sampleset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bqsolve {

SampleSet::SampleSet(std::vector<Label> label_order)
    : label_order_(std::move(label_order)) {
  if (!std::is_sorted(label_order_.begin(), label_order_.end()) ||
      std::adjacent_find(label_order_.begin(), label_order_.end()) !=
          label_order_.end()) {
    throw std::invalid_argument("sampleset: label order must be ascending");
  }
}

void SampleSet::push_back(SampleRecord record) {
  if (record.assignment.labels() != label_order_) {
    throw std::invalid_argument(
        "sampleset: record labels do not match the set's label order");
  }
  if (record.num_occurrences < 1) {
    throw std::invalid_argument("sampleset: num_occurrences must be >= 1");
  }
  records_.push_back(std::move(record));
}

SampleSet from_assignments(const BinaryQuadraticModel& bqm,
                           const std::vector<Assignment>& assignments) {
  SampleSet out(bqm.labels());
  for (const auto& a : assignments) {
    out.push_back({a, energy(bqm, a), 1});
  }
  return out;
}

SampleSet aggregate(const SampleSet& ss) {
  SampleSet out(ss.label_order());
  std::map<std::vector<int>, std::size_t> seen;  // values -> index in out
  std::vector<SampleRecord> merged;
  for (const auto& record : ss.records()) {
    const auto [it, inserted] =
        seen.try_emplace(record.assignment.values(), merged.size());
    if (inserted) {
      merged.push_back(record);
    } else {
      merged[it->second].num_occurrences += record.num_occurrences;
    }
  }
  for (auto& record : merged) {
    out.push_back(std::move(record));
  }
  return out;
}

SampleSet sort_by_energy(const SampleSet& ss) {
  SampleSet out(ss.label_order());
  std::vector<SampleRecord> records = ss.records();
  std::stable_sort(records.begin(), records.end(),
                   [](const SampleRecord& a, const SampleRecord& b) {
                     if (a.energy != b.energy) return a.energy < b.energy;
                     return std::lexicographical_compare(
                         a.assignment.values().begin(),
                         a.assignment.values().end(),
                         b.assignment.values().begin(),
                         b.assignment.values().end());
                   });
  for (auto& record : records) {
    out.push_back(std::move(record));
  }
  return out;
}

SampleSet truncate(const SampleSet& ss, std::int64_t k) {
  if (k < 1) {
    throw std::invalid_argument("truncate: k must be >= 1");
  }
  SampleSet out(ss.label_order());
  const auto keep = std::min<std::size_t>(ss.size(), static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < keep; ++i) {
    out.push_back(ss.records()[i]);
  }
  return out;
}

SampleRecord lowest(const SampleSet& ss) {
  if (ss.empty()) {
    throw std::out_of_range("lowest: sample set is empty");
  }
  return sort_by_energy(ss).records().front();
}

}  // namespace bqsolve
