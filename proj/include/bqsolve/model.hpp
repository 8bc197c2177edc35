#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "bqsolve/vartype.hpp"

namespace bqsolve {

using Label = std::int64_t;

/// One value per variable, sorted by label. Conformance against a model
/// (identical label set, values inside the vartype domain) is checked by the
/// operations that consume assignments, not by the constructor.
class Assignment {
 public:
  Assignment() = default;

  /// `labels` must be sorted ascending and duplicate-free; `values` aligns
  /// with it positionally.
  Assignment(std::vector<Label> labels, std::vector<int> values);

  const std::vector<Label>& labels() const noexcept { return labels_; }
  const std::vector<int>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return labels_.size(); }

  /// Value of the given label; throws std::out_of_range if absent.
  int value_at(Label label) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Label> labels_;
  std::vector<int> values_;
};

/// Binary quadratic model: linear biases, pairwise couplings, a constant
/// offset and a vartype. Labels are arbitrary non-negative integers and need
/// not be contiguous. Quadratic keys are normalized to (min, max) with
/// min < max; diagonal terms fold into the linear biases.
///
/// Immutable once built; add_term is the single-writer construction phase.
class BinaryQuadraticModel {
 public:
  explicit BinaryQuadraticModel(Vartype vartype, double offset = 0.0)
      : vartype_(vartype), offset_(offset) {}

  Vartype vartype() const noexcept { return vartype_; }
  double offset() const noexcept { return offset_; }
  void set_offset(double offset) noexcept { offset_ = offset; }

  const std::map<Label, double>& linear() const noexcept { return linear_; }
  const std::map<std::pair<Label, Label>, double>& quadratic() const noexcept {
    return quadratic_;
  }

  /// All labels appearing in linear or quadratic terms, ascending.
  const std::vector<Label>& labels() const noexcept { return labels_; }
  std::size_t num_variables() const noexcept { return labels_.size(); }

  /// Adds `value` to linear[i] when i == j, otherwise to
  /// quadratic[(min(i,j), max(i,j))]. Repeated calls accumulate.
  /// Throws std::invalid_argument on negative labels or non-finite values.
  void add_term(Label i, Label j, double value);

 private:
  Vartype vartype_;
  double offset_ = 0.0;
  std::map<Label, double> linear_;
  std::map<std::pair<Label, Label>, double> quadratic_;
  std::vector<Label> labels_;
};

/// E(v) = offset + sum_i linear[i] v_i + sum_{i<j} quadratic[(i,j)] v_i v_j,
/// accumulated in ascending label order, then ascending pair order.
/// Throws ConformanceError (naming the offending label) when the assignment
/// does not match the model's labels or a value is outside the domain.
double energy(const BinaryQuadraticModel& bqm, const Assignment& a);

/// Throws ConformanceError if `a` does not conform to `bqm`.
void check_conformance(const BinaryQuadraticModel& bqm, const Assignment& a);

/// Converts between SPIN and BINARY under the bijection s = 2x - 1.
/// Energies are preserved pointwise: E_spin(s) = E_binary(x) for every
/// assignment x and its image s. Converting to the same vartype copies.
BinaryQuadraticModel change_vartype(const BinaryQuadraticModel& bqm,
                                    Vartype target);

}  // namespace bqsolve
