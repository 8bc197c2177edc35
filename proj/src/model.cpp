#include "bqsolve/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bqsolve/errors.hpp"

namespace bqsolve {

Assignment::Assignment(std::vector<Label> labels, std::vector<int> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
  if (labels_.size() != values_.size()) {
    throw std::invalid_argument("assignment: labels and values differ in size");
  }
  if (!std::is_sorted(labels_.begin(), labels_.end()) ||
      std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw std::invalid_argument("assignment: labels must be strictly ascending");
  }
}

int Assignment::value_at(Label label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw std::out_of_range("assignment: no value for label " +
                            std::to_string(label));
  }
  return values_[static_cast<std::size_t>(it - labels_.begin())];
}

void BinaryQuadraticModel::add_term(Label i, Label j, double value) {
  if (i < 0 || j < 0) {
    throw std::invalid_argument("add_term: labels must be non-negative, got (" +
                                std::to_string(i) + ", " + std::to_string(j) +
                                ")");
  }
  if (!std::isfinite(value)) {
    throw std::invalid_argument("add_term: value must be finite");
  }
  if (i == j) {
    linear_[i] += value;
  } else {
    quadratic_[{std::min(i, j), std::max(i, j)}] += value;
  }
  for (const Label label : {i, j}) {
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) {
      labels_.insert(it, label);
    }
  }
}

void check_conformance(const BinaryQuadraticModel& bqm, const Assignment& a) {
  const auto& model_labels = bqm.labels();
  const auto& labels = a.labels();
  // Both sides are sorted; report the first point of disagreement.
  std::size_t mi = 0, ai = 0;
  while (mi < model_labels.size() || ai < labels.size()) {
    if (ai == labels.size() ||
        (mi < model_labels.size() && model_labels[mi] < labels[ai])) {
      throw ConformanceError("assignment is missing label " +
                             std::to_string(model_labels[mi]));
    }
    if (mi == model_labels.size() || labels[ai] < model_labels[mi]) {
      throw ConformanceError("assignment has extra label " +
                             std::to_string(labels[ai]));
    }
    ++mi;
    ++ai;
  }
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (!in_domain(bqm.vartype(), a.values()[k])) {
      throw ConformanceError(
          "value " + std::to_string(a.values()[k]) + " of label " +
          std::to_string(labels[k]) + " is outside the " +
          to_string(bqm.vartype()) + " domain");
    }
  }
}

double energy(const BinaryQuadraticModel& bqm, const Assignment& a) {
  check_conformance(bqm, a);
  double total = bqm.offset();
  for (const auto& [label, bias] : bqm.linear()) {
    total += bias * a.value_at(label);
  }
  for (const auto& [pair, coupling] : bqm.quadratic()) {
    total += coupling * a.value_at(pair.first) * a.value_at(pair.second);
  }
  return total;
}

BinaryQuadraticModel change_vartype(const BinaryQuadraticModel& bqm,
                                    Vartype target) {
  if (bqm.vartype() == target) {
    return bqm;
  }
  BinaryQuadraticModel out(target);
  double offset = bqm.offset();
  if (target == Vartype::BINARY) {
    // s = 2x - 1: h s -> 2h x - h, J s_i s_j -> 4J x_i x_j - 2J x_i - 2J x_j + J.
    for (const auto& [label, bias] : bqm.linear()) {
      out.add_term(label, label, 2.0 * bias);
      offset -= bias;
    }
    for (const auto& [pair, coupling] : bqm.quadratic()) {
      out.add_term(pair.first, pair.second, 4.0 * coupling);
      out.add_term(pair.first, pair.first, -2.0 * coupling);
      out.add_term(pair.second, pair.second, -2.0 * coupling);
      offset += coupling;
    }
  } else {
    // x = (s + 1)/2: a x -> a s/2 + a/2, b x_i x_j -> b (s_i s_j + s_i + s_j + 1)/4.
    for (const auto& [label, bias] : bqm.linear()) {
      out.add_term(label, label, bias / 2.0);
      offset += bias / 2.0;
    }
    for (const auto& [pair, coupling] : bqm.quadratic()) {
      out.add_term(pair.first, pair.second, coupling / 4.0);
      out.add_term(pair.first, pair.first, coupling / 4.0);
      out.add_term(pair.second, pair.second, coupling / 4.0);
      offset += coupling / 4.0;
    }
  }
  out.set_offset(offset);
  return out;
}

}  // namespace bqsolve
