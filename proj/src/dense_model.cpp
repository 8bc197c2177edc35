#include "bqsolve/dense_model.hpp"

#include <algorithm>
#include <cmath>

namespace bqsolve {

DenseModel DenseModel::from(const BinaryQuadraticModel& bqm) {
  DenseModel dense;
  dense.vartype = bqm.vartype();
  dense.offset = bqm.offset();
  dense.labels = bqm.labels();
  const auto n = static_cast<Eigen::Index>(dense.labels.size());
  dense.linear = Eigen::VectorXd::Zero(n);
  dense.quadratic = Eigen::MatrixXd::Zero(n, n);

  auto index_of = [&](Label label) {
    return static_cast<Eigen::Index>(
        std::lower_bound(dense.labels.begin(), dense.labels.end(), label) -
        dense.labels.begin());
  };
  for (const auto& [label, bias] : bqm.linear()) {
    dense.linear[index_of(label)] = bias;
  }
  for (const auto& [pair, coupling] : bqm.quadratic()) {
    const auto i = index_of(pair.first);
    const auto j = index_of(pair.second);
    dense.quadratic(i, j) = coupling;
    dense.quadratic(j, i) = coupling;
  }
  return dense;
}

Assignment DenseModel::to_assignment(const Eigen::VectorXd& values) const {
  std::vector<int> ints(static_cast<std::size_t>(values.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    ints[static_cast<std::size_t>(i)] = static_cast<int>(std::lround(values[i]));
  }
  return Assignment(labels, std::move(ints));
}

}  // namespace bqsolve
