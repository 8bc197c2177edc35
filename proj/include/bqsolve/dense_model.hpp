#pragma once

#include <Eigen/Core>
#include <vector>

#include "bqsolve/model.hpp"

namespace bqsolve {

/// Dense view of a model used by the solver kernels: biases packed into an
/// Eigen vector and couplings into a symmetric zero-diagonal matrix, with
/// variables remapped to indices 0..N-1 in ascending label order.
struct DenseModel {
  Vartype vartype = Vartype::SPIN;
  double offset = 0.0;
  std::vector<Label> labels;   // ascending; position = dense index
  Eigen::VectorXd linear;      // size N
  Eigen::MatrixXd quadratic;   // N x N, symmetric, zero diagonal

  static DenseModel from(const BinaryQuadraticModel& bqm);

  Eigen::Index num_variables() const noexcept { return linear.size(); }

  /// offset + h.v + (1/2) v.Jv; the 1/2 undoes the symmetric double storage.
  double energy(const Eigen::VectorXd& values) const {
    return offset + linear.dot(values) +
           0.5 * values.dot(quadratic * values);
  }

  /// f_i = h_i + sum_j J_ij v_j. Flipping variable i by dv changes the
  /// energy by dv * f_i.
  Eigen::VectorXd local_fields(const Eigen::VectorXd& values) const {
    return linear + quadratic * values;
  }

  /// Packs a dense value vector back into an Assignment over the original
  /// labels. Values are rounded to the nearest integer.
  Assignment to_assignment(const Eigen::VectorXd& values) const;
};

}  // namespace bqsolve
