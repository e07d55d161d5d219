#pragma once

#include <Eigen/Dense>

namespace bifloquet {

/// Full real spectral decomposition M = V diag(values) V^T with eigenvalues in
/// ascending order and orthonormal columns in `vectors`.
struct SymmetricEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Throws InvalidArgument for non-finite or non-symmetric input and
/// NonConvergence if the QR sweeps fail.
SymmetricEigen diagonalize_symmetric(const Eigen::MatrixXd& m);

}  // namespace bifloquet
