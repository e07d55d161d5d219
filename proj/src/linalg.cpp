#include "bifloquet/linalg.hpp"

#include <string>

#include "bifloquet/error.hpp"

namespace bifloquet {

SymmetricEigen diagonalize_symmetric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw InvalidArgument("diagonalize_symmetric: matrix is not square");
  }
  if (!m.allFinite()) {
    throw InvalidArgument("diagonalize_symmetric: matrix has non-finite entries");
  }
  if (m != m.transpose()) {
    throw InvalidArgument("diagonalize_symmetric: matrix is not symmetric");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    // Eigen caps the implicit QR at 30 sweeps per eigenvalue.
    const int budget = 30 * static_cast<int>(m.rows());
    throw NonConvergence("symmetric eigensolver did not converge for a " +
                             std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) +
                             " matrix within the sweep budget of " +
                             std::to_string(budget),
                         budget, m.norm());
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace bifloquet
