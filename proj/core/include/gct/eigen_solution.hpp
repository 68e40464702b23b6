#pragma once

#include "gct/model.hpp"

#include <Eigen/Dense>

#include <optional>

namespace gct {

// Diagonalization of a generator: columns of v are right eigenvectors,
// v * c = identity, eigenvalues sorted descending (0 first for a conservative
// generator).  The kernel at time t is v * diag(exp(l t)) * c.
struct EigenSolution {
  Eigen::MatrixXd v;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd c;
  double cond;  // spectral condition number of v
};

// Unavailable (nullopt) when eigenvalues come out complex, the eigenvector
// matrix is singular or has condition number >= 1e8, or the inverse fails to
// reproduce the identity to 1e-8; callers must fall back to uniformization.
std::optional<EigenSolution> eigen_solution(const Generator& g);

Eigen::MatrixXd kernel_from_eigen(const EigenSolution& es, double t);

}  // namespace gct
