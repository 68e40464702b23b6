#pragma once

#include <Eigen/Dense>

namespace oracle {

// Matrix exponential by plain Taylor summation with scaling and squaring.
// Deliberately shares no code with the library's uniformization path.
Eigen::MatrixXd expm_taylor(const Eigen::MatrixXd& a);

}  // namespace oracle
