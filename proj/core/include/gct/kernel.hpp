#pragma once

#include "gct/model.hpp"

#include <Eigen/Dense>

#include <optional>

namespace gct {

// Transition matrix of a generator at one time point, column-stochastic:
// column j holds the distribution over successor states after time t when
// starting in j.
struct Kernel {
  Eigen::MatrixXd p;
  Rational t;
};

// Uniformization: with rate bound L = max |diagonal|, exp(At) is the
// Poisson-weighted sum of powers of the stochastic matrix I + A/L, truncated
// once the remaining Poisson tail drops below 1e-12.  t = 0 returns the
// identity exactly.  Large L*t is handled by exact time halving and squaring
// of the half-time kernel.
Kernel kernel_at(const Generator& g, const Rational& t);

// Column j of a kernel as a finite distribution over state indices.
FinDist<int, double> kernel_column(const Eigen::MatrixXd& p, int j);

// First violated stochasticity bound (entries within [-eps, 1+eps], column
// sums within eps of 1) or nullopt.
std::optional<std::string> validate_kernel(const Eigen::MatrixXd& p, double eps_mass = 1e-9);

}  // namespace gct
