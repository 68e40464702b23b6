#pragma once

#include "gct/findist.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace oracle {

// Both repairable builtins describe two machines that fail at rate lam and
// get repaired at rate mu, independently.  Everything here is derived from
// the scalar two-state solution, never from the library's kernels.

// Two-state machine transition probabilities, s = lam + mu, E = exp(-s t).
double up_given_up(double lam, double mu, double t);
double up_given_down(double lam, double mu, double t);

struct EigenData {
  Eigen::MatrixXd v;
  Eigen::VectorXd lambda;
  Eigen::MatrixXd c;
};

// Spectrum {0, -s, -s, -2s} over states (0, L, R, 2); v and lambda come from
// the tensor square of the two-state chain, c from its explicit inverse.
EigenData repairable4_eigendata(double lam, double mu);

// Spectrum {0, -s, -2s} over states (0, 1, 2); eigenvectors are written out
// in closed form, c is the numeric inverse.
EigenData repairable3_eigendata(double lam, double mu);

// Transition matrices built entrywise from the two-state scalars, columns
// indexed by source state.
Eigen::MatrixXd repairable4_kernel(double lam, double mu, double t);
Eigen::MatrixXd repairable3_kernel(double lam, double mu, double t);

// Simple random walk on the cycle Z_n by exhaustive enumeration of all
// 2^steps paths, each of weight 2^-steps.  Exact.
gct::FinDist<int, gct::Rational> cycle_walk_paths(int n, std::uint64_t steps, int start);

}  // namespace oracle
