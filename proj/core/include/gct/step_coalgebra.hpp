#pragma once

#include "gct/findist.hpp"
#include "gct/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gct {

// Discrete-step system graded by (N, +, 0): one exact transition
// distribution per state, iterated by Kleisli composition.
struct GradedStepCoalgebra {
  std::vector<std::string> states;
  std::vector<FinDist<int, Rational>> step;
};

// Steps must be indexed like states, have exact mass 1 and stay in range.
std::optional<std::string> validate_step_coalgebra(const GradedStepCoalgebra& c);

// gamma_0 = unit, gamma_{n+1} = gamma_n ; step.  Exact.
FinDist<int, Rational> iterate_step_coalgebra(const GradedStepCoalgebra& c, std::uint64_t n,
                                              int x);

// Symmetric +-1 walk on positions -window..window with cyclic wraparound.
// State index i holds position i - window; state names are the positions.
GradedStepCoalgebra random_walk(int window);

// Nondeterministic successor lists extended to graded probabilistic
// semantics: each step picks uniformly among the listed successors
// (multiplicity counts).  Throws std::domain_error when a state reachable
// within n steps has an empty successor list.
FinDist<int, Rational> extend_graded_semantics(const std::vector<std::vector<int>>& succ,
                                               std::uint64_t n, int x);

}  // namespace gct
