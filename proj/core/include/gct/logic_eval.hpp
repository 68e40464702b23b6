#pragma once

#include "gct/composite.hpp"
#include "gct/formula.hpp"

#include <vector>

namespace gct {

// Boolean instance, truth per state.  Observation thresholds compare
// exactly in rational arithmetic; time modalities go through the float
// kernel.  Rejects quantitative connectives.
std::vector<char> eval_boolean_all(WordGradedKernel& k, const Formula& f);

// Quantitative instance, expected value per state.  Rejects Boolean
// connectives.
std::vector<double> eval_quantitative_all(WordGradedKernel& k, const Formula& f);

bool eval_boolean(WordGradedKernel& k, const Formula& f, int state);
double eval_quantitative(WordGradedKernel& k, const Formula& f, int state);

}  // namespace gct
