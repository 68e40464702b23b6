#pragma once

#include "gct/findist.hpp"
#include "gct/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gct {

// CTMC generator in column convention: at(k, j) is the rate of j -> k for
// k != j, diagonals are minus the column off-diagonal sum, so probability
// column vectors evolve as x' = A x.  Entries are exact rationals.
struct Generator {
  int n = 0;
  std::vector<Rational> a;  // row-major, n*n

  Generator() = default;
  explicit Generator(int states) : n(states), a(static_cast<std::size_t>(states) * states, Rational(0)) {}

  const Rational& at(int k, int j) const { return a[static_cast<std::size_t>(k) * n + j]; }
  Rational& at(int k, int j) { return a[static_cast<std::size_t>(k) * n + j]; }
};

// First violated invariant (with indices) or nullopt when well formed:
// square, off-diagonal entries nonnegative, every column sums to zero.
std::optional<std::string> validate_generator(const Generator& g);

// Finite-state CTMC with a probabilistic observation per state.  Labels are
// shared across states; every obs row is a full distribution over labels.
struct LabelledModel {
  std::string name;
  std::vector<std::string> states;
  std::vector<std::string> labels;
  Generator gen;
  std::vector<FinDist<int, Rational>> obs;  // per state, over label indices

  int n_states() const { return static_cast<int>(states.size()); }
  int n_labels() const { return static_cast<int>(labels.size()); }
  int state_index(const std::string& s) const;
  int label_index(const std::string& l) const;
};

std::optional<std::string> validate_model(const LabelledModel& m);

// Two-component repairable system: states 0 (none working), L, R (one
// working), 2 (both working); each component fails at rate lam and is
// repaired at rate mu.  Observations: 0 reads "no", 2 reads "yes", L and R
// read an even coin over both.
LabelledModel repairable_4state(const Rational& lam, const Rational& mu);

// Count-only variant: states 0, 1, 2 record how many components work; the
// middle state merges L and R, with doubled flows out of the extremes.
LabelledModel repairable_3state(const Rational& lam, const Rational& mu);

}  // namespace gct
