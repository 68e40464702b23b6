#pragma once

#include "gct/composite.hpp"
#include "gct/lumping.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gct {

struct EquivConfig {
  std::vector<Rational> time_grid;  // positive segment times
  int max_segments = 3;
  std::uint64_t max_obs = 4;
  double tol = 1e-8;
  // Compare exponential-polynomial coefficients via eigendata for words with
  // at most one positive-time segment, quantifying over all times at once.
  bool exact_single_segment = true;

  static EquivConfig defaults();
};

enum class VerdictKind {
  IndistinguishableUpTo,  // no difference within the search bound
  Distinguished,          // a concrete witness word separates the states
  EquivalentWitness,      // a common quotient block witnesses equivalence
  NoWitnessFound,         // witness search exhausted; not an inequivalence proof
};

struct Verdict {
  VerdictKind kind = VerdictKind::NoWitnessFound;
  std::optional<SamplingWord> witness_word;
  FinDist<LabelWord, double> trace_left, trace_right;  // at the witness word
  double gap = 0;
  std::string bound;  // what was searched; verdicts are relative to it
  Partition partition;                        // blocks on the disjoint union
  std::vector<std::string> partition_states;  // names the partition refers to
  std::string note;
};

// All normalized words with times from the grid, at most max_segments
// segments and max_obs total observations, in enumeration order: fewer
// segments first, then lexicographic (time, then count, per segment).  Starts
// with the unit word.
std::vector<SamplingWord> enumerate_words(const EquivConfig& cfg);

// Bounded trace-equivalence semi-decision.  Requires both models to share
// the label alphabet.  Distinguished verdicts carry the first differing word
// in enumeration order, both traces and the gap.
Verdict trace_equivalent(WordGradedKernel& a, int x, WordGradedKernel& b, int y,
                         const EquivConfig& cfg);

// Behavioural-equivalence witness search: ordinary lumping on the disjoint
// union.  Sound only: EquivalentWitness proves equivalence; NoWitnessFound
// proves nothing.
Verdict behavioural_equivalent(const LabelledModel& a, int x, const LabelledModel& b, int y);

// Tagged disjoint union (block-diagonal generator, concatenated obs).
// Requires identical label alphabets.  States of b are suffixed when names
// collide.
LabelledModel disjoint_union(const LabelledModel& a, const LabelledModel& b);

std::string verdict_kind_str(VerdictKind k);

}  // namespace gct
