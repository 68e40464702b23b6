#pragma once

#include "gct/check_report.hpp"
#include "gct/composite.hpp"
#include "gct/formula.hpp"
#include "gct/lumping.hpp"

#include <optional>
#include <vector>

namespace gct {

// Finite formula family used for quotients and witness searches.
// Thresholds combine the base grid with every weight occurring in the
// model's observation rows (sorted, deduplicated).
struct FormulaBudget {
  std::vector<Rational> p_grid;      // base thresholds and mixing weights
  bool add_obs_derived = true;
  std::vector<Rational> time_grid;   // times for <r>
  int max_depth = 3;                 // modal chain length
  bool include_negation = true;      // Boolean: also !chain

  static FormulaBudget defaults();
};

// Boolean instance: all modal chains of depth 1..max_depth over the
// modalities (b)_{p} and <r>_{p}, preceded by T, plus top-level negations.
// Deterministic order: depth, then label modalities before time modalities,
// then parameter order.
std::vector<Formula> boolean_budget_formulas(const LabelledModel& m, const FormulaBudget& b);

// Quantitative instance: un-thresholded modal chains of depth 0..max_depth
// plus p-mixtures of equal-depth chains of depth <= 1.  Every result has
// uniform depth.
std::vector<Formula> quantitative_budget_formulas(const LabelledModel& m, const FormulaBudget& b);

// States identified iff they agree on every Boolean budget formula.  Blocks
// are numbered by first occurrence.
Partition logical_quotient(WordGradedKernel& k, const FormulaBudget& b);

// First Boolean budget formula (in enumeration order) whose truth differs
// at the two states.
std::optional<Formula> find_distinguishing_formula(WordGradedKernel& k, int x, int y,
                                                   const FormulaBudget& b);

// Constructive separation on trace distributions: locate the first label
// word whose probabilities differ by more than tol and turn it into a
// thresholded modal chain that exactly one side satisfies.
struct SeparationProbe {
  bool separated = false;
  LabelWord atom;
  double left_value = 0, right_value = 0;
  double threshold = 0;    // max of the two values; satisfaction is >=
  Formula formula;         // chain spelling the atom, threshold outermost
  bool left_satisfies = false;
};
SeparationProbe separate_traces(const FinDist<LabelWord, double>& left,
                                const FinDist<LabelWord, double>& right,
                                const std::vector<std::string>& labels, double tol);

// Logical invariance under a state partition: Boolean budget formulas must
// be constant on every block, quantitative ones constant within tol.
CheckReport invariance_suite(WordGradedKernel& k, const Partition& part, const FormulaBudget& b,
                             double tol);

}  // namespace gct
