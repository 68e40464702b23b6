#pragma once

#include "gct/check_report.hpp"
#include "gct/composite.hpp"
#include "gct/formula.hpp"

#include <functional>
#include <string>
#include <type_traits>
#include <vector>

namespace gct {

// Quantitative formulas evaluated directly on trace distributions.  Every
// clause is linear in the distribution:
//
//   <T>(mu)        = total mass
//   <phi +_p psi>  = p <phi> + (1-p) <psi>
//   <(b) phi>(mu)  = <phi>(first letter b, stripped, weights kept)
//   <<r> phi>(mu)  = <phi>(mu)     time is already folded into the grade
//
// Keeping weights un-normalized makes an absent first letter contribute 0
// and keeps rational evaluation exact.  Boolean connectives and thresholds
// have no trace reading and are rejected.
template <typename W>
W trace_formula_value(const Formula& f, const FinDist<LabelWord, W>& mu,
                      const std::vector<std::string>& labels) {
  auto wcast = [](const Rational& r) -> W {
    if constexpr (std::is_same_v<W, Rational>)
      return r;
    else
      return to_double(r);
  };
  switch (f.kind) {
    case FormulaKind::Top: return mu.mass();
    case FormulaKind::Plus: {
      W p = wcast(f.number);
      return p * trace_formula_value(f.kids[0], mu, labels) +
             (W(1) - p) * trace_formula_value(f.kids[1], mu, labels);
    }
    case FormulaKind::Time:
      if (f.thresholded) break;
      return trace_formula_value(f.kids[0], mu, labels);
    case FormulaKind::Obs: {
      if (f.thresholded) break;
      int b = -1;
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == f.label) b = static_cast<int>(i);
      if (b < 0) throw std::invalid_argument("unknown label '" + f.label + "'");
      FinDist<LabelWord, W> stripped;
      for (const auto& [w, q] : mu.atoms())
        if (!w.empty() && w[0] == static_cast<char>(b)) stripped.add(w.substr(1), q);
      return trace_formula_value(f.kids[0], stripped, labels);
    }
    case FormulaKind::Not:
    case FormulaKind::And: break;
  }
  throw std::invalid_argument("no trace semantics for " + print_formula(f));
}

// Propositional operation of a logic instance, as a function on exact
// values in [0,1].
struct PropOp {
  std::string name;
  int arity = 0;
  std::function<Rational(const std::vector<Rational>&)> apply;
};

struct TraceLogicInstance {
  std::string name;
  std::vector<PropOp> ops;
};

// T and +_p over a small weight grid.  All ops are affine, so expectation
// is an algebra for them.
TraceLogicInstance quantitative_trace_instance();

// Same instance with Boolean conjunction (min) adjoined.  min does not
// commute with expectation, so the axiom check must reject it.
TraceLogicInstance with_boolean_and(TraceLogicInstance base);

// Exhaustive exact check that expectation carries the instance:
//   - expectation satisfies the algebra unit and multiplication laws,
//     including the splitting identities for the unit,
//   - every op commutes with expectation over enumerated joint
//     distributions,
//   - the label-read and time clauses are linear over mixtures of
//     enumerated trace distributions.
CheckReport trace_logic_axiom_check(const TraceLogicInstance& inst);

// Inductive state semantics against the trace reading at the formula's
// depth word: both sides must agree within tol at every state.  Formulas
// must be quantitative with uniform depth.
CheckReport factorization_check(WordGradedKernel& k, const std::vector<Formula>& formulas,
                                double tol);

}  // namespace gct
