#pragma once

#include "gct/rational.hpp"
#include "gct/sampling_word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gct {

// Shared syntax for two logic instances over the same modalities.
//
//   Boolean:       T, !phi, phi & psi, (b)_{p} phi, <r>_{p} phi
//   quantitative:  T, phi +_{p} psi,   (b) phi,     <r> phi
//
// (b) observes label b, <r> lets time r pass.  Thresholded modalities
// compare against p with >=.  The instances share only T; mixing
// connectives is rejected at parse time and by the evaluators.
enum class FormulaKind { Top, Not, And, Plus, Obs, Time };

struct Formula {
  FormulaKind kind = FormulaKind::Top;
  std::string label;          // Obs: observed label
  Rational time = Rational(0);     // Time: elapsed time r >= 0
  Rational number = Rational(0);   // Plus: mixing p; thresholded modality: p
  bool thresholded = false;   // modality carries a >= p threshold
  std::vector<Formula> kids;

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }
};

Formula f_top();
Formula f_not(Formula a);
Formula f_and(Formula a, Formula b);
Formula f_plus(const Rational& p, Formula a, Formula b);
Formula f_obs(const std::string& label, Formula a);
Formula f_obs_ge(const std::string& label, const Rational& p, Formula a);
Formula f_time(const Rational& r, Formula a);
Formula f_time_ge(const Rational& r, const Rational& p, Formula a);

enum class LogicInstance { Either, Boolean, Quantitative };

// Either for pure T; otherwise the single instance used, or nullopt-style
// error string when the formula mixes both.
struct InstanceResult {
  LogicInstance instance = LogicInstance::Either;
  std::optional<std::string> error;
};
InstanceResult formula_instance(const Formula& f);

// Canonical form: binary connectives fully parenthesized, thresholds in
// braces, no spaces.  parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

struct ParseError {
  std::size_t offset = 0;  // byte offset into the input
  std::string message;
};

struct ParseResult {
  std::optional<Formula> formula;
  ParseError error;  // meaningful iff !formula
};

// Concrete syntax, with '(' disambiguated against grouping by whether a
// known label followed by ')' comes next:
//
//   formula := unary (('&' | '+' '_' threshold) unary)*   left-assoc
//   unary   := '!' unary | modality unary | atom
//   modality:= '(' label ')' [threshold] | '<' rational '>' [threshold]
//   threshold := '_' rational | '_' '{' rational '}'
//   atom    := 'T' | '(' formula ')'
//
// Thresholds and mixing weights must lie in [0,1], times must be >= 0, and
// labels must belong to the given alphabet.
ParseResult parse_formula(const std::string& text, const std::vector<std::string>& labels);

// Sampling word measuring the modal depth: T has unit depth, (b) contributes
// 0:1, <r> contributes r:0 (applied on the left), binary connectives require
// equal depths on both sides.  When depths disagree, depth is empty and
// offending prints the smallest subterm where they split.
struct DepthResult {
  std::optional<SamplingWord> depth;
  std::string offending;
};
DepthResult uniform_depth(const Formula& f);

}  // namespace gct
