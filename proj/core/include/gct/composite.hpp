#pragma once

#include "gct/check_report.hpp"
#include "gct/kernel.hpp"
#include "gct/model.hpp"
#include "gct/sampling_word.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace gct {

// Observation word: one byte per drawn label, in draw order (values are label
// indices into the model alphabet).
using LabelWord = std::string;

// Rendered as the label names concatenated; the empty word prints "ε".
std::string label_word_str(const LabelWord& w, const std::vector<std::string>& labels);

// Result atom of running a sampling word: the observed label word and the
// state reached.
using CompositeAtom = std::pair<LabelWord, int>;

// Evaluates sampling words against a model and memoizes per normalized word:
// for the word (t0:k0,...,tn:kn), each segment advances the chain by ti via
// the uniformized kernel and then draws ki labels independently at the landed
// state (the state is untouched by drawing); segments chain by Kleisli
// composition of the distribution monad.  The memo is a deterministic table:
// concurrent lookups of the same word always yield the same value.
class WordGradedKernel {
 public:
  explicit WordGradedKernel(LabelledModel m);

  const LabelledModel& model() const { return m_; }

  // Per start state, the distribution over (label word, landed state).
  const std::vector<FinDist<CompositeAtom, double>>& at(const SamplingWord& w);

  // Memoized uniformized kernel.
  const Eigen::MatrixXd& kernel(const Rational& t);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::vector<FinDist<CompositeAtom, double>> compute(const SamplingWord& w);

  LabelledModel m_;
  std::map<SamplingWord, std::vector<FinDist<CompositeAtom, double>>> memo_;
  std::map<Rational, Eigen::MatrixXd> kernels_;
  std::mutex memo_mu_;
  std::mutex kernel_mu_;
};

FinDist<CompositeAtom, double> composite_at(WordGradedKernel& k, const SamplingWord& w, int state);

// Distribution over observed label words only (landed state discarded).
FinDist<LabelWord, double> trace_vector(WordGradedKernel& k, int state, const SamplingWord& w);

// Exact evaluation for pure-observation words (total time zero): the kernel
// is the identity, so only rational observation weights enter.
FinDist<CompositeAtom, Rational> composite_at_exact(const LabelledModel& m, const SamplingWord& w,
                                                    int state);
FinDist<LabelWord, Rational> trace_vector_exact(const LabelledModel& m, int state,
                                                const SamplingWord& w);

// Kleisli continuation: run w from every atom of d, prepending the already
// observed labels.
FinDist<CompositeAtom, double> kleisli_then(const FinDist<CompositeAtom, double>& d,
                                            WordGradedKernel& k, const SamplingWord& w);

// Graded coalgebra axioms: the unit word acts as the Kleisli unit (exact) and
// evaluating u*v equals running u then v, within tol, for every supplied pair.
CheckReport check_graded_axioms(WordGradedKernel& k,
                                const std::vector<std::pair<SamplingWord, SamplingWord>>& pairs,
                                double tol);

// Deterministic pseudo-random word pairs over the given time grid.
std::vector<std::pair<SamplingWord, SamplingWord>> sample_word_pairs(
    const std::vector<Rational>& time_grid, int count, unsigned seed);

// Generator decomposition roundtrip: single segments (t:0) reproduce the
// kernel, (0:1) reproduces one observation draw, and every supplied word
// equals the Kleisli chain of its generator factors (t:0) and (0:1), within
// tol.
CheckReport labelled_roundtrip_check(WordGradedKernel& k, const std::vector<SamplingWord>& words,
                                     double tol);

}  // namespace gct
