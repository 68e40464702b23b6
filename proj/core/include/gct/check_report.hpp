#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace gct {

// Uniform result of a property check: pass/fail, the worst numeric residual
// seen (0 for exact suites), and the first counterexample when one exists.
struct CheckReport {
  bool passed = true;
  double worst = 0.0;
  long cases = 0;
  std::string counterexample;
  std::vector<std::string> notes;

  void observe(double residual) { worst = std::max(worst, residual); }

  void fail(std::string cex) {
    passed = false;
    if (counterexample.empty()) counterexample = std::move(cex);
  }

  void merge(const CheckReport& o) {
    passed = passed && o.passed;
    worst = std::max(worst, o.worst);
    cases += o.cases;
    if (counterexample.empty()) counterexample = o.counterexample;
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
};

}  // namespace gct
