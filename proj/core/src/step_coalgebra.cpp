#include "gct/step_coalgebra.hpp"

#include <stdexcept>

namespace gct {

std::optional<std::string> validate_step_coalgebra(const GradedStepCoalgebra& c) {
  int n = static_cast<int>(c.states.size());
  if (c.step.size() != c.states.size())
    return "step table size does not match state count";
  for (int i = 0; i < n; ++i) {
    const auto& d = c.step[static_cast<std::size_t>(i)];
    if (d.mass() != 1)
      return "step of " + c.states[static_cast<std::size_t>(i)] + " has mass " +
             format_rational(d.mass());
    for (const auto& [y, p] : d.atoms()) {
      if (y < 0 || y >= n)
        return "step of " + c.states[static_cast<std::size_t>(i)] + " leaves the state space";
      if (p <= 0)
        return "step of " + c.states[static_cast<std::size_t>(i)] + " has a nonpositive weight";
    }
  }
  return std::nullopt;
}

FinDist<int, Rational> iterate_step_coalgebra(const GradedStepCoalgebra& c, std::uint64_t n,
                                              int x) {
  if (auto err = validate_step_coalgebra(c))
    throw std::invalid_argument("iterate_step_coalgebra: " + *err);
  if (x < 0 || x >= static_cast<int>(c.states.size()))
    throw std::out_of_range("iterate_step_coalgebra: state out of range");
  FinDist<int, Rational> d = FinDist<int, Rational>::dirac(x);
  for (std::uint64_t i = 0; i < n; ++i)
    d = d.bind([&](int y) { return c.step[static_cast<std::size_t>(y)]; });
  return d;
}

GradedStepCoalgebra random_walk(int window) {
  if (window < 1) throw std::invalid_argument("random_walk: window must be >= 1");
  int n = 2 * window + 1;
  GradedStepCoalgebra c;
  const Rational half = rat(1, 2);
  for (int i = 0; i < n; ++i) {
    c.states.push_back(std::to_string(i - window));
    FinDist<int, Rational> d;
    d.add((i + 1) % n, half);
    d.add((i + n - 1) % n, half);
    c.step.push_back(d);
  }
  return c;
}

FinDist<int, Rational> extend_graded_semantics(const std::vector<std::vector<int>>& succ,
                                               std::uint64_t n, int x) {
  int m = static_cast<int>(succ.size());
  if (x < 0 || x >= m) throw std::out_of_range("extend_graded_semantics: state out of range");
  for (const auto& list : succ)
    for (int y : list)
      if (y < 0 || y >= m)
        throw std::invalid_argument("extend_graded_semantics: successor out of range");

  FinDist<int, Rational> d = FinDist<int, Rational>::dirac(x);
  for (std::uint64_t i = 0; i < n; ++i) {
    d = d.bind([&](int y) {
      const auto& list = succ[static_cast<std::size_t>(y)];
      if (list.empty())
        throw std::domain_error("extend_graded_semantics: state " + std::to_string(y) +
                                " has no successors");
      FinDist<int, Rational> u;
      Rational w = rat(1, static_cast<long>(list.size()));
      for (int z : list) u.add(z, w);
      return u;
    });
  }
  return d;
}

}  // namespace gct
