#include "gct/logic_search.hpp"

#include "gct/logic_eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gct {

FormulaBudget FormulaBudget::defaults() {
  FormulaBudget b;
  b.p_grid = {rat(1, 4), rat(1, 2), rat(3, 4)};
  b.time_grid = {rat(1, 10), rat(1, 2), rat(1), rat(2), rat(5)};
  return b;
}

namespace {

std::vector<Rational> thresholds(const LabelledModel& m, const FormulaBudget& b) {
  std::vector<Rational> p = b.p_grid;
  if (b.add_obs_derived)
    for (const auto& row : m.obs)
      for (const auto& [lbl, w] : row.atoms()) p.push_back(w);
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  for (const Rational& q : p)
    if (q < 0 || q > 1) throw std::invalid_argument("threshold outside [0,1]");
  return p;
}

// Modalities in enumeration order: labels (model order) before times, each
// swept over its parameter grid.
std::vector<Formula> apply_modalities(const LabelledModel& m, const FormulaBudget& b,
                                      const std::vector<Rational>& p,
                                      const std::vector<Formula>& children, bool thresholded) {
  std::vector<Formula> out;
  for (const std::string& lbl : m.labels) {
    if (thresholded) {
      for (const Rational& q : p)
        for (const Formula& c : children) out.push_back(f_obs_ge(lbl, q, c));
    } else {
      for (const Formula& c : children) out.push_back(f_obs(lbl, c));
    }
  }
  for (const Rational& t : b.time_grid) {
    if (thresholded) {
      for (const Rational& q : p)
        for (const Formula& c : children) out.push_back(f_time_ge(t, q, c));
    } else {
      for (const Formula& c : children) out.push_back(f_time(t, c));
    }
  }
  return out;
}

Partition renumber(const std::vector<int>& raw) {
  Partition out(raw.size(), -1);
  std::map<int, int> seen;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, fresh] = seen.emplace(raw[i], static_cast<int>(seen.size()));
    out[i] = it->second;
    (void)fresh;
  }
  return out;
}

}  // namespace

std::vector<Formula> boolean_budget_formulas(const LabelledModel& m, const FormulaBudget& b) {
  std::vector<Rational> p = thresholds(m, b);
  std::vector<Formula> out;
  std::vector<Formula> level = {f_top()};
  for (int d = 1; d <= b.max_depth; ++d) {
    level = apply_modalities(m, b, p, level, true);
    for (const Formula& f : level) {
      out.push_back(f);
      if (b.include_negation) out.push_back(f_not(f));
    }
  }
  return out;
}

std::vector<Formula> quantitative_budget_formulas(const LabelledModel& m, const FormulaBudget& b) {
  std::vector<Formula> out = {f_top()};
  std::vector<Formula> level = {f_top()};
  std::vector<Formula> shallow = {f_top()};  // depth <= 1, for mixtures
  for (int d = 1; d <= b.max_depth; ++d) {
    level = apply_modalities(m, b, {}, level, false);
    out.insert(out.end(), level.begin(), level.end());
    if (d == 1) shallow.insert(shallow.end(), level.begin(), level.end());
  }
  for (std::size_t i = 0; i < shallow.size(); ++i) {
    DepthResult di = uniform_depth(shallow[i]);
    for (std::size_t j = i; j < shallow.size(); ++j) {
      DepthResult dj = uniform_depth(shallow[j]);
      if (*di.depth != *dj.depth) continue;
      for (const Rational& q : b.p_grid) out.push_back(f_plus(q, shallow[i], shallow[j]));
    }
  }
  return out;
}

Partition logical_quotient(WordGradedKernel& k, const FormulaBudget& b) {
  const LabelledModel& m = k.model();
  int n = m.n_states();
  std::vector<int> part(static_cast<std::size_t>(n), 0);
  int blocks = 1;
  for (const Formula& f : boolean_budget_formulas(m, b)) {
    if (blocks == n) break;
    std::vector<char> vals = eval_boolean_all(k, f);
    std::map<std::pair<int, char>, int> next;
    std::vector<int> refined(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      auto key = std::make_pair(part[static_cast<std::size_t>(i)],
                                vals[static_cast<std::size_t>(i)]);
      auto [it, fresh] = next.emplace(key, static_cast<int>(next.size()));
      refined[static_cast<std::size_t>(i)] = it->second;
      (void)fresh;
    }
    part = refined;
    blocks = static_cast<int>(next.size());
  }
  return renumber(part);
}

std::optional<Formula> find_distinguishing_formula(WordGradedKernel& k, int x, int y,
                                                   const FormulaBudget& b) {
  const LabelledModel& m = k.model();
  if (x < 0 || x >= m.n_states() || y < 0 || y >= m.n_states())
    throw std::out_of_range("find_distinguishing_formula: state out of range");
  for (const Formula& f : boolean_budget_formulas(m, b)) {
    std::vector<char> vals = eval_boolean_all(k, f);
    if (vals[static_cast<std::size_t>(x)] != vals[static_cast<std::size_t>(y)]) return f;
  }
  return std::nullopt;
}

SeparationProbe separate_traces(const FinDist<LabelWord, double>& left,
                                const FinDist<LabelWord, double>& right,
                                const std::vector<std::string>& labels, double tol) {
  SeparationProbe probe;
  std::vector<LabelWord> atoms;
  for (const auto& [w, q] : left.atoms()) atoms.push_back(w);
  for (const auto& [w, q] : right.atoms()) atoms.push_back(w);
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());

  for (const LabelWord& w : atoms) {
    double lv = left.at(w), rv = right.at(w);
    if (std::abs(lv - rv) <= tol) continue;
    probe.separated = true;
    probe.atom = w;
    probe.left_value = lv;
    probe.right_value = rv;
    probe.threshold = std::max(lv, rv);
    probe.left_satisfies = lv >= probe.threshold;
    // The exact binary value of the threshold keeps >= sharp: the larger
    // side meets it with equality, the smaller side falls strictly below.
    Rational q(probe.threshold);
    Formula f = f_top();
    for (std::size_t i = w.size(); i > 1; --i)
      f = f_obs(labels.at(static_cast<std::size_t>(w[i - 1])), f);
    if (!w.empty())
      f = f_obs_ge(labels.at(static_cast<std::size_t>(w[0])), q, f);
    else
      f = f_time_ge(rat(0), q, f);
    probe.formula = f;
    return probe;
  }
  return probe;
}

CheckReport invariance_suite(WordGradedKernel& k, const Partition& part, const FormulaBudget& b,
                             double tol) {
  const LabelledModel& m = k.model();
  int n = m.n_states();
  if (part.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("invariance_suite: partition size mismatch");
  std::vector<int> rep_of_block;
  std::vector<int> rep(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int blk = part[static_cast<std::size_t>(i)];
    if (blk >= static_cast<int>(rep_of_block.size())) rep_of_block.resize(blk + 1, -1);
    if (rep_of_block[static_cast<std::size_t>(blk)] < 0)
      rep_of_block[static_cast<std::size_t>(blk)] = i;
    rep[static_cast<std::size_t>(i)] = rep_of_block[static_cast<std::size_t>(blk)];
  }

  CheckReport report;
  for (const Formula& f : boolean_budget_formulas(m, b)) {
    std::vector<char> vals = eval_boolean_all(k, f);
    for (int i = 0; i < n; ++i) {
      ++report.cases;
      if (vals[static_cast<std::size_t>(i)] !=
          vals[static_cast<std::size_t>(rep[static_cast<std::size_t>(i)])])
        report.fail(print_formula(f) + " splits " + m.states[static_cast<std::size_t>(i)] +
                    " from " +
                    m.states[static_cast<std::size_t>(rep[static_cast<std::size_t>(i)])]);
    }
  }
  for (const Formula& f : quantitative_budget_formulas(m, b)) {
    std::vector<double> vals = eval_quantitative_all(k, f);
    for (int i = 0; i < n; ++i) {
      ++report.cases;
      double residual = std::abs(vals[static_cast<std::size_t>(i)] -
                                 vals[static_cast<std::size_t>(rep[static_cast<std::size_t>(i)])]);
      report.observe(residual);
      if (residual > tol)
        report.fail(print_formula(f) + " differs by " + format_double(residual) + " between " +
                    m.states[static_cast<std::size_t>(i)] + " and " +
                    m.states[static_cast<std::size_t>(rep[static_cast<std::size_t>(i)])]);
    }
  }
  return report;
}

}  // namespace gct
