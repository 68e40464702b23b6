#include "cmd_check.hpp"

#include "gct/composite.hpp"
#include "gct/dist_law.hpp"
#include "gct/eigen_solution.hpp"
#include "gct/equivalence.hpp"
#include "gct/kernel.hpp"
#include "gct/logic_search.hpp"
#include "gct/lumping.hpp"
#include "gct/step_coalgebra.hpp"
#include "gct/trace_logic.hpp"

#include <json.hpp>

#include <functional>
#include <iostream>
#include <random>

namespace gcli {
namespace {

using gct::CheckReport;
using gct::rat;
using gct::Rational;

const std::vector<Rational> kQuarters = {rat(0), rat(1, 4), rat(1, 2), rat(3, 4), rat(1)};
const std::vector<Rational> kTimeGrid = {rat(1, 10), rat(1, 2), rat(1), rat(2), rat(5)};

CheckReport suite_samp_monoid() { return gct::check_sampling_monoid(1000, 20240917u); }

CheckReport suite_dist_monad() {
  CheckReport rep = gct::check_monad_laws(2, kQuarters);
  rep.merge(gct::check_monad_laws(3, kQuarters));
  return rep;
}

CheckReport suite_dist_law(bool mutate) {
  if (mutate) return gct::check_distributive_law(gct::LabelSwapLaw{0, 1}, 3, 2, kQuarters);
  return gct::check_distributive_law(gct::StrengthLaw{}, 3, 2, kQuarters);
}

CheckReport suite_chapman(const gct::LabelledModel& m, double tol) {
  CheckReport rep;
  gct::Kernel at0 = gct::kernel_at(m.gen, rat(0));
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m.gen.n, m.gen.n);
  ++rep.cases;
  if ((at0.p - id).cwiseAbs().maxCoeff() != 0.0)
    rep.fail("kernel at t = 0 is not exactly the identity");

  std::mt19937 rng(4242u);
  std::uniform_int_distribution<long> tick(0, 5 * 64);
  for (int i = 0; i < 100; ++i) {
    Rational s = rat(tick(rng), 64), t = rat(tick(rng), 64);
    Eigen::MatrixXd lhs = gct::kernel_at(m.gen, t).p * gct::kernel_at(m.gen, s).p;
    Eigen::MatrixXd rhs = gct::kernel_at(m.gen, s + t).p;
    double r = (lhs - rhs).cwiseAbs().maxCoeff();
    ++rep.cases;
    rep.observe(r);
    if (r > tol)
      rep.fail("kernel at s+t deviates by " + gct::format_double(r) + " at s = " +
               gct::format_rational(s) + ", t = " + gct::format_rational(t));
  }
  return rep;
}

CheckReport suite_eigen(const gct::LabelledModel& m, double tol) {
  CheckReport rep;
  auto es = gct::eigen_solution(m.gen);
  if (!es) {
    rep.notes.push_back("eigendata unavailable for this generator; nothing to compare");
    return rep;
  }
  std::string vals;
  for (int i = 0; i < es->eigenvalues.size(); ++i) {
    if (i) vals += ", ";
    vals += gct::format_double(es->eigenvalues(i));
  }
  rep.notes.push_back("eigenvalues: " + vals);
  rep.notes.push_back("eigenvector condition number: " + gct::format_double(es->cond));
  for (const Rational& t : kTimeGrid) {
    Eigen::MatrixXd uni = gct::kernel_at(m.gen, t).p;
    Eigen::MatrixXd eig = gct::kernel_from_eigen(*es, gct::to_double(t));
    double r = (uni - eig).cwiseAbs().maxCoeff();
    ++rep.cases;
    rep.observe(r);
    if (r > tol)
      rep.fail("uniformization and eigenreconstruction differ by " + gct::format_double(r) +
               " at t = " + gct::format_rational(t));
  }
  return rep;
}

CheckReport suite_homomorphism(const gct::LabelledModel& m, double tol) {
  gct::LumpingResult r = gct::lumpability_quotient(m);
  CheckReport rep = gct::check_homomorphism(r.partition, m, r.quotient,
                                            {rat(0), rat(1, 10), rat(1), rat(5)}, tol);
  rep.notes.push_back("blocks: " + gct::partition_str(r.partition, m.states));
  return rep;
}

CheckReport suite_lumping(const gct::LabelledModel& m, const ModelOptions& mo) {
  CheckReport rep;
  gct::LumpingResult r = gct::lumpability_quotient(m);
  ++rep.cases;
  if (auto err = gct::validate_model(r.quotient)) rep.fail("quotient invalid: " + *err);
  rep.notes.push_back("blocks: " + gct::partition_str(r.partition, m.states));

  if (m.name == "repairable4") {
    Rational lam = parse_rational_flag(mo.lambda, "--lambda");
    Rational mu = parse_rational_flag(mo.mu, "--mu");
    gct::LabelledModel expect = gct::repairable_3state(lam, mu);
    ++rep.cases;
    if (r.quotient.gen.n != expect.gen.n || r.quotient.gen.a != expect.gen.a)
      rep.fail("quotient generator differs from the 3-state builtin");
    ++rep.cases;
    if (r.quotient.obs != expect.obs)
      rep.fail("quotient observations differ from the 3-state builtin");
    rep.notes.push_back("quotient generator matches the 3-state builtin exactly");
  }
  return rep;
}

CheckReport suite_graded_axioms(const gct::LabelledModel& m, double tol) {
  gct::WordGradedKernel k(m);
  auto pairs = gct::sample_word_pairs(kTimeGrid, 50, 7u);
  return gct::check_graded_axioms(k, pairs, tol);
}

CheckReport suite_roundtrip(const gct::LabelledModel& m, double tol) {
  gct::WordGradedKernel k(m);
  gct::EquivConfig cfg = gct::EquivConfig::defaults();
  cfg.max_segments = 2;
  cfg.max_obs = 3;
  return gct::labelled_roundtrip_check(k, gct::enumerate_words(cfg), tol);
}

CheckReport suite_randomwalk(int window) {
  CheckReport rep;
  gct::GradedStepCoalgebra walk = gct::random_walk(window);
  ++rep.cases;
  if (auto err = gct::validate_step_coalgebra(walk)) rep.fail(*err);

  if (window >= 2) {
    gct::FinDist<int, Rational> expect;
    expect.add(window - 2, rat(1, 4));
    expect.add(window, rat(1, 2));
    expect.add(window + 2, rat(1, 4));
    ++rep.cases;
    if (gct::iterate_step_coalgebra(walk, 2, window) != expect)
      rep.fail("two steps from the centre are not {-2: 1/4, 0: 1/2, +2: 1/4}");
  }

  int n = 2 * window + 1;
  for (std::uint64_t mm = 0; mm <= 6; ++mm)
    for (std::uint64_t nn = 0; mm + nn <= 6; ++nn)
      for (int x = 0; x < n; ++x) {
        ++rep.cases;
        auto whole = gct::iterate_step_coalgebra(walk, mm + nn, x);
        auto split = gct::iterate_step_coalgebra(walk, mm, x).bind([&](int y) {
          return gct::iterate_step_coalgebra(walk, nn, y);
        });
        if (whole != split)
          rep.fail("grades " + std::to_string(mm) + "+" + std::to_string(nn) +
                   " do not compose at state " + walk.states[static_cast<std::size_t>(x)]);
      }
  return rep;
}

CheckReport suite_extend() {
  CheckReport rep;
  std::vector<std::vector<int>> succ = {{0, 1}, {1}};
  gct::FinDist<int, Rational> one;
  one.add(0, rat(1, 2));
  one.add(1, rat(1, 2));
  gct::FinDist<int, Rational> two;
  two.add(0, rat(1, 4));
  two.add(1, rat(3, 4));
  ++rep.cases;
  if (gct::extend_graded_semantics(succ, 1, 0) != one)
    rep.fail("one uniform step from a self-loop/advance state is off");
  ++rep.cases;
  if (gct::extend_graded_semantics(succ, 2, 0) != two)
    rep.fail("two uniform steps from a self-loop/advance state are off");

  ++rep.cases;
  bool threw = false;
  try {
    gct::extend_graded_semantics({{1}, {}}, 2, 0);
  } catch (const std::domain_error&) {
    threw = true;
  }
  if (!threw) rep.fail("a reachable empty successor set must be rejected");
  return rep;
}

CheckReport suite_logic_axioms(bool mutate) {
  gct::TraceLogicInstance inst = gct::quantitative_trace_instance();
  if (mutate) inst = gct::with_boolean_and(inst);
  return gct::trace_logic_axiom_check(inst);
}

CheckReport suite_factorization(const gct::LabelledModel& m) {
  gct::WordGradedKernel k(m);
  auto formulas = gct::quantitative_budget_formulas(m, gct::FormulaBudget::defaults());
  CheckReport rep = gct::factorization_check(k, formulas, 1e-9);
  rep.notes.push_back(std::to_string(formulas.size()) + " uniform-depth formulas");
  return rep;
}

CheckReport suite_logic_invariance(const gct::LabelledModel& m, double tol) {
  gct::WordGradedKernel k(m);
  gct::LumpingResult r = gct::lumpability_quotient(m);
  return gct::invariance_suite(k, r.partition, gct::FormulaBudget::defaults(), tol);
}

CheckReport suite_logic_quotient(const gct::LabelledModel& m) {
  CheckReport rep;
  gct::WordGradedKernel k(m);
  gct::Partition logical = gct::logical_quotient(k, gct::FormulaBudget::defaults());
  gct::Partition lumping = gct::lumpability_quotient(m).partition;
  ++rep.cases;
  if (logical != lumping)
    rep.fail("logical classes " + gct::partition_str(logical, m.states) +
             " differ from lumping blocks " + gct::partition_str(lumping, m.states));

  for (int i = 0; i < m.n_states() && rep.passed; ++i)
    for (int j = i + 1; j < m.n_states(); ++j) {
      if (lumping[static_cast<std::size_t>(i)] == lumping[static_cast<std::size_t>(j)]) continue;
      ++rep.cases;
      auto f = gct::find_distinguishing_formula(k, i, j, gct::FormulaBudget::defaults());
      if (!f) {
        rep.fail("no distinguishing formula for " + m.states[static_cast<std::size_t>(i)] +
                 " vs " + m.states[static_cast<std::size_t>(j)]);
      } else if (i == 0 && j == m.n_states() - 1) {
        rep.notes.push_back("first vs last state distinguished by " + gct::print_formula(*f));
      }
    }
  return rep;
}

struct SuiteRun {
  std::string name;
  CheckReport report;
};

}  // namespace

int run_check(const CheckConfig& cfg) {
  const bool swap_label = cfg.mutate == "swap-label";
  const bool bool_and = cfg.mutate == "bool-and";
  const double tol = cfg.common.tol;

  // Model-independent suites never resolve the model flags, so `check
  // --suite samp-monoid` works without any model present.
  std::vector<std::pair<std::string, std::function<CheckReport()>>> table = {
      {"samp-monoid", [&] { return suite_samp_monoid(); }},
      {"dist-monad", [&] { return suite_dist_monad(); }},
      {"dist-law", [&] { return suite_dist_law(swap_label); }},
      {"chapman", [&] { return suite_chapman(cfg.model.resolve(), tol); }},
      {"eigen", [&] { return suite_eigen(cfg.model.resolve(), tol); }},
      {"homomorphism", [&] { return suite_homomorphism(cfg.model.resolve(), tol); }},
      {"lumping", [&] { return suite_lumping(cfg.model.resolve(), cfg.model); }},
      {"graded-axioms", [&] { return suite_graded_axioms(cfg.model.resolve(), tol); }},
      {"roundtrip", [&] { return suite_roundtrip(cfg.model.resolve(), tol); }},
      {"randomwalk", [&] { return suite_randomwalk(cfg.window); }},
      {"extend", [&] { return suite_extend(); }},
      {"logic-axioms", [&] { return suite_logic_axioms(bool_and); }},
      {"factorization", [&] { return suite_factorization(cfg.model.resolve()); }},
      {"logic-invariance", [&] { return suite_logic_invariance(cfg.model.resolve(), tol); }},
      {"logic-quotient", [&] { return suite_logic_quotient(cfg.model.resolve()); }},
  };

  std::vector<SuiteRun> runs;
  bool found = false;
  for (auto& [name, fn] : table) {
    if (cfg.suite != "all" && cfg.suite != name) continue;
    found = true;
    runs.push_back({name, fn()});
  }
  if (!found) throw UsageError("unknown suite '" + cfg.suite + "'");

  bool all_passed = true;
  for (const SuiteRun& run : runs) all_passed = all_passed && run.report.passed;

  if (cfg.common.format == "json") {
    nlohmann::json suites = nlohmann::json::object();
    for (const SuiteRun& run : runs) {
      nlohmann::json j = {{"passed", run.report.passed},
                          {"cases", run.report.cases},
                          {"worst", run.report.worst},
                          {"notes", run.report.notes}};
      if (!run.report.passed) j["counterexample"] = run.report.counterexample;
      suites[run.name] = j;
    }
    nlohmann::json out = {{"passed", all_passed}, {"suites", suites}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const SuiteRun& run : runs) {
      std::cout << run.name;
      for (std::size_t i = run.name.size(); i < 18; ++i) std::cout << ' ';
      std::cout << (run.report.passed ? "pass" : "FAIL") << "  cases " << run.report.cases
                << "  worst " << gct::format_double(run.report.worst) << "\n";
      if (!run.report.passed)
        std::cout << "  counterexample: " << run.report.counterexample << "\n";
      for (const std::string& note : run.report.notes) std::cout << "  " << note << "\n";
    }
    std::cout << (all_passed ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all_passed ? kExitOk : kExitPropertyFailure;
}

}  // namespace gcli
