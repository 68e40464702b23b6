#include "gct/composite.hpp"
#include "gct/equivalence.hpp"
#include "gct/step_coalgebra.hpp"

#include "support/model_oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace gct;

namespace {

SamplingWord w(const std::string& text) {
  auto p = parse_word(text);
  REQUIRE(p.has_value());
  return *p;
}

}  // namespace

TEST_CASE("unit word acts as the identity") {
  WordGradedKernel k(repairable_4state(rat(1), rat(1)));
  const auto& table = k.at(SamplingWord{});
  for (int x = 0; x < 4; ++x) {
    CHECK(table[x].support_size() == 1);
    CHECK(table[x].at({LabelWord{}, x}) == 1.0);
  }
}

TEST_CASE("single observation reproduces the labelling") {
  auto m = repairable_4state(rat(1), rat(1));
  WordGradedKernel k(m);
  auto d = trace_vector(k, 1, w("0:1"));
  CHECK(d.at(LabelWord(1, char(0))) == Catch::Approx(0.5));
  CHECK(d.at(LabelWord(1, char(1))) == Catch::Approx(0.5));

  auto exact = trace_vector_exact(m, 1, w("0:1"));
  CHECK(exact.at(LabelWord(1, char(0))) == rat(1, 2));
  CHECK(exact.at(LabelWord(1, char(1))) == rat(1, 2));

  // observation draws leave the state untouched
  auto full = composite_at(k, w("0:2"), 3);
  for (const auto& [atom, p] : full.atoms()) CHECK(atom.second == 3);
}

TEST_CASE("exact evaluation rejects positive-time words") {
  auto m = repairable_4state(rat(1), rat(1));
  CHECK_THROWS_AS(trace_vector_exact(m, 0, w("1:1")), std::invalid_argument);
}

TEST_CASE("single time segment reproduces the closed-form kernel") {
  auto m = repairable_4state(rat(1), rat(1));
  WordGradedKernel k(m);
  auto d = composite_at(k, w("1:0"), 3);
  // diagonal entry from both machines up back to both up
  double want = (1 + 2 * std::exp(-2.0) + std::exp(-4.0)) / 4;
  CHECK(d.at({LabelWord{}, 3}) == Catch::Approx(want).epsilon(0).margin(1e-9));
  double mass = 0;
  for (const auto& [atom, p] : d.atoms()) {
    CHECK(atom.first.empty());
    mass += p;
  }
  CHECK(mass == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("trace probabilities follow the two-state closed form") {
  auto m = repairable_4state(rat(1), rat(1));
  WordGradedKernel k(m);
  // P(yes) after (t:1) equals the per-machine up probability: every up
  // machine answers yes with the same weight it contributes to obs.
  for (long tick : {8L, 64L, 160L}) {
    Rational t = rat(tick, 64);
    auto d = trace_vector(k, 3, SamplingWord::single(t, 1));
    CHECK(d.at(LabelWord(1, char(0))) ==
          Catch::Approx(oracle::up_given_up(1, 1, to_double(t))).margin(1e-10));
    auto d0 = trace_vector(k, 0, SamplingWord::single(t, 1));
    CHECK(d0.at(LabelWord(1, char(0))) ==
          Catch::Approx(oracle::up_given_down(1, 1, to_double(t))).margin(1e-10));
  }
}

TEST_CASE("memo returns the identical table") {
  WordGradedKernel k(repairable_4state(rat(1), rat(1)));
  const auto* first = &k.at(w("1:1,2:1"));
  const auto* second = &k.at(w("1:1,2:1"));
  CHECK(first == second);
  CHECK(k.memo_size() >= 1);
}

TEST_CASE("graded axioms hold on sampled word pairs") {
  for (auto m : {repairable_4state(rat(1), rat(1)), repairable_3state(rat(2), rat(3))}) {
    WordGradedKernel k(m);
    auto rep = check_graded_axioms(
        k, sample_word_pairs({rat(1, 10), rat(1, 2), rat(1), rat(2), rat(5)}, 50, 17u), 1e-8);
    INFO(rep.counterexample);
    CHECK(rep.passed);
    CHECK(rep.cases > 50);
  }
}

TEST_CASE("words rebuild from generator factors") {
  WordGradedKernel k(repairable_4state(rat(2), rat(3)));
  EquivConfig cfg = EquivConfig::defaults();
  cfg.max_segments = 2;
  cfg.max_obs = 3;
  auto rep = labelled_roundtrip_check(k, enumerate_words(cfg), 1e-8);
  INFO(rep.counterexample);
  CHECK(rep.passed);
}

TEST_CASE("word enumeration starts with the shortest observation") {
  auto words = enumerate_words(EquivConfig::defaults());
  REQUIRE(words.size() > 2);
  CHECK(words[0].is_unit());
  CHECK(words[1] == w("0:1"));
  for (const auto& u : words) CHECK(count_morphism(u) <= EquivConfig::defaults().max_obs);
}

TEST_CASE("symmetric repair states are trace equivalent") {
  auto m = repairable_4state(rat(1), rat(1));
  WordGradedKernel a(m), b(m);
  auto v = trace_equivalent(a, 1, b, 2, EquivConfig::defaults());
  CHECK(v.kind == VerdictKind::IndistinguishableUpTo);
  CHECK(v.gap < 1e-10);
}

TEST_CASE("failed and running states are distinguished by one draw") {
  auto m = repairable_4state(rat(1), rat(1));
  WordGradedKernel a(m), b(m);
  auto v = trace_equivalent(a, 0, b, 3, EquivConfig::defaults());
  CHECK(v.kind == VerdictKind::Distinguished);
  REQUIRE(v.witness_word.has_value());
  CHECK(*v.witness_word == w("0:1"));
  CHECK(v.gap == Catch::Approx(1.0));
}

TEST_CASE("mixed state matches the lumped middle state across models") {
  auto m4 = repairable_4state(rat(2), rat(3));
  auto m3 = repairable_3state(rat(2), rat(3));
  WordGradedKernel a(m4), b(m3);
  auto v = trace_equivalent(a, 1, b, 1, EquivConfig::defaults());
  CHECK(v.kind == VerdictKind::IndistinguishableUpTo);
  CHECK(v.gap < 1e-10);
}

TEST_CASE("behavioural equivalence via lumping on the union") {
  auto m = repairable_4state(rat(1), rat(1));
  auto yes = behavioural_equivalent(m, 1, m, 2);
  CHECK(yes.kind == VerdictKind::EquivalentWitness);

  auto no = behavioural_equivalent(m, 0, m, 3);
  CHECK(no.kind == VerdictKind::NoWitnessFound);

  auto m3 = repairable_3state(rat(1), rat(1));
  auto cross = behavioural_equivalent(m, 1, m3, 1);
  CHECK(cross.kind == VerdictKind::EquivalentWitness);
}

TEST_CASE("disjoint union rejects alphabet mismatches") {
  auto m = repairable_4state(rat(1), rat(1));
  auto other = m;
  other.labels = {"hot", "cold"};
  CHECK_THROWS_AS(disjoint_union(m, other), std::invalid_argument);
}

TEST_CASE("random walk two-step law and semigroup property") {
  auto walk = random_walk(3);
  CHECK_FALSE(validate_step_coalgebra(walk).has_value());
  REQUIRE(walk.states.size() == 7);
  CHECK(walk.states[0] == "-3");
  CHECK(walk.states[3] == "0");

  FinDist<int, Rational> expect;
  expect.add(1, rat(1, 4));
  expect.add(3, rat(1, 2));
  expect.add(5, rat(1, 4));
  CHECK(iterate_step_coalgebra(walk, 2, 3) == expect);

  for (std::uint64_t m = 0; m <= 4; ++m)
    for (std::uint64_t n = 0; m + n <= 4; ++n) {
      auto whole = iterate_step_coalgebra(walk, m + n, 2);
      auto split = iterate_step_coalgebra(walk, m, 2).bind([&](int y) {
        return iterate_step_coalgebra(walk, n, y);
      });
      CHECK(whole == split);
    }
}

TEST_CASE("random walk agrees with path enumeration") {
  auto walk = random_walk(4);
  int n = 9;
  for (std::uint64_t steps = 0; steps <= 6; ++steps)
    for (int x = 0; x < n; x += 2)
      CHECK(iterate_step_coalgebra(walk, steps, x) == oracle::cycle_walk_paths(n, steps, x));
}

TEST_CASE("uniform successor semantics and its failure mode") {
  std::vector<std::vector<int>> succ = {{0, 1}, {1}};
  FinDist<int, Rational> two;
  two.add(0, rat(1, 4));
  two.add(1, rat(3, 4));
  CHECK(extend_graded_semantics(succ, 2, 0) == two);
  CHECK(extend_graded_semantics(succ, 0, 1) == FinDist<int, Rational>::dirac(1));
  CHECK_THROWS_AS(extend_graded_semantics({{1}, {}}, 2, 0), std::domain_error);
  CHECK_THROWS_AS(extend_graded_semantics({{5}}, 1, 0), std::invalid_argument);
}
