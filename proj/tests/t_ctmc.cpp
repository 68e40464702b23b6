#include "gct/eigen_solution.hpp"
#include "gct/kernel.hpp"
#include "gct/lumping.hpp"
#include "gct/model.hpp"
#include "gct/model_io.hpp"

#include "support/expm_oracle.hpp"
#include "support/model_oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <random>

using namespace gct;

namespace {

Eigen::MatrixXd generator_as_matrix(const Generator& g) {
  Eigen::MatrixXd q(g.n, g.n);
  for (int k = 0; k < g.n; ++k)
    for (int j = 0; j < g.n; ++j) q(k, j) = to_double(g.at(k, j));
  return q;
}

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("generator validation") {
  Generator g(2);
  g.at(0, 0) = -1;
  g.at(1, 0) = 1;
  g.at(0, 1) = 2;
  g.at(1, 1) = -2;
  CHECK_FALSE(validate_generator(g).has_value());

  g.at(1, 1) = -3;
  auto err = validate_generator(g);
  REQUIRE(err.has_value());
  CHECK(err->find("column 1") != std::string::npos);

  Generator neg(2);
  neg.at(0, 0) = 1;
  neg.at(1, 0) = -1;
  neg.at(0, 1) = 0;
  neg.at(1, 1) = 0;
  CHECK(validate_generator(neg).has_value());
}

TEST_CASE("builtin models validate and quotient to each other") {
  auto m4 = repairable_4state(rat(2), rat(3));
  auto m3 = repairable_3state(rat(2), rat(3));
  CHECK_FALSE(validate_model(m4).has_value());
  CHECK_FALSE(validate_model(m3).has_value());
  CHECK_THROWS_AS(repairable_4state(rat(0), rat(1)), std::invalid_argument);

  auto r = lumpability_quotient(m4);
  CHECK(r.partition == Partition{0, 1, 1, 2});
  CHECK(r.quotient.gen.n == 3);
  CHECK(r.quotient.gen.a == m3.gen.a);
  CHECK(r.quotient.obs == m3.obs);
  CHECK(partition_str(r.partition, m4.states) == "{0} {L,R} {2}");
}

TEST_CASE("uniformization matches the Taylor oracle") {
  std::mt19937 rng(5u);
  std::uniform_int_distribution<long> tick(0, 5 * 64);
  for (auto [lam, mu] : {std::pair{rat(1), rat(1)}, {rat(2), rat(3)}, {rat(1, 2), rat(5)}}) {
    auto m = repairable_4state(lam, mu);
    Eigen::MatrixXd q = generator_as_matrix(m.gen);
    for (int i = 0; i < 25; ++i) {
      Rational t = rat(tick(rng), 64);
      Eigen::MatrixXd got = kernel_at(m.gen, t).p;
      Eigen::MatrixXd want = oracle::expm_taylor(q * to_double(t));
      CHECK(max_abs_diff(got, want) < 1e-11);
      CHECK_FALSE(validate_kernel(got).has_value());
    }
  }
}

TEST_CASE("kernel at zero is the identity exactly") {
  auto m = repairable_4state(rat(2), rat(3));
  Eigen::MatrixXd p = kernel_at(m.gen, rat(0)).p;
  CHECK(max_abs_diff(p, Eigen::MatrixXd::Identity(4, 4)) == 0.0);
}

TEST_CASE("kernel matches the closed form entrywise") {
  for (double t : {0.1, 1.0, 3.5}) {
    auto m4 = repairable_4state(rat(2), rat(3));
    Eigen::MatrixXd got = kernel_at(m4.gen, rat(long(t * 64), 64)).p;
    Eigen::MatrixXd want = oracle::repairable4_kernel(2, 3, to_double(rat(long(t * 64), 64)));
    CHECK(max_abs_diff(got, want) < 1e-12);

    auto m3 = repairable_3state(rat(2), rat(3));
    Eigen::MatrixXd got3 = kernel_at(m3.gen, rat(long(t * 64), 64)).p;
    Eigen::MatrixXd want3 = oracle::repairable3_kernel(2, 3, to_double(rat(long(t * 64), 64)));
    CHECK(max_abs_diff(got3, want3) < 1e-12);
  }
}

TEST_CASE("large rate times go through halving") {
  auto m = repairable_4state(rat(100), rat(100));
  // max |diagonal| = 200, t = 4: uniformization alone would need a Poisson
  // tail at 800, which forces the halving path.
  Eigen::MatrixXd got = kernel_at(m.gen, rat(4)).p;
  Eigen::MatrixXd want = oracle::repairable4_kernel(100, 100, 4);
  CHECK(max_abs_diff(got, want) < 1e-9);
  CHECK_FALSE(validate_kernel(got).has_value());
}

TEST_CASE("eigen solution reproduces the closed-form spectrum") {
  auto m4 = repairable_4state(rat(2), rat(3));
  auto es4 = eigen_solution(m4.gen);
  REQUIRE(es4.has_value());
  auto want4 = oracle::repairable4_eigendata(2, 3);
  std::vector<double> got(es4->eigenvalues.data(), es4->eigenvalues.data() + 4);
  std::vector<double> want(want4.lambda.data(), want4.lambda.data() + 4);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  for (int i = 0; i < 4; ++i) CHECK(got[i] == Catch::Approx(want[i]).margin(1e-9));
  CHECK(es4->cond < 1e8);

  auto m3 = repairable_3state(rat(2), rat(3));
  auto es3 = eigen_solution(m3.gen);
  REQUIRE(es3.has_value());
  CHECK(es3->eigenvalues(0) == Catch::Approx(0.0).margin(1e-9));
  CHECK(es3->eigenvalues(1) == Catch::Approx(-5.0).margin(1e-9));
  CHECK(es3->eigenvalues(2) == Catch::Approx(-10.0).margin(1e-9));
}

TEST_CASE("eigen data reconstructs generator and kernel") {
  auto m = repairable_4state(rat(2), rat(3));
  auto es = eigen_solution(m.gen);
  REQUIRE(es.has_value());
  Eigen::MatrixXd q = generator_as_matrix(m.gen);
  Eigen::MatrixXd rebuilt = es->v * es->eigenvalues.asDiagonal() * es->c;
  CHECK(max_abs_diff(rebuilt, q) < 1e-9);
  for (double t : {0.1, 1.0, 3.5})
    CHECK(max_abs_diff(kernel_from_eigen(*es, t), oracle::repairable4_kernel(2, 3, t)) < 1e-9);

  // The independent eigendata reconstructs the same generator.
  auto cf = oracle::repairable4_eigendata(2, 3);
  CHECK(max_abs_diff(cf.v * cf.lambda.asDiagonal() * cf.c, q) < 1e-12);
}

TEST_CASE("homomorphism check accepts the lumping map and rejects a bad one") {
  auto m4 = repairable_4state(rat(2), rat(3));
  auto r = lumpability_quotient(m4);
  std::vector<Rational> times = {rat(0), rat(1, 10), rat(1), rat(5)};
  auto good = check_homomorphism(r.partition, m4, r.quotient, times, 1e-8);
  INFO(good.counterexample);
  CHECK(good.passed);

  // Same state map but a quotient with the wrong rates: observations still
  // line up, so the failure must come from the kernel residual.
  auto bad = check_homomorphism(r.partition, m4,
                                repairable_3state(rat(1), rat(1)), times, 1e-8);
  CHECK_FALSE(bad.passed);
  CHECK(bad.worst > 1e-3);

  // An observation mismatch is rejected outright.
  auto swapped = check_homomorphism({2, 1, 1, 0}, m4, r.quotient, times, 1e-8);
  CHECK_FALSE(swapped.passed);
}

TEST_CASE("already lumped models stay whole") {
  auto m3 = repairable_3state(rat(2), rat(3));
  auto r = lumpability_quotient(m3);
  CHECK(r.partition == Partition{0, 1, 2});
  CHECK(r.quotient.gen.a == m3.gen.a);
}

TEST_CASE("model json round trip is exact") {
  auto m = repairable_4state(rat(2), rat(3));
  auto back = load_model_json(model_to_json(m));
  REQUIRE(back.model.has_value());
  CHECK(back.model->gen.a == m.gen.a);
  CHECK(back.model->obs == m.obs);
  CHECK(back.model->states == m.states);
  CHECK(back.model->labels == m.labels);

  std::string path = "t_ctmc_roundtrip.json";
  save_model_file(m, path);
  auto loaded = load_model_file(path);
  std::remove(path.c_str());
  REQUIRE(loaded.model.has_value());
  CHECK(loaded.model->gen.a == m.gen.a);
}

TEST_CASE("model json loader reports violations") {
  CHECK_FALSE(load_model_json("{").model.has_value());
  CHECK(load_model_file("no_such_file.json").error.find("no_such_file") != std::string::npos);

  // wrong diagonal
  auto bad = load_model_json(R"({
    "states": ["a", "b"], "labels": ["x"],
    "rates": [[-2, 1], [1, -1]],
    "obs": {"a": {"x": 1}, "b": {"x": 1}}
  })");
  CHECK_FALSE(bad.model.has_value());
  CHECK(bad.error.find("diagonal") != std::string::npos);

  // observation mass off
  auto off = load_model_json(R"({
    "states": ["a"], "labels": ["x", "y"],
    "rates": [[0]],
    "obs": {"a": {"x": "1/2", "y": "1/3"}}
  })");
  CHECK_FALSE(off.model.has_value());
}

TEST_CASE("fractions in json survive exactly") {
  auto r = load_model_json(R"({
    "states": ["a", "b"], "labels": ["x"],
    "rates": [["-1/3", "1/3"], ["1/3", "-1/3"]],
    "obs": {"a": {"x": 1}, "b": {"x": 1}}
  })");
  REQUIRE(r.model.has_value());
  CHECK(r.model->gen.at(1, 0) == rat(1, 3));
  CHECK(r.model->gen.at(0, 0) == rat(-1, 3));
}
