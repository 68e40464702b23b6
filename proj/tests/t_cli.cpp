#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// Runs the installed binary with stderr folded into stdout.
RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(GCT_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

}  // namespace

TEST_CASE("trace command prints observation kets") {
  auto r = run("trace --builtin repairable4 --state 2 --word 0:1");
  CHECK(r.status == 0);
  CHECK(r.out == "1|yes⟩\n");

  auto mixed = run("trace --builtin repairable4 --state 2 --word 1:1");
  CHECK(mixed.status == 0);
  CHECK(mixed.out == "0.567667641618|yes⟩ + 0.432332358381|no⟩\n");

  auto exact = run("trace --builtin repairable4 --state L --word 0:2 --mode-arith rational");
  CHECK(exact.status == 0);
  CHECK(exact.out == "1/4|yesyes⟩ + 1/4|yesno⟩ + 1/4|noyes⟩ + 1/4|nono⟩\n");
}

TEST_CASE("kernel output is deterministic") {
  std::string cmd = "kernel --builtin repairable4 --lambda 2 --mu 3 --time 7/2";
  auto a = run(cmd), b = run(cmd);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("kernel of repairable4 at t = 7/2") == 0);

  auto csv = run(cmd + " --format csv");
  CHECK(csv.out.find("from,to,weight\n") == 0);
}

TEST_CASE("boolean and quantitative eval match the format contract") {
  auto all = run("eval --builtin repairable4 --logic bool --formula \"(yes)_0.5 T\" --all");
  CHECK(all.status == 0);
  CHECK(all.out == "{0:⊥, L:⊤, R:⊤, 2:⊤}\n");

  auto one = run("eval --builtin repairable4 --logic quant --formula \"<1>(yes)T\" --state 2");
  CHECK(one.status == 0);
  CHECK(one.out == "0.567667641618\n");
}

TEST_CASE("equiv verdicts") {
  auto same = run("equiv --builtin repairable4 --states L,R");
  CHECK(same.status == 0);
  CHECK(same.out.find("indistinguishable-within-bound") != std::string::npos);

  auto diff = run("equiv --builtin repairable4 --states 0,2");
  CHECK(diff.status == 0);
  CHECK(diff.out.find("distinguished") != std::string::npos);
  CHECK(diff.out.find("witness: 0:1") != std::string::npos);

  auto cross = run("equiv --builtin repairable4 --builtin2 repairable3 --states L,1 "
                   "--mode behavioural");
  CHECK(cross.status == 0);
  CHECK(cross.out.find("equivalent") != std::string::npos);
}

TEST_CASE("json output parses and carries the verdict") {
  auto r = run("equiv --builtin repairable4 --states 0,2 --format json");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "distinguished");
  CHECK(j["witness_word"] == "0:1");
  CHECK(j["gap"].get<double>() == 1.0);

  auto q = run("quotient --builtin repairable4 --via lumping --format json");
  auto jq = nlohmann::json::parse(q.out);
  CHECK(jq["blocks"].size() == 3);
}

TEST_CASE("quotient save round-trips through the loader") {
  std::string path = "t_cli_quotient.json";
  auto save = run("quotient --builtin repairable4 --lambda 2 --mu 3 --save " + path);
  CHECK(save.status == 0);
  auto reload = run("trace --model " + path + " --state 1 --word 0:1 --mode-arith rational");
  std::remove(path.c_str());
  CHECK(reload.status == 0);
  CHECK(reload.out == "1/2|yes⟩ + 1/2|no⟩\n");
}

TEST_CASE("check command verdicts and exit codes") {
  auto ok = run("check --suite lumping");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("pass") != std::string::npos);

  auto law = run("check --suite dist-law --mutate swap-label");
  CHECK(law.status == 1);
  CHECK(law.out.find("FAIL") != std::string::npos);
  CHECK(law.out.find("counterexample") != std::string::npos);

  auto logic = run("check --suite logic-axioms --mutate bool-and");
  CHECK(logic.status == 1);
  CHECK(logic.out.find("counterexample") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("trace --builtin repairable4 --state nowhere --word 0:1").status == 2);
  CHECK(run("trace --builtin repairable4 --state 0 --word bogus").status == 2);
  CHECK(run("eval --builtin repairable4 --logic bool --formula \"(maybe)T\" --all").status == 2);
  CHECK(run("kernel --builtin repairable4 --time -1").status == 2);
  CHECK(run("kernel --builtin no_such_builtin --time 1").status == 2);
  CHECK(run("nonsense").status == 2);
  CHECK(run("check --suite no-such-suite").status == 2);
  CHECK(run("--help").status == 0);
}
