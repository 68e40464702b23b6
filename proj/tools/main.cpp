#include "cmd_check.hpp"
#include "common.hpp"

#include "gct/composite.hpp"
#include "gct/equivalence.hpp"
#include "gct/kernel.hpp"
#include "gct/logic_eval.hpp"
#include "gct/logic_search.hpp"
#include "gct/lumping.hpp"
#include "gct/model_io.hpp"
#include "gct/verdict_io.hpp"

#include <json.hpp>

#include <iostream>

namespace gcli {
namespace {

using nlohmann::json;

std::string double_str(double v) { return gct::format_double(v); }

int run_kernel(const ModelOptions& mo, const CommonOptions& co, const std::string& time_str) {
  gct::LabelledModel m = mo.resolve();
  gct::Rational t = parse_rational_flag(time_str, "--time");
  if (t < 0) throw UsageError("--time must be >= 0");

  if (co.rational()) {
    if (t != 0)
      throw UsageError("rational kernel evaluation is exact only at --time 0");
    if (co.format == "table") {
      std::cout << "kernel of " << m.name << " at t = 0\n";
      for (int j = 0; j < m.n_states(); ++j)
        std::cout << m.states[j] << ": 1|" << m.states[j] << "⟩\n";
    } else if (co.format == "csv") {
      std::cout << "from,to,weight\n";
      for (int j = 0; j < m.n_states(); ++j)
        std::cout << m.states[j] << "," << m.states[j] << ",1\n";
    } else {
      json cols = json::object();
      for (int j = 0; j < m.n_states(); ++j) cols[m.states[j]] = {{m.states[j], "1"}};
      json out = {{"model", m.name}, {"time", gct::format_rational(t)}, {"columns", cols}};
      std::cout << out.dump(2) << "\n";
    }
    return kExitOk;
  }

  gct::Kernel k = gct::kernel_at(m.gen, t);
  if (co.format == "table") {
    std::cout << "kernel of " << m.name << " at t = " << gct::format_rational(t) << "\n";
    for (int j = 0; j < m.n_states(); ++j) {
      auto col = gct::kernel_column(k.p, j);
      std::cout << m.states[j] << ": "
                << gct::ket(col, [&](int z) { return m.states[static_cast<std::size_t>(z)]; })
                << "\n";
    }
  } else if (co.format == "csv") {
    std::cout << "from,to,weight\n";
    for (int j = 0; j < m.n_states(); ++j)
      for (int z = 0; z < m.n_states(); ++z)
        std::cout << m.states[j] << "," << m.states[z] << "," << double_str(k.p(z, j)) << "\n";
  } else {
    json cols = json::object();
    for (int j = 0; j < m.n_states(); ++j) {
      json col = json::object();
      for (int z = 0; z < m.n_states(); ++z) col[m.states[z]] = k.p(z, j);
      cols[m.states[j]] = col;
    }
    json out = {{"model", m.name}, {"time", gct::format_rational(t)}, {"columns", cols}};
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

int run_trace(const ModelOptions& mo, const CommonOptions& co, const std::string& state_str,
              const std::string& word_str) {
  gct::LabelledModel m = mo.resolve();
  auto w = gct::parse_word(word_str);
  if (!w) throw UsageError("--word: '" + word_str + "' is not a sampling word");
  int x = resolve_state(m, state_str);

  auto show = [&](const gct::LabelWord& u) { return gct::label_word_str(u, m.labels); };
  if (co.rational()) {
    gct::FinDist<gct::LabelWord, gct::Rational> d;
    try {
      d = gct::trace_vector_exact(m, x, *w);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (co.format == "table") {
      std::cout << gct::ket(d, show) << "\n";
    } else if (co.format == "csv") {
      std::cout << "word,weight\n";
      for (const auto& [u, p] : d.atoms())
        std::cout << show(u) << "," << gct::format_rational(p) << "\n";
    } else {
      json dist = json::object();
      for (const auto& [u, p] : d.atoms()) dist[show(u)] = gct::format_rational(p);
      json out = {{"model", m.name}, {"state", m.states[x]}, {"word", w->str()}, {"dist", dist}};
      std::cout << out.dump(2) << "\n";
    }
    return kExitOk;
  }

  gct::WordGradedKernel k(m);
  gct::FinDist<gct::LabelWord, double> d = gct::trace_vector(k, x, *w);
  if (co.format == "table") {
    std::cout << gct::ket(d, show) << "\n";
  } else if (co.format == "csv") {
    std::cout << "word,weight\n";
    for (const auto& [u, p] : d.atoms()) std::cout << show(u) << "," << double_str(p) << "\n";
  } else {
    json dist = json::object();
    for (const auto& [u, p] : d.atoms()) dist[show(u)] = p;
    json out = {{"model", m.name}, {"state", m.states[x]}, {"word", w->str()}, {"dist", dist}};
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

void print_verdict_table(const gct::Verdict& v, const std::vector<std::string>& labels) {
  std::cout << "verdict: " << gct::verdict_kind_str(v.kind) << "\n";
  std::cout << "bound:   " << v.bound << "\n";
  if (v.witness_word) {
    auto show = [&](const gct::LabelWord& u) { return gct::label_word_str(u, labels); };
    std::cout << "witness: " << v.witness_word->str() << "  gap " << double_str(v.gap) << "\n";
    std::cout << "left:    " << gct::ket(v.trace_left, show) << "\n";
    std::cout << "right:   " << gct::ket(v.trace_right, show) << "\n";
  } else {
    std::cout << "gap:     " << double_str(v.gap) << "\n";
  }
  if (!v.partition.empty())
    std::cout << "blocks:  " << gct::partition_str(v.partition, v.partition_states) << "\n";
  if (!v.note.empty()) std::cout << "note:    " << v.note << "\n";
}

int run_equiv(const ModelOptions& left, const ModelOptions& right, const CommonOptions& co,
              const std::string& states_str, const std::string& mode, int max_segments,
              int max_obs) {
  auto comma = states_str.find(',');
  if (comma == std::string::npos)
    throw UsageError("--states expects two comma-separated selectors, e.g. L,R");
  gct::LabelledModel m1 = left.resolve();
  gct::LabelledModel m2 = right.specified() ? right.resolve() : m1;
  int x = resolve_state(m1, states_str.substr(0, comma));
  int y = resolve_state(m2, states_str.substr(comma + 1));
  if (m1.labels != m2.labels) throw UsageError("the two models have different label alphabets");

  gct::Verdict v;
  if (mode == "trace") {
    gct::EquivConfig cfg = gct::EquivConfig::defaults();
    cfg.tol = co.tol;
    cfg.max_segments = max_segments;
    cfg.max_obs = static_cast<std::uint64_t>(max_obs);
    gct::WordGradedKernel a(m1), b(m2);
    v = gct::trace_equivalent(a, x, b, y, cfg);
  } else if (mode == "behavioural") {
    v = gct::behavioural_equivalent(m1, x, m2, y);
  } else {
    throw UsageError("--mode must be trace or behavioural");
  }

  if (co.format == "json") {
    std::cout << gct::verdict_to_json(v, m1.labels);
  } else if (co.format == "csv") {
    std::cout << "key,value\n";
    std::cout << "kind," << gct::verdict_kind_str(v.kind) << "\n";
    std::cout << "gap," << double_str(v.gap) << "\n";
    if (v.witness_word) std::cout << "witness," << v.witness_word->str() << "\n";
  } else {
    print_verdict_table(v, m1.labels);
  }
  return kExitOk;
}

int run_quotient(const ModelOptions& mo, const CommonOptions& co, const std::string& via,
                 const std::string& save_path) {
  gct::LabelledModel m = mo.resolve();
  if (via == "lumping") {
    gct::LumpingResult r = gct::lumpability_quotient(m);
    if (!save_path.empty()) {
      try {
        gct::save_model_file(r.quotient, save_path);
      } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
      }
    }
    if (co.format == "json") {
      json j = json::parse(gct::partition_to_json(r.partition, m.states));
      j["quotient"] = json::parse(gct::model_to_json(r.quotient));
      std::cout << j.dump(2) << "\n";
    } else if (co.format == "csv") {
      std::cout << "state,block\n";
      for (int i = 0; i < m.n_states(); ++i)
        std::cout << m.states[i] << "," << r.partition[i] << "\n";
    } else {
      std::cout << "blocks: " << gct::partition_str(r.partition, m.states) << "\n";
      std::cout << "quotient states:";
      for (const auto& s : r.quotient.states) std::cout << " " << s;
      std::cout << "\nquotient generator (column per source state):\n";
      for (int k = 0; k < r.quotient.gen.n; ++k) {
        std::cout << " ";
        for (int j = 0; j < r.quotient.gen.n; ++j)
          std::cout << " " << gct::format_rational(r.quotient.gen.at(k, j));
        std::cout << "\n";
      }
    }
    return kExitOk;
  }
  if (via == "logic") {
    if (!save_path.empty()) throw UsageError("--save applies only to --via lumping");
    gct::WordGradedKernel k(m);
    gct::Partition part = gct::logical_quotient(k, gct::FormulaBudget::defaults());
    if (co.format == "json") {
      std::cout << gct::partition_to_json(part, m.states);
    } else if (co.format == "csv") {
      std::cout << "state,block\n";
      for (int i = 0; i < m.n_states(); ++i) std::cout << m.states[i] << "," << part[i] << "\n";
    } else {
      std::cout << "blocks: " << gct::partition_str(part, m.states) << "\n";
    }
    return kExitOk;
  }
  throw UsageError("--via must be lumping or logic");
}

int run_eval(const ModelOptions& mo, const CommonOptions& co, const std::string& logic,
             const std::string& formula_str, const std::string& state_str, bool all) {
  gct::LabelledModel m = mo.resolve();
  gct::ParseResult pr = gct::parse_formula(formula_str, m.labels);
  if (!pr.formula)
    throw UsageError("--formula: " + pr.error.message + " at offset " +
                     std::to_string(pr.error.offset));
  const gct::Formula& f = *pr.formula;
  gct::WordGradedKernel k(m);

  std::vector<int> targets;
  if (!state_str.empty() && all) throw UsageError("give --state or --all, not both");
  if (!state_str.empty())
    targets.push_back(resolve_state(m, state_str));
  else
    for (int i = 0; i < m.n_states(); ++i) targets.push_back(i);

  if (logic == "bool") {
    std::vector<char> vals;
    try {
      vals = gct::eval_boolean_all(k, f);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (co.format == "csv") {
      std::cout << "state,value\n";
      for (int i : targets) std::cout << m.states[i] << "," << (vals[i] ? 1 : 0) << "\n";
    } else if (co.format == "json") {
      json values = json::object();
      for (int i : targets) values[m.states[i]] = static_cast<bool>(vals[i]);
      json out = {{"model", m.name}, {"formula", gct::print_formula(f)}, {"values", values}};
      std::cout << out.dump(2) << "\n";
    } else if (targets.size() == 1) {
      std::cout << (vals[targets[0]] ? "⊤" : "⊥") << "\n";
    } else {
      std::cout << "{";
      for (std::size_t i = 0; i < targets.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << m.states[targets[i]] << ":" << (vals[targets[i]] ? "⊤" : "⊥");
      }
      std::cout << "}\n";
    }
    return kExitOk;
  }
  if (logic != "quant") throw UsageError("--logic must be bool or quant");

  std::vector<double> vals;
  try {
    vals = gct::eval_quantitative_all(k, f);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (co.format == "csv") {
    std::cout << "state,value\n";
    for (int i : targets) std::cout << m.states[i] << "," << double_str(vals[i]) << "\n";
  } else if (co.format == "json") {
    json values = json::object();
    for (int i : targets) values[m.states[i]] = vals[i];
    json out = {{"model", m.name}, {"formula", gct::print_formula(f)}, {"values", values}};
    std::cout << out.dump(2) << "\n";
  } else if (targets.size() == 1) {
    std::cout << double_str(vals[targets[0]]) << "\n";
  } else {
    std::cout << "{";
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << m.states[targets[i]] << ":" << double_str(vals[targets[i]]);
    }
    std::cout << "}\n";
  }
  return kExitOk;
}

}  // namespace
}  // namespace gcli

int main(int argc, char** argv) {
  using namespace gcli;
  CLI::App app{"graded coalgebra toolkit for labelled continuous-time Markov chains"};
  app.require_subcommand(1);
  int rc = kExitOk;

  auto* kernel = app.add_subcommand("kernel", "transition kernel at one time point");
  auto kernel_m = std::make_shared<ModelOptions>();
  auto kernel_c = std::make_shared<CommonOptions>();
  auto kernel_time = std::make_shared<std::string>();
  kernel_m->attach(kernel, "");
  kernel_c->attach(kernel);
  kernel->add_option("--time", *kernel_time, "elapsed time (rational)")->required();
  kernel->callback([=, &rc] { rc = run_kernel(*kernel_m, *kernel_c, *kernel_time); });

  auto* trace = app.add_subcommand("trace", "observation-word distribution at a sampling word");
  auto trace_m = std::make_shared<ModelOptions>();
  auto trace_c = std::make_shared<CommonOptions>();
  auto trace_state = std::make_shared<std::string>();
  auto trace_word = std::make_shared<std::string>();
  trace_m->attach(trace, "");
  trace_c->attach(trace);
  trace->add_option("--state", *trace_state, "start state (name or index)")->required();
  trace->add_option("--word", *trace_word, "sampling word, e.g. 1.5:2,3:0");
  trace->callback([=, &rc] { rc = run_trace(*trace_m, *trace_c, *trace_state, *trace_word); });

  auto* equiv = app.add_subcommand("equiv", "equivalence check between two states");
  auto equiv_m1 = std::make_shared<ModelOptions>();
  auto equiv_m2 = std::make_shared<ModelOptions>();
  auto equiv_c = std::make_shared<CommonOptions>();
  auto equiv_states = std::make_shared<std::string>();
  auto equiv_mode = std::make_shared<std::string>("trace");
  auto equiv_segments = std::make_shared<int>(3);
  auto equiv_obs = std::make_shared<int>(4);
  equiv_m1->attach(equiv, "");
  equiv_m2->attach(equiv, "2");
  equiv_c->attach(equiv);
  equiv->add_option("--states", *equiv_states, "left,right state selectors")->required();
  equiv->add_option("--mode", *equiv_mode, "trace | behavioural")
      ->check(CLI::IsMember({"trace", "behavioural"}));
  equiv->add_option("--max-segments", *equiv_segments, "word budget: segments per word");
  equiv->add_option("--max-obs", *equiv_obs, "word budget: total observations per word");
  equiv->callback([=, &rc] {
    rc = run_equiv(*equiv_m1, *equiv_m2, *equiv_c, *equiv_states, *equiv_mode, *equiv_segments,
                   *equiv_obs);
  });

  auto* quotient = app.add_subcommand("quotient", "behavioural quotient of a model");
  auto quot_m = std::make_shared<ModelOptions>();
  auto quot_c = std::make_shared<CommonOptions>();
  auto quot_via = std::make_shared<std::string>("lumping");
  auto quot_save = std::make_shared<std::string>();
  quot_m->attach(quotient, "");
  quot_c->attach(quotient);
  quotient->add_option("--via", *quot_via, "lumping | logic")
      ->check(CLI::IsMember({"lumping", "logic"}));
  quotient->add_option("--save", *quot_save, "write the quotient model JSON here");
  quotient->callback([=, &rc] { rc = run_quotient(*quot_m, *quot_c, *quot_via, *quot_save); });

  auto* eval = app.add_subcommand("eval", "evaluate a modal formula");
  auto eval_m = std::make_shared<ModelOptions>();
  auto eval_c = std::make_shared<CommonOptions>();
  auto eval_logic = std::make_shared<std::string>();
  auto eval_formula = std::make_shared<std::string>();
  auto eval_state = std::make_shared<std::string>();
  auto eval_all = std::make_shared<bool>(false);
  eval_m->attach(eval, "");
  eval_c->attach(eval);
  eval->add_option("--logic", *eval_logic, "bool | quant")->required();
  eval->add_option("--formula", *eval_formula, "formula text")->required();
  eval->add_option("--state", *eval_state, "evaluate at one state");
  eval->add_flag("--all", *eval_all, "evaluate at every state");
  eval->callback([=, &rc] {
    rc = run_eval(*eval_m, *eval_c, *eval_logic, *eval_formula, *eval_state, *eval_all);
  });

  auto* check = app.add_subcommand("check", "run verification suites");
  auto check_cfg = std::make_shared<CheckConfig>();
  check_cfg->model.attach(check, "");
  check_cfg->common.attach(check);
  check->add_option("--suite", check_cfg->suite, "suite name or 'all'");
  check->add_option("--mutate", check_cfg->mutate, "swap-label | bool-and")
      ->check(CLI::IsMember({"swap-label", "bool-and"}));
  check->add_option("--window", check_cfg->window, "random-walk window radius");
  check->callback([check_cfg, &rc] { rc = run_check(*check_cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
