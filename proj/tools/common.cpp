#include "common.hpp"

#include "gct/model_io.hpp"

namespace gcli {

void ModelOptions::attach(CLI::App* cmd, const std::string& suffix) {
  const std::string side = suffix.empty() ? "" : " (right-hand model)";
  cmd->add_option("--model" + suffix, path, "model JSON file" + side);
  cmd->add_option("--builtin" + suffix, builtin,
                  "builtin model: repairable4 | repairable3" + side);
  cmd->add_option("--lambda" + suffix, lambda, "failure rate for builtins (rational)");
  cmd->add_option("--mu" + suffix, mu, "repair rate for builtins (rational)");
}

gct::LabelledModel ModelOptions::resolve() const {
  if (!path.empty() && !builtin.empty())
    throw UsageError("give either --model or --builtin, not both");
  if (!path.empty()) {
    gct::ModelLoadResult res = gct::load_model_file(path);
    if (!res.model) throw UsageError(path + ": " + res.error);
    return *res.model;
  }
  const std::string name = builtin.empty() ? "repairable4" : builtin;
  gct::Rational lam = parse_rational_flag(lambda, "--lambda");
  gct::Rational m = parse_rational_flag(mu, "--mu");
  try {
    if (name == "repairable4") return gct::repairable_4state(lam, m);
    if (name == "repairable3") return gct::repairable_3state(lam, m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (name == "randomwalk")
    throw UsageError(
        "builtin randomwalk is a discrete-step system; it is exercised by "
        "'check --suite randomwalk'");
  throw UsageError("unknown builtin '" + name + "'");
}

void CommonOptions::attach(CLI::App* cmd) {
  cmd->add_option("--format", format, "output format: table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--mode-arith", arith, "arithmetic mode: float | rational")
      ->check(CLI::IsMember({"float", "rational"}));
  cmd->add_option("--tol", tol, "numeric tolerance");
}

gct::Rational parse_rational_flag(const std::string& text, const std::string& flag) {
  auto r = gct::parse_rational(text);
  if (!r) throw UsageError(flag + ": '" + text + "' is not a rational");
  return *r;
}

int resolve_state(const gct::LabelledModel& m, const std::string& selector) {
  int idx = m.state_index(selector);
  if (idx >= 0) return idx;
  bool digits = !selector.empty();
  for (char c : selector)
    if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
  if (digits) {
    idx = std::stoi(selector);
    if (idx >= 0 && idx < m.n_states()) return idx;
  }
  throw UsageError("unknown state '" + selector + "' in model " + m.name);
}

}  // namespace gcli
