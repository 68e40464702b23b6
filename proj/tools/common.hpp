#pragma once

#include "gct/model.hpp"
#include "gct/rational.hpp"

#include <CLI11.hpp>

#include <stdexcept>
#include <string>

namespace gcli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;

// Raised for bad flags, unloadable models, unknown states, malformed words
// or formulas; mapped to exit code 2 in main.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Model selection shared by every command: a JSON file or a named builtin
// with rational parameters.  The suffix distinguishes the right-hand model
// of two-model commands (--model2, --builtin2, ...).
struct ModelOptions {
  std::string path;
  std::string builtin;
  std::string lambda = "1";
  std::string mu = "1";

  void attach(CLI::App* cmd, const std::string& suffix);
  bool specified() const { return !path.empty() || !builtin.empty(); }
  gct::LabelledModel resolve() const;
};

struct CommonOptions {
  std::string format = "table";  // table | csv | json
  std::string arith = "float";   // float | rational
  double tol = 1e-8;

  void attach(CLI::App* cmd);
  bool rational() const { return arith == "rational"; }
};

gct::Rational parse_rational_flag(const std::string& text, const std::string& flag);

// State selector: a state name, or an index when no name matches.
int resolve_state(const gct::LabelledModel& m, const std::string& selector);

}  // namespace gcli
