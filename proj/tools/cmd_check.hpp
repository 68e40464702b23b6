#pragma once

#include "common.hpp"

namespace gcli {

struct CheckConfig {
  ModelOptions model;
  CommonOptions common;
  std::string suite = "all";
  std::string mutate;  // "", swap-label, bool-and
  int window = 3;
};

// Runs the named verification suite (or all of them) and prints a report.
// Returns 0 when everything passed, 1 otherwise.
int run_check(const CheckConfig& cfg);

}  // namespace gcli
