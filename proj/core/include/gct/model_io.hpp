#pragma once

#include "gct/model.hpp"

#include <string>

namespace gct {

struct ModelLoadResult {
  std::optional<LabelledModel> model;
  std::string error;  // first violation, with indices
};

// Schema: {"states": [...], "labels": [...], "rates": [[...]], "obs":
// {state: {label: weight}}}.  "rates" is column-convention (entry [k][j] is
// the rate j -> k).  Numbers are read as exact binary rationals; strings like
// "3/2" as exact fractions.  Diagonals must match minus the column
// off-diagonal sum within 1e-9 and are then replaced by the exact sum.
ModelLoadResult load_model_json(const std::string& text);
ModelLoadResult load_model_file(const std::string& path);

std::string model_to_json(const LabelledModel& m);
// Throws std::runtime_error when the file cannot be written.
void save_model_file(const LabelledModel& m, const std::string& path);

}  // namespace gct
