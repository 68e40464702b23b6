#pragma once

#include "gct/equivalence.hpp"

#include <string>

namespace gct {

// Pretty-printed JSON, two-space indent, keys sorted, trailing newline.
std::string verdict_to_json(const Verdict& v, const std::vector<std::string>& labels);

std::string partition_to_json(const Partition& part, const std::vector<std::string>& states);

}  // namespace gct
