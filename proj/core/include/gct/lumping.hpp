#pragma once

#include "gct/check_report.hpp"
#include "gct/model.hpp"

#include <vector>

namespace gct {

// state index -> block id; blocks are numbered by first occurrence, so the
// encoding is canonical for a given state order.
using Partition = std::vector<int>;

struct LumpingResult {
  Partition partition;
  LabelledModel quotient;           // aggregated generator, representative obs
  std::vector<int> representative;  // block -> first state in it
};

// Coarsest ordinary-lumpability partition refining observation equality:
// blocks have equal obs rows, and for every source state the aggregate rate
// column into each block is constant across its block.  The aggregation is
// exact; the returned quotient is kernel-verified at a probe set of times
// before returning (a failure there is a logic error, not user error).
LumpingResult lumpability_quotient(const LabelledModel& m);

// h maps states of m1 onto states of m2.  Checks that h commutes with the
// kernels at the given times (max-norm residual against tol) and preserves
// observations exactly.
CheckReport check_homomorphism(const std::vector<int>& h, const LabelledModel& m1,
                               const LabelledModel& m2, const std::vector<Rational>& times,
                               double tol);

std::string partition_str(const Partition& p, const std::vector<std::string>& names);

}  // namespace gct
