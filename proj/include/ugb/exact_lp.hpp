#pragma once

#include <vector>

#include "ugb/exactnum.hpp"

namespace ugb {

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational value;
  RationalVector x;
};

/// max c.x subject to A x = b, x >= 0, solved exactly by the two-phase
/// simplex method with Bland's rule. A is given row by row.
LpResult maximize(const std::vector<RationalVector>& a, const RationalVector& b, const RationalVector& c);

}  // namespace ugb
