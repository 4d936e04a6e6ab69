#pragma once

#include "reembed/linalg.hpp"

namespace reembed {

struct LPResult {
  bool bounded = true;
  Rational value;
  Vector x;
};

/// Exact primal simplex with Bland's rule for
///   max c.x  s.t.  A x <= b,  x >= 0,
/// where b >= 0 so that x = 0 is a feasible start.
LPResult maximize(const Matrix& a, const Vector& b, const Vector& c);

}  // namespace reembed
