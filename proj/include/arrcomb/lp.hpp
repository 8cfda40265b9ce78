#pragma once

#include <vector>

#include "arrcomb/rational.hpp"

// Dense exact simplex. Small problems only: every arrangement query in this
// library has at most a few dozen constraints and a handful of variables.
namespace arrcomb::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  Rational value;
  Vector x;
};

/// maximize objective·x subject to rows·x <= rhs, x >= 0.
/// Bland's rule throughout, so degenerate inputs terminate and the returned
/// vertex is a deterministic function of the input.
Result maximize(const std::vector<Vector>& rows, const Vector& rhs, const Vector& objective);

}  // namespace arrcomb::lp
