#pragma once

#include <optional>
#include <vector>

#include "daha/ring/ratfunc.hpp"

namespace daha {

using RMatrix = std::vector<std::vector<RatFuncQ>>;
using RVector = std::vector<RatFuncQ>;

/// Right nullspace basis by Gaussian elimination with pivots taken in column
/// order. Each basis vector is scaled so its first nonzero entry is 1.
std::vector<RVector> nullspace(const RMatrix& m);

/// A solution of m x = rhs with free variables set to zero, or nullopt.
std::optional<RVector> solve(const RMatrix& m, const RVector& rhs);

RVector mat_vec(const RMatrix& m, const RVector& v);

}  // namespace daha
