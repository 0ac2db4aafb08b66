#pragma once

#include "sctx/rational.hpp"

#include <optional>

namespace sctx {

// Exact Gaussian elimination over the rationals.  Matrices are dense,
// row-major; all functions leave their inputs untouched.

int rank(RatMat a);

// Any solution of A x = b, or nullopt when inconsistent.
std::optional<RatVec> solve_linear(RatMat a, RatVec b);

// Basis of the nullspace of A (each returned vector is one basis element).
std::vector<RatVec> nullspace(RatMat a);

}  // namespace sctx
