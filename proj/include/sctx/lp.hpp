#pragma once

#include "sctx/rational.hpp"

namespace sctx {

// Feasibility of {x >= 0 : A x = b} by an exact phase-1 simplex with
// artificial variables and Bland's pivoting rule (guaranteed termination).
//
// Infeasible systems come with a Farkas certificate y satisfying
//   y . column_j <= 0 for every column j of A,   y . b > 0,
// verified exactly before returning.
struct NonnegLpResult {
    bool feasible = false;
    RatVec x;         // a feasible point (when feasible)
    RatVec farkas_y;  // one multiplier per row of A (when infeasible)
};

NonnegLpResult solve_nonneg(const RatMat& a, const RatVec& b);

// A general affine system over free variables:
//   eq_a x = eq_b,   ineq_a x <= ineq_b.
struct LinearSystem {
    int nvars = 0;
    RatMat eq_a;
    RatVec eq_b;
    RatMat ineq_a;
    RatVec ineq_b;
};

// Exact feasibility with certificate.  Infeasible systems yield multipliers
// (lambda_eq free, lambda_ineq >= 0) with
//   lambda_eq . eq_a + lambda_ineq . ineq_a = 0
//   lambda_eq . eq_b + lambda_ineq . ineq_b < 0.
struct LpResult {
    bool feasible = false;
    RatVec point;
    RatVec lambda_eq;
    RatVec lambda_ineq;
};

LpResult lp_feasible(const LinearSystem& sys);

}  // namespace sctx
