#pragma once

#include "sctx/polytope.hpp"
#include "sctx/sdist.hpp"

#include <optional>

namespace sctx {

// A point of the m-fold join of sDist(X): the pairs <lambda_j, p^(j)> with
// sum lambda_j = 1 and lambda_j = 0 exactly where the component is absent.
struct JoinPoint {
    std::vector<std::pair<Rat, std::optional<SDist>>> parts;  // size m

    int modulus() const { return static_cast<int>(parts.size()); }
    bool is_valid() const;
};

// Unique join decomposition of a distribution on a cone scenario:
//   lambda_j = sum over trailing outcomes of p_{(c,x)}(j, ...)  (any x),
//   p^(j)_x(a...) = p_{(c,x)}(j, a...) / lambda_j.
// Well-definedness of lambda_j across cone generators is asserted.  The
// base must be connected.
JoinPoint cone_decompose(const SDist& p, const Cone& c);

// Inverse assembly p_{(c,x)}(a_0, a...) = lambda_{a_0} p^{(a_0)}_x(a...).
SDist cone_assemble(const JoinPoint& parts, const Cone& c);

// Two-sided decomposition on a suspension: the up (s_1) and down (s_2)
// cone restrictions decomposed separately; the glued mixtures
// sum_j lambda_j p^{up,j} = sum_j mu_j p^{down,j} agree on the base.
struct SuspensionPoint {
    JoinPoint up;
    JoinPoint down;
};

SuspensionPoint suspension_decompose(const SDist& p, const Suspension& s);

// Inverse of suspension_decompose; the gluing equality is rechecked and a
// violation is a named error.
SDist suspension_assemble(const SuspensionPoint& sp, const Suspension& s);

// Feasibility of the suspension noncontextuality criterion: mixtures
// Q^{up,j}, Q^{down,j} over deterministic maps of the base with
// theta(Q^{up,j}) = p^{up,j}, theta(Q^{down,j}) = p^{down,j} and
// sum_j lambda_j Q^{up,j} = sum_j mu_j Q^{down,j}.
struct SuspensionLpVerdict {
    bool noncontextual = false;
    // Witness mixtures for the components with nonzero weight, indexed by j
    // (absent components carry no witness).
    std::vector<std::optional<DetMixture>> up_witness;
    std::vector<std::optional<DetMixture>> down_witness;
};

SuspensionLpVerdict suspension_noncontextuality_lp(const SuspensionPoint& sp, const Suspension& s,
                                                   std::uint64_t cap = kDefaultLabelingCap);

}  // namespace sctx
