#pragma once

#include "sctx/polytope.hpp"

#include <cstdint>
#include <string>

namespace sctx {

struct IneqTerm {
    std::string simplex;
    Outcome outcome;
    Rat coef;

    bool operator==(const IneqTerm& o) const = default;
};

// An affine inequality over polytope coordinates, read as
//   sum(terms . p) <= bound + sum(rhs_terms . p).
struct LinearInequality {
    std::string name;
    std::vector<IneqTerm> terms;
    std::vector<IneqTerm> rhs_terms;
    Rat bound;

    bool operator==(const LinearInequality& o) const = default;
};

// The eight CHSH inequalities on cycle-4 (m = 2): the four double-bounded
// chains split into one-sided <= form, lower bounds negated.  Chain k
// carries coefficient -1 on edge s_{5-k} and +1 elsewhere, on outcomes
// (0,0) and (1,1), with bounds 0 and 2.
std::vector<LinearInequality> chsh_family();

struct IneqValue {
    Rat lhs;  // terms . p - rhs_terms . p
    bool satisfied = false;
};

IneqValue evaluate_inequality(const LinearInequality& ineq, const SDist& p);

// Lift a Bell family to the cone scenario: for every inequality and every
// j in Z_m, terms (x, y, B) become ((c,x), (j,y), B) and the bound R moves
// to the right-hand side as R * sum_y p_{(c,x_1)}(j,y), with x_1 the first
// simplex of the inequality.  A zero bound lifts with an empty right-hand
// side.
std::vector<LinearInequality> lift_to_cone(const std::vector<LinearInequality>& family,
                                           const Cone& c, int m);

// Desk-scale check that a family characterizes noncontextuality:
//  (a) every noncontextual vertex satisfies the family,
//  (b) every contextual vertex violates at least one member,
//  (c) on seeded random rational points of the polytope the LP verdict is
//      equivalent to family satisfaction.
struct CharacterizationReport {
    bool pass = false;
    int vertices = 0;
    int noncontextual_vertices = 0;
    int contextual_vertices = 0;
    int samples = 0;
    std::string counterexample;  // empty when pass
};

CharacterizationReport verify_characterization(ScenarioPtr scenario, int m,
                                               const std::vector<LinearInequality>& family,
                                               int samples, std::uint64_t seed);

}  // namespace sctx
