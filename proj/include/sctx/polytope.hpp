#pragma once

#include "sctx/lp.hpp"
#include "sctx/sdist.hpp"

#include <cstdint>

namespace sctx {

// Coordinates of the simplicial-distribution polytope: one column per
// (generator, outcome) pair, generators in scenario order and outcomes in
// lexicographic order.
class CoordSpace {
  public:
    CoordSpace(ScenarioPtr scenario, int m);

    const ScenarioPtr& scenario() const { return scenario_; }
    int modulus() const { return m_; }
    int ncols() const { return ncols_; }

    int col(int generator_position, const Outcome& y) const;
    // Generator position and outcome of a column.
    std::pair<int, Outcome> coord(int col) const;
    const std::vector<Outcome>& outcomes_of(int generator_position) const {
        return outcomes_[generator_position];
    }

    RatVec to_vector(const SDist& p) const;
    SDist to_sdist(const RatVec& x) const;

  private:
    ScenarioPtr scenario_;
    int m_;
    int ncols_;
    std::vector<int> offset_;
    std::vector<std::vector<Outcome>> outcomes_;
};

// Exact H-representation: p is a simplicial distribution iff its coordinate
// vector satisfies eq_a x = eq_b (per-generator normalization plus the
// face-compatibility equalities) and ineq_a x <= ineq_b (nonnegativity).
struct HRep {
    RatMat eq_a;
    RatVec eq_b;
    RatMat ineq_a;
    RatVec ineq_b;
};

HRep build_hrep(const CoordSpace& coords);

struct VertexCertificate {
    bool vertex = false;
    int active_rank = 0;  // rank of equality rows plus active nonnegativity rows
    int ncoords = 0;
};

// Rank test: p is an extreme point iff its active constraints span the
// whole coordinate space.
VertexCertificate is_vertex(const SDist& p);

// Verdict of the contextuality LP in the weight space over deterministic
// maps.  Noncontextual distributions come with a witness mixture Q with
// theta(Q) = p exactly; contextual ones with a separating affine functional
// f(x) = separating . x + separating_const that is strictly positive on p
// and <= 0 on every deterministic distribution.
struct NoncontextualityCertificate {
    bool noncontextual = false;
    DetMixture witness;
    RatVec separating;
    Rat separating_const;
};

NoncontextualityCertificate is_noncontextual(const SDist& p,
                                             std::uint64_t cap = kDefaultLabelingCap);

inline constexpr int kDefaultCoordCap = 40;

// Complete exact vertex list by the double description method, insertion in
// lexicographic constraint order, output canonically sorted.  Every output
// passes is_vertex.
std::vector<SDist> enumerate_vertices(ScenarioPtr scenario, int m,
                                      int coord_cap = kDefaultCoordCap);

// Vertex support: the vertices of the minimal face of the polytope
// containing p (coordinates outside supp(p) pinned to zero).  All returned
// q satisfy preceq(q, p) and is_vertex(q).
std::vector<SDist> vsupp(const SDist& p, int coord_cap = kDefaultCoordCap);

// True iff vsupp(uniform mixture of vs) equals vs as a set.  Inputs must be
// vertices.
bool is_closed_vertex_set(const std::vector<SDist>& vs, int coord_cap = kDefaultCoordCap);

}  // namespace sctx
