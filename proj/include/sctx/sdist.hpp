#pragma once

#include "sctx/dist.hpp"
#include "sctx/scenario.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace sctx {

// A simplicial distribution on (X, Delta_{Z_m}): one exact distribution per
// generating simplex, of arity dim+1, with matching marginals along shared
// faces.  Values on non-generating simplices are induced by iterated
// marginalization.
class SDist {
  public:
    SDist(ScenarioPtr scenario, int m, std::vector<Dist> generator_dists);

    const ScenarioPtr& scenario() const { return scenario_; }
    int modulus() const { return m_; }

    // Aligned with scenario()->generators().
    const std::vector<Dist>& generator_dists() const { return dists_; }
    const Dist& on_generator(int position) const { return dists_[position]; }
    const Dist& on_generator_id(const std::string& id) const;

    bool operator==(const SDist& o) const;
    bool operator<(const SDist& o) const;  // canonical order on generator dists

  private:
    ScenarioPtr scenario_;
    int m_;
    std::vector<Dist> dists_;
};

// A simplicial map X -> Delta_{Z_m}, represented by its vertex labeling
// (the n-simplices of Delta_{Z_m} are all (n+1)-tuples, so a simplicial map
// is exactly a labeling of the vertices).
class DeterministicMap {
  public:
    DeterministicMap(ScenarioPtr scenario, int m, std::vector<int> labels);

    const ScenarioPtr& scenario() const { return scenario_; }
    int modulus() const { return m_; }

    // Aligned with scenario()->vertex_list().
    const std::vector<int>& labels() const { return labels_; }
    int label_of_vertex(int vertex_simplex_index) const;
    int label_of_vertex_id(const std::string& id) const;

    // The outcome tuple (phi(v_0),...,phi(v_n)) on any simplex.
    Outcome tuple_on(int simplex_index) const;

    DeterministicMap negated() const;                          // -phi
    DeterministicMap plus(const DeterministicMap& o) const;    // phi + psi

    bool operator==(const DeterministicMap& o) const { return labels_ == o.labels_; }
    bool operator<(const DeterministicMap& o) const { return labels_ < o.labels_; }

  private:
    ScenarioPtr scenario_;
    int m_;
    std::vector<int> labels_;
};

// A distribution on sSet(X, Delta_{Z_m}), keyed by vertex labelings.
struct DetMixture {
    ScenarioPtr scenario;
    int m = 2;
    std::map<std::vector<int>, Rat> weights;

    bool is_valid() const;
};

struct SDistViolation {
    std::string simplex;     // where the marginals disagree
    std::string generator_a; // provider of the first value
    std::string generator_b; // provider of the conflicting value
    std::string detail;
};

struct SDistReport {
    bool ok = true;
    std::vector<SDistViolation> violations;
};

// Exact face-compatibility check: one canonical parent per simplex, every
// other parent compared against it.
SDistReport validate_sdist(const SDist& p);
void require_valid(const SDist& p);

// Induced distribution on every simplex (index-aligned with the scenario),
// by iterated marginalization from the generators.  Throws when the
// distribution is not face-compatible.
std::vector<Dist> all_simplex_dists(const SDist& p);

inline constexpr std::uint64_t kDefaultLabelingCap = 1u << 20;

// All m^{|X_0|} vertex labelings in lexicographic order (first vertex most
// significant).  Throws when the count exceeds the cap.
std::vector<DeterministicMap> enumerate_deterministic(ScenarioPtr scenario, int m,
                                                      std::uint64_t cap = kDefaultLabelingCap);

// delta^phi: the deterministic simplicial distribution of a labeling.
SDist deterministic_sdist(const DeterministicMap& phi);

// Theta: mixture of deterministic distributions, Theta(Q)_x(y) = sum of
// Q(phi) over labelings with phi_x = y.
SDist theta(const DetMixture& q);

// Generatorwise convolution (p.q)_x = p_x * q_x.
SDist product(const SDist& p, const SDist& q);

// Group action (phi.q)_x(y) = q_x(y - phi_x).
SDist act(const DeterministicMap& phi, const SDist& q);

// Convex combination of simplicial distributions on one scenario.
SDist mix_sdist(const std::vector<std::pair<Rat, SDist>>& terms);

// Restriction to an embedded sub-scenario (simplices matched by id, face
// structure must agree).
SDist restrict_sdist(const SDist& p, const ScenarioPtr& sub);

// Support preorder: q <= p iff supp(q_x) within supp(p_x) on every
// generator (equivalent to all simplices by marginal positivity).
bool preceq(const SDist& q, const SDist& p);

}  // namespace sctx
