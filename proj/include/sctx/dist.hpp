#pragma once

#include "sctx/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace sctx {

// An outcome tuple (a_0,...,a_n), entries reduced mod m.
using Outcome = std::vector<int>;

// Exact finite probability distribution on Z_m^{arity}.  Sparse support with
// lexicographic outcome ordering; absent outcomes carry mass zero.
class Dist {
  public:
    Dist(int m, int arity) : m_(m), arity_(arity) {}

    int modulus() const { return m_; }
    int arity() const { return arity_; }

    const std::map<Outcome, Rat>& support() const { return mass_; }
    Rat at(const Outcome& y) const;
    // Adds mass (entries reduced mod m); drops the entry when it cancels.
    void add(Outcome y, const Rat& w);

    // Nonnegative masses summing to exactly 1.
    bool is_valid() const;

    bool operator==(const Dist& o) const = default;
    bool operator<(const Dist& o) const;

  private:
    int m_;
    int arity_;
    std::map<Outcome, Rat> mass_;
};

// Point mass at y.
Dist delta(int m, const Outcome& y);

// Mass 1/m^arity everywhere.
Dist uniform(int m, int arity);

// The shift distribution S^j on Z_m^2: mass 1/m on pairs (a, a+j).
// S^0 = I; for m = 2 these are p_+ and p_-.
Dist average_power(int m, int j);

// Convolution (P*Q)(a) = sum_{a1+a2=a} P(a1) Q(a2), addition in Z_m^arity.
Dist convolve(const Dist& p, const Dist& q);

// Marginal along face i: sums over the deleted coordinate.
Dist marginalize(const Dist& p, int i);

// Translate: result(y) = p(y - by).
Dist shift_by(const Dist& p, const Outcome& by);

// w1*p + w2*q exactly (weights must sum to 1 across repeated use by caller).
Dist mix(const std::vector<std::pair<Rat, Dist>>& terms);

// Split along a partition of the outcome universe into labelled parts:
// weight_i = P(part_i), component_i = P conditioned on part_i, with the
// <0,.> convention (weight 0 yields an absent component).  The parts must
// cover every outcome with nonzero mass and be pairwise disjoint.
std::vector<std::pair<Rat, std::optional<Dist>>> partition_split(
    const Dist& p, const std::vector<std::vector<Outcome>>& parts);

}  // namespace sctx
