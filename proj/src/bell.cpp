#include "sctx/bell.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace sctx {

std::vector<LinearInequality> chsh_family() {
    std::vector<LinearInequality> family;
    for (int chain = 1; chain <= 4; ++chain) {
        // Chain 1 negates edge 4, chain 2 edge 3, chain 3 edge 2, chain 4
        // edge 1; all other edges enter positively.
        const int negated = 5 - chain;
        LinearInequality upper;
        upper.name = "chsh" + std::to_string(chain) + ".ub";
        upper.bound = 2;
        LinearInequality lower;
        lower.name = "chsh" + std::to_string(chain) + ".lb";
        lower.bound = 0;
        for (int k = 1; k <= 4; ++k) {
            const Rat coef = k == negated ? Rat(-1) : Rat(1);
            for (const Outcome& y : {Outcome{0, 0}, Outcome{1, 1}}) {
                upper.terms.push_back({"s" + std::to_string(k), y, coef});
                lower.terms.push_back({"s" + std::to_string(k), y, -coef});
            }
        }
        family.push_back(std::move(upper));
        family.push_back(std::move(lower));
    }
    return family;
}

IneqValue evaluate_inequality(const LinearInequality& ineq, const SDist& p) {
    const Scenario& s = *p.scenario();
    const std::vector<Dist> dists = all_simplex_dists(p);
    auto value_at = [&](const IneqTerm& t) {
        const int idx = s.index_of(t.simplex);
        if (idx < 0)
            throw std::invalid_argument("evaluate: unknown simplex '" + t.simplex + "'");
        if (static_cast<int>(t.outcome.size()) != s.simplex(idx).dim + 1)
            throw std::invalid_argument("evaluate: outcome arity mismatch on '" + t.simplex + "'");
        return t.coef * dists[idx].at(t.outcome);
    };
    IneqValue out;
    out.lhs = 0;
    for (const IneqTerm& t : ineq.terms) out.lhs += value_at(t);
    for (const IneqTerm& t : ineq.rhs_terms) out.lhs -= value_at(t);
    out.satisfied = out.lhs <= ineq.bound;
    return out;
}

std::vector<LinearInequality> lift_to_cone(const std::vector<LinearInequality>& family,
                                           const Cone& c, int m) {
    std::vector<LinearInequality> lifted;
    lifted.reserve(family.size() * m);
    for (const LinearInequality& ineq : family) {
        if (ineq.terms.empty()) throw std::invalid_argument("lift_to_cone: empty inequality");
        for (const IneqTerm& t : ineq.terms) {
            if (!c.base.contains(t.simplex))
                throw std::invalid_argument("lift_to_cone: simplex '" + t.simplex +
                                            "' is not in the base scenario");
        }
        if (!ineq.rhs_terms.empty())
            throw std::invalid_argument("lift_to_cone: input must have constant bounds");
        const std::string& first = ineq.terms.front().simplex;
        const int first_dim = c.base.simplex(c.base.index_of(first)).dim;

        for (int j = 0; j < m; ++j) {
            LinearInequality up;
            up.name = ineq.name + ".j" + std::to_string(j);
            up.bound = 0;
            for (const IneqTerm& t : ineq.terms) {
                Outcome y;
                y.reserve(t.outcome.size() + 1);
                y.push_back(j);
                y.insert(y.end(), t.outcome.begin(), t.outcome.end());
                up.terms.push_back({c.lifted(t.simplex), std::move(y), t.coef});
            }
            if (ineq.bound != 0) {
                // R * sum_y p_{(c,x_1)}(j, y).
                Outcome y(first_dim + 2, 0);
                y[0] = j;
                while (true) {
                    up.rhs_terms.push_back({c.lifted(first), y, ineq.bound});
                    int i = static_cast<int>(y.size()) - 1;
                    while (i >= 1 && ++y[i] == m) y[i--] = 0;
                    if (i < 1) break;
                }
            }
            lifted.push_back(std::move(up));
        }
    }
    return lifted;
}

CharacterizationReport verify_characterization(ScenarioPtr scenario, int m,
                                               const std::vector<LinearInequality>& family,
                                               int samples, std::uint64_t seed) {
    CharacterizationReport report;
    auto satisfies = [&family](const SDist& p) -> std::pair<bool, std::string> {
        for (const LinearInequality& ineq : family) {
            if (!evaluate_inequality(ineq, p).satisfied) return {false, ineq.name};
        }
        return {true, ""};
    };

    const std::vector<SDist> verts = enumerate_vertices(scenario, m);
    report.vertices = static_cast<int>(verts.size());

    for (size_t i = 0; i < verts.size(); ++i) {
        const bool nc = is_noncontextual(verts[i]).noncontextual;
        const auto [sat, which] = satisfies(verts[i]);
        if (nc) {
            ++report.noncontextual_vertices;
            if (!sat) {
                report.counterexample =
                    "noncontextual vertex #" + std::to_string(i) + " violates " + which;
                return report;
            }
        } else {
            ++report.contextual_vertices;
            if (sat) {
                report.counterexample =
                    "contextual vertex #" + std::to_string(i) + " satisfies the family";
                return report;
            }
        }
    }

    // Seeded random rational points: convex combinations of vertices, so
    // membership in the polytope is exact by construction.
    std::mt19937_64 gen(seed);
    for (int t = 0; t < samples; ++t) {
        const int count = 1 + static_cast<int>(gen() % verts.size());
        std::vector<long> nums(count);
        long total = 0;
        while (total == 0) {
            total = 0;
            for (long& v : nums) {
                v = static_cast<long>(gen() % 16);
                total += v;
            }
        }
        std::vector<std::pair<Rat, SDist>> terms;
        for (int k = 0; k < count; ++k) {
            const SDist& v = verts[gen() % verts.size()];
            if (nums[k] != 0) terms.emplace_back(Rat(nums[k], total), v);
        }
        SDist p = mix_sdist(terms);
        ++report.samples;

        const bool nc = is_noncontextual(p).noncontextual;
        const auto [sat, which] = satisfies(p);
        if (nc != sat) {
            report.counterexample = "sample #" + std::to_string(t) +
                                    (nc ? " is noncontextual but violates " + which
                                        : " is contextual but satisfies the family");
            return report;
        }
    }

    report.pass = true;
    return report;
}

}  // namespace sctx
