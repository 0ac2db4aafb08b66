#pragma once

// Shared helpers for the test suites: deterministic seeded randomness (the
// raw mt19937_64 stream is fully specified by the standard, so results are
// identical across platforms) and random rational objects.

#include "sctx/dist.hpp"
#include "sctx/sdist.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace sctx::testing {

inline std::uint64_t rng_below(std::mt19937_64& gen, std::uint64_t n) { return gen() % n; }

// A random rational in [0, 1] with denominator <= max_den.
inline Rat random_unit_rat(std::mt19937_64& gen, int max_den = 16) {
    const std::uint64_t den = 1 + rng_below(gen, max_den);
    const std::uint64_t num = rng_below(gen, den + 1);
    return Rat(static_cast<long>(num), static_cast<long>(den));
}

// Random weights, nonnegative, summing to exactly 1, at least one positive.
inline std::vector<Rat> random_weights(std::mt19937_64& gen, int count, int max_num = 8) {
    std::vector<long> nums(count, 0);
    long total = 0;
    while (total == 0) {
        total = 0;
        for (long& v : nums) {
            v = static_cast<long>(rng_below(gen, max_num + 1));
            total += v;
        }
    }
    std::vector<Rat> w;
    w.reserve(count);
    for (long v : nums) w.emplace_back(v, total);
    return w;
}

inline Dist random_dist(std::mt19937_64& gen, int m, int arity) {
    std::vector<Outcome> outs;
    Outcome y(arity, 0);
    while (true) {
        outs.push_back(y);
        int i = arity - 1;
        while (i >= 0 && ++y[i] == m) y[i--] = 0;
        if (i < 0) break;
    }
    const std::vector<Rat> w = random_weights(gen, static_cast<int>(outs.size()));
    Dist d(m, arity);
    for (size_t k = 0; k < outs.size(); ++k) d.add(outs[k], w[k]);
    return d;
}

inline DetMixture random_mixture(std::mt19937_64& gen, const ScenarioPtr& scenario, int m,
                                 int support_size = 3) {
    const auto maps = enumerate_deterministic(scenario, m);
    DetMixture q{scenario, m, {}};
    std::vector<Rat> w = random_weights(gen, support_size);
    for (int k = 0; k < support_size; ++k) {
        const auto& phi = maps[rng_below(gen, maps.size())];
        q.weights[phi.labels()] += w[k];
        if (q.weights[phi.labels()] == 0) q.weights.erase(phi.labels());
    }
    return q;
}

// A random noncontextual simplicial distribution.
inline SDist random_sdist(std::mt19937_64& gen, const ScenarioPtr& scenario, int m,
                          int support_size = 3) {
    return theta(random_mixture(gen, scenario, m, support_size));
}

inline DeterministicMap random_map(std::mt19937_64& gen, const ScenarioPtr& scenario, int m) {
    std::vector<int> labels(scenario->vertex_list().size());
    for (int& a : labels) a = static_cast<int>(rng_below(gen, m));
    return DeterministicMap(scenario, m, std::move(labels));
}

}  // namespace sctx::testing
