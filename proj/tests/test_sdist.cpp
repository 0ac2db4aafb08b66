#include "sctx/sdist.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <memory>
#include <random>

using namespace sctx;
using namespace sctx::testing;

namespace {

ScenarioPtr chsh() { return std::make_shared<Scenario>(build_cycle(4)); }

// sigma_1 -> p_+, sigma_2..4 -> p_-.
SDist pr_box(const ScenarioPtr& s) {
    std::vector<Dist> dists = {average_power(2, 0), average_power(2, 1), average_power(2, 1),
                               average_power(2, 1)};
    return SDist(s, 2, std::move(dists));
}

SDist edgewise(const ScenarioPtr& s, const Dist& d) {
    return SDist(s, d.modulus(), std::vector<Dist>(s->generators().size(), d));
}

}  // namespace

TEST_CASE("validate_sdist on CHSH") {
    auto s = chsh();
    CHECK(validate_sdist(edgewise(s, average_power(2, 0))).ok);
    CHECK(validate_sdist(pr_box(s)).ok);

    // delta edges with a clashing shared vertex.
    std::vector<Dist> bad = {delta(2, {0, 0}), delta(2, {1, 0}), delta(2, {0, 0}),
                             delta(2, {0, 0})};
    SDistReport rep = validate_sdist(SDist(s, 2, std::move(bad)));
    CHECK_FALSE(rep.ok);
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations.front().simplex == "v2");
}

TEST_CASE("enumerate_deterministic") {
    CHECK(enumerate_deterministic(chsh(), 2).size() == 16);
    auto cn = std::make_shared<Scenario>(cone(build_cycle(4)).space);
    CHECK(enumerate_deterministic(cn, 2).size() == 32);
    CHECK(enumerate_deterministic(std::make_shared<Scenario>(build_point()), 3).size() == 3);
    CHECK_THROWS_AS(enumerate_deterministic(chsh(), 2, 8), std::runtime_error);
}

TEST_CASE("deterministic distributions") {
    auto s = chsh();
    DeterministicMap zero(s, 2, {0, 0, 0, 0});
    SDist d = deterministic_sdist(zero);
    for (const Dist& dist : d.generator_dists()) CHECK(dist == delta(2, {0, 0}));

    // psi^h on the three-edge line: edge tuples (0,0), (0,1), (1,h).
    auto l3 = std::make_shared<Scenario>(build_line(3));
    for (int h : {0, 1}) {
        DeterministicMap psi(l3, 2, {0, 0, 1, h});
        SDist p = deterministic_sdist(psi);
        CHECK(p.on_generator_id("s1") == delta(2, {0, 0}));
        CHECK(p.on_generator_id("s2") == delta(2, {0, 1}));
        CHECK(p.on_generator_id("s3") == delta(2, {1, h}));
    }

    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 25; ++trial) {
        const int m = trial % 2 == 0 ? 2 : 3;
        CHECK(validate_sdist(deterministic_sdist(random_map(gen, s, m))).ok);
    }
}

TEST_CASE("theta") {
    auto s = chsh();
    std::mt19937_64 gen(5);

    // Point mass reproduces the deterministic distribution.
    DeterministicMap phi = random_map(gen, s, 2);
    DetMixture point{s, 2, {{phi.labels(), Rat(1)}}};
    CHECK(theta(point) == deterministic_sdist(phi));

    // Uniform mixture over all 16 maps gives uniform edges.
    DetMixture all{s, 2, {}};
    for (const auto& map : enumerate_deterministic(s, 2)) all.weights[map.labels()] = Rat(1, 16);
    CHECK(theta(all) == edgewise(s, uniform(2, 2)));

    // Two-term mixture on the two-edge line gives p_+ on both edges.
    auto l2 = std::make_shared<Scenario>(build_line(2));
    DetMixture two{l2, 2, {{{0, 0, 0}, Rat(1, 2)}, {{1, 1, 1}, Rat(1, 2)}}};
    SDist p = theta(two);
    CHECK(p.on_generator_id("s1") == average_power(2, 0));
    CHECK(p.on_generator_id("s2") == average_power(2, 0));
}

TEST_CASE("theta is convex-linear") {
    auto s = chsh();
    std::mt19937_64 gen(9);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = trial % 2 == 0 ? 2 : 3;
        DetMixture q1 = random_mixture(gen, s, m);
        DetMixture q2 = random_mixture(gen, s, m);
        const Rat t = random_unit_rat(gen);

        DetMixture blend{s, m, {}};
        for (const auto& [labels, w] : q1.weights) blend.weights[labels] += t * w;
        for (const auto& [labels, w] : q2.weights) blend.weights[labels] += (1 - t) * w;

        SDist lhs = theta(blend);
        SDist rhs = mix_sdist({{t, theta(q1)}, {1 - t, theta(q2)}});
        CHECK(lhs == rhs);
        CHECK(validate_sdist(lhs).ok);
    }
}

TEST_CASE("product") {
    auto s = chsh();
    SDist pr = pr_box(s);
    DeterministicMap zero(s, 2, {0, 0, 0, 0});
    CHECK(product(pr, deterministic_sdist(zero)) == pr);

    // p_- * p_- = p_+ on every edge, and p_+ * p_- = p_-.
    SDist squared = product(pr, pr);
    for (const Dist& d : squared.generator_dists()) CHECK(d == average_power(2, 0));

    CHECK(product(pr, edgewise(s, uniform(2, 2))) == edgewise(s, uniform(2, 2)));

    std::mt19937_64 gen(15);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = trial % 2 == 0 ? 2 : 3;
        SDist p = random_sdist(gen, s, m);
        SDist q = random_sdist(gen, s, m);
        CHECK(validate_sdist(product(p, q)).ok);
        // product with a deterministic map equals the group action.
        DeterministicMap phi = random_map(gen, s, m);
        CHECK(product(deterministic_sdist(phi), q) == act(phi, q));
    }
}

TEST_CASE("act is a group action") {
    auto s = chsh();
    std::mt19937_64 gen(21);

    // A labeling whose tuple on a single edge is (0,1) turns p_+ into p_-.
    auto l1 = std::make_shared<Scenario>(build_line(1));
    DeterministicMap step(l1, 2, {0, 1});
    SDist plus(l1, 2, {average_power(2, 0)});
    CHECK(act(step, plus) == SDist(l1, 2, {average_power(2, 1)}));

    for (int trial = 0; trial < 200; ++trial) {
        const int m = trial % 2 == 0 ? 2 : 3;
        SDist q = random_sdist(gen, s, m);
        DeterministicMap zero(s, m, std::vector<int>(4, 0));
        CHECK(act(zero, q) == q);

        DeterministicMap phi = random_map(gen, s, m);
        DeterministicMap psi = random_map(gen, s, m);
        CHECK(act(phi, act(psi, q)) == act(phi.plus(psi), q));
        CHECK(act(phi.negated(), act(phi, q)) == q);

        DeterministicMap rho = random_map(gen, s, m);
        CHECK(act(phi, deterministic_sdist(rho)) == deterministic_sdist(phi.plus(rho)));
    }
}

TEST_CASE("restriction") {
    auto s = chsh();
    SDist pr = pr_box(s);

    auto edge = std::make_shared<Scenario>(
        Scenario("edge", {{"v1", 0, {}}, {"v2", 0, {}}, {"s1", 1, {"v2", "v1"}}}));
    SDist r = restrict_sdist(pr, edge);
    CHECK(r.on_generator_id("s1") == average_power(2, 0));

    CHECK(restrict_sdist(pr, s) == pr);

    auto line = std::make_shared<Scenario>(Scenario(
        "line-in-cycle", {{"v1", 0, {}}, {"v2", 0, {}}, {"v3", 0, {}},
                          {"s1", 1, {"v2", "v1"}}, {"s2", 1, {"v3", "v2"}}}));
    SDist u = restrict_sdist(edgewise(s, uniform(2, 2)), line);
    for (const Dist& d : u.generator_dists()) CHECK(d == uniform(2, 2));

    auto foreign = std::make_shared<Scenario>(build_line(1));
    CHECK_THROWS_AS(restrict_sdist(pr, foreign), std::invalid_argument);
}

TEST_CASE("support preorder") {
    auto s = chsh();
    SDist pr = pr_box(s);
    CHECK(preceq(pr, pr));

    DeterministicMap zero(s, 2, {0, 0, 0, 0});
    CHECK(preceq(deterministic_sdist(zero), edgewise(s, uniform(2, 2))));

    auto l1 = std::make_shared<Scenario>(build_line(1));
    SDist plus(l1, 2, {average_power(2, 0)});
    SDist minus(l1, 2, {average_power(2, 1)});
    CHECK_FALSE(preceq(plus, minus));

    // preceq is preserved under product on support-nested pairs.
    std::mt19937_64 gen(33);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = trial % 2 == 0 ? 2 : 3;
        DetMixture big = random_mixture(gen, s, m, 4);
        DetMixture small{s, m, {}};
        // Sub-mixture: keep a nonempty prefix of the support, renormalized.
        const size_t keep = 1 + rng_below(gen, big.weights.size());
        Rat total(0);
        size_t k = 0;
        for (const auto& [labels, w] : big.weights) {
            if (k++ == keep) break;
            small.weights[labels] = w;
            total += w;
        }
        for (auto& [labels, w] : small.weights) w /= total;

        SDist p = theta(big), ptilde = theta(small);
        DetMixture big2 = random_mixture(gen, s, m, 4);
        DetMixture small2{s, m, {}};
        const size_t keep2 = 1 + rng_below(gen, big2.weights.size());
        Rat total2(0);
        k = 0;
        for (const auto& [labels, w] : big2.weights) {
            if (k++ == keep2) break;
            small2.weights[labels] = w;
            total2 += w;
        }
        for (auto& [labels, w] : small2.weights) w /= total2;
        SDist q = theta(big2), qtilde = theta(small2);

        REQUIRE(preceq(ptilde, p));
        REQUIRE(preceq(qtilde, q));
        CHECK(preceq(product(ptilde, qtilde), product(p, q)));
    }
}
