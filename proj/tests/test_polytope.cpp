#include "sctx/polytope.hpp"

#include "sctx/linalg.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <set>

using namespace sctx;
using namespace sctx::testing;

namespace {

ScenarioPtr chsh() { return std::make_shared<Scenario>(build_cycle(4)); }

SDist pr_box(const ScenarioPtr& s) {
    return SDist(s, 2, {average_power(2, 0), average_power(2, 1), average_power(2, 1),
                        average_power(2, 1)});
}

SDist edgewise(const ScenarioPtr& s, const Dist& d) {
    return SDist(s, d.modulus(), std::vector<Dist>(s->generators().size(), d));
}

int affine_dim(const CoordSpace& coords) {
    HRep h = build_hrep(coords);
    return coords.ncols() - rank(h.eq_a);
}

// Independent vertex oracle: enumerate basic solutions over all candidate
// active sets of nonnegativity constraints in the affine-hull coordinates.
std::vector<RatVec> brute_force_vertices(const CoordSpace& coords) {
    HRep h = build_hrep(coords);
    auto base = solve_linear(h.eq_a, h.eq_b);
    REQUIRE(base.has_value());
    std::vector<RatVec> basis = nullspace(h.eq_a);
    const int d = static_cast<int>(basis.size());
    const int n = coords.ncols();

    // Inequality rows in z-space: row_i . z + c_i >= 0 per coordinate.
    RatMat rows(n, RatVec(d));
    RatVec consts(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < d; ++k) rows[i][k] = basis[k][i];
        consts[i] = (*base)[i];
    }

    std::set<RatVec> found;
    std::vector<int> pick(d);
    // All d-subsets of the n rows.
    auto recurse = [&](auto&& self, int start, int depth) -> void {
        if (depth == d) {
            RatMat a(d, RatVec(d));
            RatVec b(d);
            for (int t = 0; t < d; ++t) {
                a[t] = rows[pick[t]];
                b[t] = -consts[pick[t]];
            }
            if (rank(a) != d) return;
            auto z = solve_linear(a, b);
            if (!z) return;
            RatVec x(n);
            for (int i = 0; i < n; ++i) {
                x[i] = consts[i];
                for (int k = 0; k < d; ++k) x[i] += rows[i][k] * (*z)[k];
                if (x[i] < 0) return;
            }
            found.insert(std::move(x));
            return;
        }
        for (int i = start; i <= n - (d - depth); ++i) {
            pick[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    recurse(recurse, 0, 0);
    return {found.begin(), found.end()};
}

}  // namespace

TEST_CASE("H-representation dimensions") {
    CHECK(affine_dim(CoordSpace(chsh(), 2)) == 8);

    auto edge = std::make_shared<Scenario>(build_line(1));
    CoordSpace ce(edge, 2);
    CHECK(ce.ncols() == 4);
    CHECK(affine_dim(ce) == 3);

    auto cn = std::make_shared<Scenario>(cone(build_cycle(4)).space);
    CoordSpace cc(cn, 2);
    CHECK(cc.ncols() == 32);
    CHECK(affine_dim(cc) == 17);
}

TEST_CASE("coordinate round trip") {
    auto s = chsh();
    CoordSpace coords(s, 2);
    std::mt19937_64 gen(2);
    for (int trial = 0; trial < 50; ++trial) {
        SDist p = random_sdist(gen, s, 2);
        CHECK(coords.to_sdist(coords.to_vector(p)) == p);
    }
}

TEST_CASE("vertex certification") {
    auto s = chsh();
    std::mt19937_64 gen(4);

    DeterministicMap phi = random_map(gen, s, 2);
    CHECK(is_vertex(deterministic_sdist(phi)).vertex);

    CHECK(is_vertex(pr_box(s)).vertex);

    SDist mixed = mix_sdist({{Rat(1, 2), deterministic_sdist(DeterministicMap(s, 2, {0, 0, 0, 0}))},
                             {Rat(1, 2), pr_box(s)}});
    VertexCertificate cert = is_vertex(mixed);
    CHECK_FALSE(cert.vertex);
    CHECK(cert.active_rank < cert.ncoords);
}

TEST_CASE("contextuality LP") {
    auto s = chsh();

    NoncontextualityCertificate pr = is_noncontextual(pr_box(s));
    CHECK_FALSE(pr.noncontextual);
    // The separating functional is strictly positive on the PR box and
    // nonpositive on every deterministic distribution.
    CoordSpace coords(s, 2);
    RatVec x = coords.to_vector(pr_box(s));
    Rat at_p = pr.separating_const;
    for (int c = 0; c < coords.ncols(); ++c) at_p += pr.separating[c] * x[c];
    CHECK(at_p > 0);
    for (const auto& map : enumerate_deterministic(s, 2)) {
        RatVec v = coords.to_vector(deterministic_sdist(map));
        Rat val = pr.separating_const;
        for (int c = 0; c < coords.ncols(); ++c) val += pr.separating[c] * v[c];
        CHECK(val <= 0);
    }

    std::mt19937_64 gen(6);
    for (int trial = 0; trial < 50; ++trial) {
        DetMixture q = random_mixture(gen, s, 2);
        NoncontextualityCertificate cert = is_noncontextual(theta(q));
        CHECK(cert.noncontextual);  // witness equality is asserted internally
    }

    CHECK(is_noncontextual(edgewise(s, uniform(2, 2))).noncontextual);
}

TEST_CASE("CHSH vertex enumeration and classification") {
    auto s = chsh();
    std::vector<SDist> verts = enumerate_vertices(s, 2);
    CHECK(verts.size() == 24);

    int deterministic = 0, contextual = 0;
    for (const SDist& v : verts) {
        NoncontextualityCertificate cert = is_noncontextual(v);
        bool is_det = true;
        for (const Dist& d : v.generator_dists()) is_det = is_det && d.support().size() == 1;
        if (is_det) {
            ++deterministic;
            CHECK(cert.noncontextual);
        } else {
            ++contextual;
            CHECK_FALSE(cert.noncontextual);
        }
    }
    CHECK(deterministic == 16);
    CHECK(contextual == 8);

    // The PR box is among the contextual vertices.
    CHECK(std::find(verts.begin(), verts.end(), pr_box(s)) != verts.end());

    // Contextual CHSH vertices are exactly the eight edge assignments from
    // {p_+, p_-} with an odd number of p_- entries.
    for (const SDist& v : verts) {
        bool is_det = true;
        for (const Dist& d : v.generator_dists()) is_det = is_det && d.support().size() == 1;
        if (is_det) continue;
        int minus = 0;
        for (const Dist& d : v.generator_dists()) {
            const bool plus = d == average_power(2, 0);
            const bool neg = d == average_power(2, 1);
            CHECK((plus || neg));
            if (neg) ++minus;
        }
        CHECK(minus % 2 == 1);
    }
}

TEST_CASE("single edge has four delta vertices") {
    auto edge = std::make_shared<Scenario>(build_line(1));
    std::vector<SDist> verts = enumerate_vertices(edge, 2);
    CHECK(verts.size() == 4);
    for (const SDist& v : verts) CHECK(v.generator_dists()[0].support().size() == 1);
}

TEST_CASE("double description agrees with the brute-force oracle on CHSH") {
    auto s = chsh();
    CoordSpace coords(s, 2);
    std::vector<RatVec> oracle = brute_force_vertices(coords);
    std::vector<SDist> verts = enumerate_vertices(s, 2);
    REQUIRE(oracle.size() == verts.size());
    std::vector<RatVec> got;
    got.reserve(verts.size());
    for (const SDist& v : verts) got.push_back(coords.to_vector(v));
    std::sort(got.begin(), got.end());
    CHECK(got == oracle);
}

TEST_CASE("enumeration respects the coordinate cap") {
    auto big = std::make_shared<Scenario>(suspension(build_cycle(4)).space);
    CHECK_THROWS_AS(enumerate_vertices(big, 2), std::runtime_error);
}

TEST_CASE("vertex support") {
    auto s = chsh();
    std::mt19937_64 gen(8);

    DeterministicMap phi = random_map(gen, s, 2);
    SDist d = deterministic_sdist(phi);
    std::vector<SDist> vs = vsupp(d);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0] == d);

    CHECK(vsupp(edgewise(s, uniform(2, 2))).size() == 24);

    // The three-edge-line remark: the half/half mixture of phi^{0,0} and
    // phi^{1,0} supports a third deterministic map.
    auto l3 = std::make_shared<Scenario>(build_line(3));
    SDist m = mix_sdist({{Rat(1, 2), deterministic_sdist(DeterministicMap(l3, 2, {0, 0, 0, 0}))},
                         {Rat(1, 2), deterministic_sdist(DeterministicMap(l3, 2, {1, 0, 1, 0}))}});
    std::vector<SDist> support = vsupp(m);
    SDist extra = deterministic_sdist(DeterministicMap(l3, 2, {0, 0, 1, 0}));
    CHECK(extra.on_generator_id("s1") == delta(2, {0, 0}));
    CHECK(extra.on_generator_id("s2") == delta(2, {0, 1}));
    CHECK(extra.on_generator_id("s3") == delta(2, {1, 0}));
    CHECK(std::find(support.begin(), support.end(), extra) != support.end());
    CHECK(support.size() > 2);
}

TEST_CASE("closed vertex sets") {
    auto s = chsh();

    // psi^{i,j} labelings (i, i+j, i, i+j): the pairs {psi^{0,j}, psi^{1,j}}
    // are closed.
    auto psi = [&](int i, int j) {
        return deterministic_sdist(DeterministicMap(s, 2, {i, (i + j) % 2, i, (i + j) % 2}));
    };
    CHECK(is_closed_vertex_set({psi(0, 0), psi(1, 0)}));
    CHECK(is_closed_vertex_set({psi(0, 1), psi(1, 1)}));

    // The line remark pair is not closed.
    auto l3 = std::make_shared<Scenario>(build_line(3));
    SDist a = deterministic_sdist(DeterministicMap(l3, 2, {0, 0, 0, 0}));
    SDist b = deterministic_sdist(DeterministicMap(l3, 2, {1, 0, 1, 0}));
    CHECK_FALSE(is_closed_vertex_set({a, b}));

    // Singletons are closed; non-vertices are rejected.
    CHECK(is_closed_vertex_set({pr_box(s)}));
    SDist mid = mix_sdist({{Rat(1, 2), psi(0, 0)}, {Rat(1, 2), pr_box(s)}});
    CHECK_THROWS_AS(is_closed_vertex_set({mid}), std::invalid_argument);
}

TEST_CASE("vsupp is equivariant under the group action") {
    auto s = chsh();
    std::mt19937_64 gen(10);
    for (int trial = 0; trial < 40; ++trial) {
        SDist p = random_sdist(gen, s, 2, 2 + static_cast<int>(rng_below(gen, 2)));
        DeterministicMap phi = random_map(gen, s, 2);

        std::vector<SDist> lhs = vsupp(act(phi, p));
        std::vector<SDist> rhs;
        for (const SDist& q : vsupp(p)) rhs.push_back(act(phi, q));
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        CHECK(lhs == rhs);
    }
}
