#include "sctx/lp.hpp"

#include "sctx/linalg.hpp"
#include "sctx/polytope.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <memory>
#include <random>

using namespace sctx;
using namespace sctx::testing;

TEST_CASE("rank, solve and nullspace") {
    RatMat a = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}, {Rat(0), Rat(1)}};
    CHECK(rank(a) == 2);

    auto x = solve_linear({{Rat(2), Rat(0)}, {Rat(0), Rat(4)}}, {Rat(1), Rat(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(1, 2));
    CHECK((*x)[1] == Rat(1, 2));

    CHECK_FALSE(solve_linear({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}, {Rat(0), Rat(1)}).has_value());

    auto ns = nullspace({{Rat(1), Rat(1), Rat(0)}});
    CHECK(ns.size() == 2);
    for (const auto& v : ns) CHECK(v[0] + v[1] == 0);
}

TEST_CASE("one-variable feasibility") {
    // x >= 0, x <= 1, x = 1/2.
    LinearSystem sys;
    sys.nvars = 1;
    sys.eq_a = {{Rat(1)}};
    sys.eq_b = {Rat(1, 2)};
    sys.ineq_a = {{Rat(-1)}, {Rat(1)}};
    sys.ineq_b = {Rat(0), Rat(1)};
    LpResult res = lp_feasible(sys);
    REQUIRE(res.feasible);
    CHECK(res.point[0] == Rat(1, 2));

    // x >= 1, x <= 0: infeasible; the certificate is verified internally
    // and returned with nonnegative inequality multipliers.
    LinearSystem bad;
    bad.nvars = 1;
    bad.ineq_a = {{Rat(-1)}, {Rat(1)}};
    bad.ineq_b = {Rat(-1), Rat(0)};
    LpResult r2 = lp_feasible(bad);
    REQUIRE_FALSE(r2.feasible);
    CHECK(r2.lambda_ineq[0] >= 0);
    CHECK(r2.lambda_ineq[1] >= 0);
    Rat rhs = r2.lambda_ineq[0] * bad.ineq_b[0] + r2.lambda_ineq[1] * bad.ineq_b[1];
    CHECK(rhs < 0);
}

TEST_CASE("CHSH completion of a pinned edge is feasible") {
    auto s = std::make_shared<Scenario>(build_cycle(4));
    CoordSpace coords(s, 2);
    HRep h = build_hrep(coords);

    LinearSystem sys;
    sys.nvars = coords.ncols();
    sys.eq_a = h.eq_a;
    sys.eq_b = h.eq_b;
    sys.ineq_a = h.ineq_a;
    sys.ineq_b = h.ineq_b;
    // Pin p_{s1} to the deterministic distribution delta^{(0,0)}.
    for (const Outcome& y : coords.outcomes_of(0)) {
        RatVec row(coords.ncols(), Rat(0));
        row[coords.col(0, y)] = 1;
        sys.eq_a.push_back(std::move(row));
        sys.eq_b.push_back(y == Outcome{0, 0} ? Rat(1) : Rat(0));
    }
    LpResult res = lp_feasible(sys);
    REQUIRE(res.feasible);
    SDist p = coords.to_sdist(res.point);
    CHECK(validate_sdist(p).ok);
    CHECK(p.on_generator_id("s1") == delta(2, {0, 0}));
}

TEST_CASE("random feasibility instances round-trip") {
    std::mt19937_64 gen(19);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng_below(gen, 4));
        const int rows = 1 + static_cast<int>(rng_below(gen, 4));

        // Build a system that is feasible by construction: pick x0 >= 0 and
        // derive b = A x0.
        RatVec x0(n);
        for (Rat& v : x0) v = Rat(static_cast<long>(rng_below(gen, 5)), 1);
        RatMat a(rows, RatVec(n));
        RatVec b(rows, Rat(0));
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < n; ++j)
                a[i][j] = Rat(static_cast<long>(rng_below(gen, 7)) - 3, 1);
            for (int j = 0; j < n; ++j) b[i] += a[i][j] * x0[j];
        }
        NonnegLpResult res = solve_nonneg(a, b);
        REQUIRE(res.feasible);  // the exact A x = b recheck runs inside
    }
}

TEST_CASE("random infeasible instances produce certificates") {
    std::mt19937_64 gen(23);
    int infeasible_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng_below(gen, 3));
        const int rows = 2 + static_cast<int>(rng_below(gen, 3));
        RatMat a(rows, RatVec(n));
        RatVec b(rows);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < n; ++j)
                a[i][j] = Rat(static_cast<long>(rng_below(gen, 7)) - 3, 1);
            b[i] = Rat(static_cast<long>(rng_below(gen, 9)) - 4, 1);
        }
        NonnegLpResult res = solve_nonneg(a, b);  // certificates verified internally
        if (!res.feasible) ++infeasible_seen;
    }
    CHECK(infeasible_seen > 0);
}
