#include "sctx/scenario.hpp"

#include "doctest.h"

#include <algorithm>

using namespace sctx;

namespace {

int count_dim(const Scenario& s, int dim) {
    int n = 0;
    for (const Simplex& t : s.simplices())
        if (t.dim == dim) ++n;
    return n;
}

}  // namespace

TEST_CASE("cycle builder produces the CHSH measurement space") {
    Scenario s = build_cycle(4);
    CHECK(validate_scenario(s).ok);
    CHECK(count_dim(s, 0) == 4);
    CHECK(count_dim(s, 1) == 4);
    CHECK(s.generators().size() == 4);
    for (int g : s.generators()) CHECK(s.simplex(g).dim == 1);

    // d_0(s_k) = d_1(s_{k+1}), cyclically.
    for (int k = 1; k <= 4; ++k) {
        const int a = s.index_of("s" + std::to_string(k));
        const int b = s.index_of("s" + std::to_string(k % 4 + 1));
        CHECK(s.face(a, 0) == s.face(b, 1));
    }

    // Ordered vertices of s1 are (v1, v2).
    const int e = s.index_of("s1");
    CHECK(s.vertices_of(e) == std::vector<int>{s.index_of("v1"), s.index_of("v2")});

    CHECK(validate_scenario(build_cycle(3)).ok);
    CHECK(count_dim(build_cycle(3), 0) == 3);
    CHECK_THROWS_AS(build_cycle(2), std::invalid_argument);
}

TEST_CASE("line builder") {
    Scenario l3 = build_line(3);
    CHECK(count_dim(l3, 0) == 4);
    CHECK(count_dim(l3, 1) == 3);
    CHECK(l3.face(l3.index_of("s1"), 0) == l3.face(l3.index_of("s2"), 1));

    CHECK(count_dim(build_line(2), 0) == 3);
    CHECK(count_dim(build_line(1), 0) == 2);
    CHECK_THROWS_AS(build_line(0), std::invalid_argument);
}

TEST_CASE("validate_scenario reports broken simplicial identities") {
    // A triangle whose d_0(d_1 t) != d_0(d_0 t).
    std::vector<Simplex> sx = {
        {"u", 0, {}}, {"v", 0, {}}, {"w", 0, {}}, {"z", 0, {}},
        {"e01", 1, {"v", "u"}}, {"e02", 1, {"w", "u"}}, {"e12", 1, {"w", "v"}},
        {"bad", 1, {"z", "v"}},
        {"t", 2, {"e12", "bad", "e01"}},
    };
    Scenario s("broken", std::move(sx));
    ValidationReport rep = validate_scenario(s);
    CHECK_FALSE(rep.ok);
    bool names_t = false;
    for (const std::string& v : rep.violations) names_t = names_t || v.find("'t'") == 0 || v.find("'t'") != std::string::npos;
    CHECK(names_t);

    // Dangling face reference.
    Scenario dangling("dangling", {{"v", 0, {}}, {"e", 1, {"v", "missing"}}});
    ValidationReport rep2 = validate_scenario(dangling);
    CHECK_FALSE(rep2.ok);
    bool names_missing = false;
    for (const std::string& v : rep2.violations)
        names_missing = names_missing || v.find("missing") != std::string::npos;
    CHECK(names_missing);
}

TEST_CASE("cone of the CHSH scenario") {
    Cone c = cone(build_cycle(4));
    CHECK(validate_scenario(c.space).ok);
    CHECK(count_dim(c.space, 0) == 5);
    CHECK(count_dim(c.space, 1) == 8);
    CHECK(count_dim(c.space, 2) == 4);

    // Four generating 2-simplices glued by d_1(t_k) = d_2(t_{k+1}).
    CHECK(c.space.generators().size() == 4);
    for (int k = 1; k <= 4; ++k) {
        const int a = c.space.index_of(c.lifted("s" + std::to_string(k)));
        const int b = c.space.index_of(c.lifted("s" + std::to_string(k % 4 + 1)));
        REQUIRE(a >= 0);
        CHECK(c.space.simplex(a).dim == 2);
        CHECK(c.space.face(a, 1) == c.space.face(b, 2));
        CHECK(c.space.face(a, 0) == c.space.index_of("s" + std::to_string(k)));
    }

    // The cone point is vertex 0 of every lifted simplex.
    const int cp = c.space.index_of("c");
    for (const auto& [base_id, lifted_id] : c.lift) {
        const int idx = c.space.index_of(lifted_id);
        CHECK(c.space.vertices_of(idx).front() == cp);
    }
}

TEST_CASE("cone of a point is a single edge") {
    Cone c = cone(build_point());
    CHECK(count_dim(c.space, 0) == 2);
    CHECK(count_dim(c.space, 1) == 1);
    const int e = c.space.index_of(c.lifted("v"));
    CHECK(c.space.face(e, 0) == c.space.index_of("v"));
    CHECK(c.space.face(e, 1) == c.space.index_of("c"));
}

TEST_CASE("cone rejects id collisions") {
    CHECK_THROWS_AS(cone(build_cycle(4), "v1"), std::invalid_argument);
}

TEST_CASE("cone is natural in inclusions") {
    // The cone of the edge sub-scenario embeds in the cone of the cycle.
    Scenario sub("edge-sub", {{"v1", 0, {}}, {"v2", 0, {}}, {"s1", 1, {"v2", "v1"}}});
    REQUIRE(validate_scenario(sub).ok);
    Cone csub = cone(sub);
    Cone chost = cone(build_cycle(4));
    for (const Simplex& t : csub.space.simplices()) {
        const int hi = chost.space.index_of(t.id);
        REQUIRE(hi >= 0);
        CHECK(chost.space.simplex(hi).dim == t.dim);
        CHECK(chost.space.simplex(hi).face_ids == t.face_ids);
    }
}

TEST_CASE("suspension of the CHSH scenario") {
    Suspension s = suspension(build_cycle(4));
    CHECK(validate_scenario(s.space).ok);
    CHECK(count_dim(s.space, 0) == 6);
    CHECK(count_dim(s.space, 1) == 12);
    CHECK(count_dim(s.space, 2) == 8);
    CHECK(s.space.generators().size() == 8);

    // The two cone images intersect exactly in the base.
    for (const Simplex& t : s.base.simplices()) {
        CHECK(s.up.space.contains(t.id));
        CHECK(s.down.space.contains(t.id));
    }
    int shared = 0;
    for (const Simplex& t : s.up.space.simplices())
        if (s.down.space.contains(t.id)) ++shared;
    CHECK(shared == s.base.size());

    // The up copy is the cone of the base up to renaming the cone point.
    Cone plain = cone(s.base, "c");
    REQUIRE(plain.space.size() == s.up.space.size());
    auto rename = [](std::string id) {
        if (id == "c") return std::string("c+");
        if (id.rfind("c.", 0) == 0) return "c+." + id.substr(2);
        return id;
    };
    for (const Simplex& t : plain.space.simplices()) {
        const int idx = s.up.space.index_of(rename(t.id));
        REQUIRE(idx >= 0);
        const Simplex& u = s.up.space.simplex(idx);
        CHECK(u.dim == t.dim);
        for (size_t k = 0; k < t.face_ids.size(); ++k)
            CHECK(u.face_ids[k] == rename(t.face_ids[k]));
    }
}

TEST_CASE("suspension of a point") {
    Suspension s = suspension(build_point());
    CHECK(count_dim(s.space, 0) == 3);
    CHECK(count_dim(s.space, 1) == 2);
}

TEST_CASE("disjoint union and connectivity") {
    Scenario two_points = disjoint_union(build_point(), build_point());
    CHECK(count_dim(two_points, 0) == 2);
    CHECK_FALSE(is_connected(two_points));

    Scenario cc = disjoint_union(build_cycle(4), build_cycle(4));
    CHECK(count_dim(cc, 0) == 8);
    CHECK(count_dim(cc, 1) == 8);
    CHECK_FALSE(is_connected(cc));

    CHECK(is_connected(build_cycle(4)));
    CHECK(is_connected(suspension(build_cycle(4)).space));
    CHECK_THROWS_AS(is_connected(Scenario("empty", {})), std::invalid_argument);
}

TEST_CASE("line specs validate gluing and orientation") {
    Scenario s = build_cycle(4);
    LineSpec ok{{"s1", "s2", "s3"}, {0, 0, 0}};
    CHECK_NOTHROW(require_line(s, ok));
    const auto path = line_vertex_path(s, ok);
    CHECK(path == std::vector<int>{s.index_of("v1"), s.index_of("v2"), s.index_of("v3"),
                                   s.index_of("v4")});

    LineSpec bad{{"s1", "s3"}, {0, 0}};
    CHECK_THROWS_AS(require_line(s, bad), std::invalid_argument);
    LineSpec repeat{{"s1", "s1"}, {0, 0}};
    CHECK_THROWS_AS(require_line(s, repeat), std::invalid_argument);
}
