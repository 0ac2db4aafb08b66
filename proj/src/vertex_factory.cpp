#include "sctx/vertex_factory.hpp"

#include "sctx/linalg.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace sctx {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::array<int, 2> times(const Mat2& a, int i, int j, int m) {
    return {mod(a[0][0] * i + a[0][1] * j, m), mod(a[1][0] * i + a[1][1] * j, m)};
}

int det2(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

bool coprime(int a, int m) { return std::gcd(mod(a, m), m) == 1; }

}  // namespace

CollectionReport validate_det_collection(const DetCollection& c) {
    CollectionReport rep;
    const int m = c.m;
    if (m < 2) {
        rep.fail("modulus must be >= 2");
        return rep;
    }
    if (static_cast<int>(c.sigma1.size()) != m) {
        rep.fail("sigma1 table must have m rows");
        return rep;
    }
    for (const auto& row : c.sigma1) {
        if (static_cast<int>(row.size()) != m) {
            rep.fail("sigma1 table must have m columns");
            return rep;
        }
    }

    // Condition (1): the sigma1 values exhaust Z_m^2.
    std::set<std::array<int, 2>> seen;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            seen.insert({mod(c.sigma1[i][j][0], m), mod(c.sigma1[i][j][1], m)});
    if (static_cast<int>(seen.size()) != m * m)
        rep.fail("condition (1): sigma1 values do not exhaust Z_m^2");

    // The edge tuples must chain into simplicial maps on the line.
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const auto s2 = times(c.A, i, j, m);
            const auto s3 = times(c.B, i, j, m);
            if (mod(c.sigma1[i][j][1], m) != s2[0])
                rep.fail("map chaining: phi^{" + std::to_string(i) + "," + std::to_string(j) +
                         "} breaks between s1 and s2");
            if (s2[1] != s3[0])
                rep.fail("map chaining: phi^{" + std::to_string(i) + "," + std::to_string(j) +
                         "} breaks between s2 and s3");
        }
    }

    // Condition (3): the three gcd conditions for the bound h.
    if (!coprime(det2(c.A), m)) rep.fail("condition (3): gcd(det A, m) != 1");
    if (!coprime(det2(c.B), m)) rep.fail("condition (3): gcd(det B, m) != 1");
    const int third = c.A[0][1] * (c.B[1][0] - c.B[0][0] * c.h) -
                      c.A[0][0] * (c.B[1][1] - c.B[0][1] * c.h);
    if (!coprime(third, m))
        rep.fail("condition (3): gcd(a12(b21 - b11 h) - a11(b22 - b12 h), m) != 1");
    return rep;
}

CollectionReport validate_avg_collection(const AvgCollection& c) {
    CollectionReport rep;
    const int m = c.m;
    if (m < 2) {
        rep.fail("modulus must be >= 2");
        return rep;
    }
    if (static_cast<int>(c.exponents.size()) != m) {
        rep.fail("need exactly m distributions");
        return rep;
    }
    for (int k = 0; k < 2; ++k) {
        std::set<int> hit;
        for (int j = 0; j < m; ++j) hit.insert(mod(c.exponents[j][k], m));
        if (static_cast<int>(hit.size()) != m)
            rep.fail("edge s" + std::to_string(k + 1) +
                     ": exponents are not a permutation of Z_m");
    }
    // Every shift distribution has uniform vertex marginals.
    for (int j = 0; j < m && rep.ok; ++j) {
        for (int k = 0; k < 2; ++k) {
            const Dist s = average_power(m, mod(c.exponents[j][k], m));
            if (!(marginalize(s, 0) == uniform(m, 1)) || !(marginalize(s, 1) == uniform(m, 1)))
                rep.fail("shift distribution lacks uniform vertex marginals");
        }
    }
    return rep;
}

std::vector<std::vector<DeterministicMap>> det_collection_maps(const DetCollection& c,
                                                               ScenarioPtr line_scenario) {
    CollectionReport rep = validate_det_collection(c);
    if (!rep.ok) {
        std::string msg = "det_collection_maps: invalid collection:";
        for (const std::string& f : rep.failures) msg += "\n  " + f;
        throw std::invalid_argument(msg);
    }
    if (!line_scenario) line_scenario = std::make_shared<Scenario>(build_line(3));
    std::vector<std::vector<DeterministicMap>> maps;
    for (int i = 0; i < c.m; ++i) {
        std::vector<DeterministicMap> row;
        for (int j = 0; j < c.m; ++j) {
            const auto s2 = times(c.A, i, j, c.m);
            const auto s3 = times(c.B, i, j, c.m);
            row.emplace_back(line_scenario, c.m,
                             std::vector<int>{mod(c.sigma1[i][j][0], c.m),
                                              mod(c.sigma1[i][j][1], c.m), s2[1], s3[1]});
        }
        maps.push_back(std::move(row));
    }
    return maps;
}

std::vector<SDist> avg_collection_sdists(const AvgCollection& c, ScenarioPtr line_scenario) {
    CollectionReport rep = validate_avg_collection(c);
    if (!rep.ok) {
        std::string msg = "avg_collection_sdists: invalid collection:";
        for (const std::string& f : rep.failures) msg += "\n  " + f;
        throw std::invalid_argument(msg);
    }
    if (!line_scenario) line_scenario = std::make_shared<Scenario>(build_line(2));
    std::vector<SDist> out;
    for (int j = 0; j < c.m; ++j) {
        out.emplace_back(line_scenario, c.m,
                         std::vector<Dist>{average_power(c.m, mod(c.exponents[j][0], c.m)),
                                           average_power(c.m, mod(c.exponents[j][1], c.m))});
    }
    return out;
}

DeterministicMap psi_map(ScenarioPtr x, const LineSpec& line, int m, int h,
                         const std::map<std::string, int>& extension) {
    require_line(*x, line);
    for (int bit : line.orientation) {
        if (bit != 0)
            throw std::invalid_argument("psi_map: the line must be in standard orientation");
    }
    const size_t edges = line.edges.size();
    if (edges != 2 && edges != 3)
        throw std::invalid_argument("psi_map: need a two- or three-edge line");

    std::vector<int> forced =
        edges == 3 ? std::vector<int>{0, 0, 1, mod(h, m)} : std::vector<int>{0, 0, 1};
    const std::vector<int> path = line_vertex_path(*x, line);

    std::vector<int> labels(x->vertex_list().size(), -1);
    for (size_t k = 0; k < path.size(); ++k) {
        int& slot = labels[x->vertex_position(path[k])];
        if (slot >= 0 && slot != forced[k])
            throw std::invalid_argument("psi_map: the line revisits a vertex inconsistently");
        slot = forced[k];
    }
    for (const auto& [id, value] : extension) {
        const int idx = x->index_of(id);
        if (idx < 0 || x->vertex_position(idx) < 0)
            throw std::invalid_argument("psi_map: extension names unknown vertex '" + id + "'");
        int& slot = labels[x->vertex_position(idx)];
        if (slot >= 0 && slot != mod(value, m))
            throw std::invalid_argument("psi_map: extension conflicts with the forced label of '" +
                                        id + "'");
        slot = mod(value, m);
    }
    for (size_t k = 0; k < labels.size(); ++k) {
        if (labels[k] < 0)
            throw std::invalid_argument("psi_map: vertex '" +
                                        x->simplex(x->vertex_list()[k]).id + "' is unlabeled");
    }
    return DeterministicMap(std::move(x), m, std::move(labels));
}

namespace {

// Shared tail of both constructions: assemble the suspension point
// (<1/m, p^j>_j ; <1/m, psi.p^j>_j) and certify it.
void assemble_and_certify(FactoryReport& rep, const std::vector<SDist>& p,
                          const DeterministicMap& psi, const Suspension& susp,
                          std::uint64_t cap) {
    const int m = static_cast<int>(p.size());
    SuspensionPoint sp;
    for (int j = 0; j < m; ++j) sp.up.parts.emplace_back(Rat(1, m), p[j]);
    for (int j = 0; j < m; ++j) sp.down.parts.emplace_back(Rat(1, m), act(psi, p[j]));

    SDist result = suspension_assemble(sp, susp);
    rep.vertex = is_vertex(result);
    rep.contextual = !is_noncontextual(result, cap).noncontextual;
    rep.suspension_lp_contextual = !suspension_noncontextuality_lp(sp, susp, cap).noncontextual;
    rep.result = std::move(result);
    rep.accepted = rep.vertex.vertex && rep.contextual && rep.suspension_lp_contextual;
    if (!rep.vertex.vertex) rep.failures.push_back("certification: rank test failed");
    if (!rep.contextual) rep.failures.push_back("certification: distribution is noncontextual");
    if (!rep.suspension_lp_contextual)
        rep.failures.push_back("certification: suspension LP reports noncontextual");
}

std::optional<Outcome> delta_tuple(const Dist& d) {
    if (d.support().size() != 1) return std::nullopt;
    return d.support().begin()->first;
}

}  // namespace

FactoryReport build_suspension_vertex_det(ScenarioPtr x, const LineSpec& line,
                                          const std::vector<std::vector<SDist>>& q,
                                          const DeterministicMap& psi, std::uint64_t cap) {
    FactoryReport rep;
    require_line(*x, line);
    if (line.edges.size() != 3) {
        rep.failures.push_back("hypothesis: the line must have three edges");
        return rep;
    }
    if (!is_connected(*x)) {
        rep.failures.push_back("hypothesis: the scenario must be connected");
        return rep;
    }
    const int m = psi.modulus();
    if (psi.scenario()->size() != x->size() || psi.scenario()->name() != x->name()) {
        rep.failures.push_back("hypothesis: psi must be a labeling of the given scenario");
        return rep;
    }
    if (static_cast<int>(q.size()) != m) {
        rep.failures.push_back("hypothesis: need m rows of vertices");
        return rep;
    }
    for (const auto& row : q) {
        if (static_cast<int>(row.size()) != m) {
            rep.failures.push_back("hypothesis: need m columns of vertices");
            return rep;
        }
        for (const SDist& v : row) {
            if (v.modulus() != m || !validate_sdist(v).ok) {
                rep.failures.push_back("hypothesis: inputs must be valid distributions");
                return rep;
            }
        }
    }

    // psi restricts to psi^h on the line.
    const int e1 = x->index_of(line.edges[0]);
    const int e2 = x->index_of(line.edges[1]);
    const int e3 = x->index_of(line.edges[2]);
    const Outcome t1 = psi.tuple_on(e1), t2 = psi.tuple_on(e2), t3 = psi.tuple_on(e3);
    if (t1 != Outcome{0, 0} || t2 != Outcome{0, 1} || t3[0] != 1) {
        rep.failures.push_back("hypothesis: psi does not restrict to psi^h on the line");
        return rep;
    }
    const int h = t3[1];

    // Line restrictions are deterministic and assemble into a complete
    // collection bound to h.
    DetCollection coll;
    coll.m = m;
    coll.h = h;
    coll.sigma1.assign(m, std::vector<std::array<int, 2>>(m, {0, 0}));
    std::vector<std::vector<std::array<int, 2>>> s2(m, std::vector<std::array<int, 2>>(m)),
        s3(m, std::vector<std::array<int, 2>>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const std::vector<Dist> dists = all_simplex_dists(q[i][j]);
            auto d1 = delta_tuple(dists[e1]);
            auto d2 = delta_tuple(dists[e2]);
            auto d3 = delta_tuple(dists[e3]);
            if (!d1 || !d2 || !d3) {
                rep.failures.push_back("hypothesis: restriction of q^{" + std::to_string(i) + "," +
                                       std::to_string(j) + "} to the line is not deterministic");
                return rep;
            }
            coll.sigma1[i][j] = {(*d1)[0], (*d1)[1]};
            s2[i][j] = {(*d2)[0], (*d2)[1]};
            s3[i][j] = {(*d3)[0], (*d3)[1]};
        }
    }
    // Recover A and B from the (1,0) and (0,1) columns, then insist on the
    // exact linear form everywhere.
    coll.A = {{{s2[1 % m][0][0], s2[0][1 % m][0]}, {s2[1 % m][0][1], s2[0][1 % m][1]}}};
    coll.B = {{{s3[1 % m][0][0], s3[0][1 % m][0]}, {s3[1 % m][0][1], s3[0][1 % m][1]}}};
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (s2[i][j] != times(coll.A, i, j, m) || s3[i][j] != times(coll.B, i, j, m)) {
                rep.failures.push_back(
                    "hypothesis: line restrictions do not follow the matrix form (i,j)A^T, "
                    "(i,j)B^T");
                return rep;
            }
        }
    }
    CollectionReport coll_rep = validate_det_collection(coll);
    if (!coll_rep.ok) {
        for (const std::string& f : coll_rep.failures)
            rep.failures.push_back("hypothesis (collection): " + f);
        return rep;
    }

    // Closed columns {q^{i,j} : i} for every j.
    for (int j = 0; j < m; ++j) {
        std::vector<SDist> column;
        for (int i = 0; i < m; ++i) column.push_back(q[i][j]);
        bool closed = false;
        try {
            closed = is_closed_vertex_set(column);
        } catch (const std::invalid_argument&) {
            rep.failures.push_back("hypothesis: column " + std::to_string(j) +
                                   " contains a non-vertex");
            return rep;
        }
        if (!closed) {
            rep.failures.push_back("hypothesis: {q^{i," + std::to_string(j) +
                                   "}} is not a closed set of vertices");
            return rep;
        }
    }

    // psi-invariance of the grand mixture.
    std::vector<std::pair<Rat, SDist>> grand_terms;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) grand_terms.emplace_back(Rat(1, m * m), q[i][j]);
    SDist grand = mix_sdist(grand_terms);
    if (!(act(psi, grand) == grand)) {
        rep.failures.push_back("hypothesis: the grand mixture is not psi-invariant");
        return rep;
    }

    std::vector<SDist> p;
    for (int j = 0; j < m; ++j) {
        std::vector<std::pair<Rat, SDist>> terms;
        for (int i = 0; i < m; ++i) terms.emplace_back(Rat(1, m), q[i][j]);
        p.push_back(mix_sdist(terms));
    }
    assemble_and_certify(rep, p, psi, suspension(*x), cap);
    return rep;
}

FactoryReport build_suspension_vertex_avg(ScenarioPtr x, const LineSpec& line,
                                          const std::vector<SDist>& p,
                                          const DeterministicMap& psi, std::uint64_t cap) {
    FactoryReport rep;
    require_line(*x, line);
    if (line.edges.size() != 2) {
        rep.failures.push_back("hypothesis: the line must have two edges");
        return rep;
    }
    if (!is_connected(*x)) {
        rep.failures.push_back("hypothesis: the scenario must be connected");
        return rep;
    }
    const int m = psi.modulus();
    if (psi.scenario()->size() != x->size() || psi.scenario()->name() != x->name()) {
        rep.failures.push_back("hypothesis: psi must be a labeling of the given scenario");
        return rep;
    }
    if (static_cast<int>(p.size()) != m) {
        rep.failures.push_back("hypothesis: need m vertices");
        return rep;
    }
    for (const SDist& v : p) {
        if (v.modulus() != m || !validate_sdist(v).ok) {
            rep.failures.push_back("hypothesis: inputs must be valid distributions");
            return rep;
        }
    }

    const int e1 = x->index_of(line.edges[0]);
    const int e2 = x->index_of(line.edges[1]);
    if (psi.tuple_on(e1) != Outcome{0, 0} || psi.tuple_on(e2) != Outcome{0, 1}) {
        rep.failures.push_back("hypothesis: psi must be (0,0) on s1 and (0,1) on s2");
        return rep;
    }

    // Restrictions form a complete collection of average distributions.
    AvgCollection coll;
    coll.m = m;
    coll.exponents.assign(m, {0, 0});
    for (int j = 0; j < m; ++j) {
        const std::vector<Dist> dists = all_simplex_dists(p[j]);
        for (int k = 0; k < 2; ++k) {
            const Dist& d = dists[k == 0 ? e1 : e2];
            int found = -1;
            for (int e = 0; e < m; ++e) {
                if (d == average_power(m, e)) {
                    found = e;
                    break;
                }
            }
            if (found < 0) {
                rep.failures.push_back("hypothesis: restriction of p^" + std::to_string(j) +
                                       " to edge " + line.edges[k] +
                                       " is not a shift distribution");
                return rep;
            }
            coll.exponents[j][k] = found;
        }
    }
    CollectionReport coll_rep = validate_avg_collection(coll);
    if (!coll_rep.ok) {
        for (const std::string& f : coll_rep.failures)
            rep.failures.push_back("hypothesis (collection): " + f);
        return rep;
    }

    for (int j = 0; j < m; ++j) {
        if (!is_vertex(p[j]).vertex) {
            rep.failures.push_back("hypothesis: p^" + std::to_string(j) + " is not a vertex");
            return rep;
        }
    }

    std::vector<std::pair<Rat, SDist>> terms;
    for (int j = 0; j < m; ++j) terms.emplace_back(Rat(1, m), p[j]);
    SDist mixture = mix_sdist(terms);
    if (!(act(psi, mixture) == mixture)) {
        rep.failures.push_back("hypothesis: the mixture is not psi-invariant");
        return rep;
    }

    assemble_and_certify(rep, p, psi, suspension(*x), cap);
    return rep;
}

UniquenessReport mixture_uniqueness_solve(const std::vector<SDist>& left,
                                          const std::vector<SDist>& right) {
    if (left.empty() || left.size() != right.size())
        throw std::invalid_argument("mixture_uniqueness_solve: family size mismatch");
    const int n = static_cast<int>(left.size());
    CoordSpace coords(left.front().scenario(), left.front().modulus());
    std::vector<RatVec> lvec, rvec;
    for (int i = 0; i < n; ++i) {
        lvec.push_back(coords.to_vector(left[i]));
        rvec.push_back(coords.to_vector(right[i]));
    }

    // Variables (lambda_0..lambda_{n-1}, mu_0..mu_{n-1}).
    RatMat a;
    RatVec b;
    for (int c = 0; c < coords.ncols(); ++c) {
        RatVec row(2 * n, Rat(0));
        for (int i = 0; i < n; ++i) {
            row[i] = lvec[i][c];
            row[n + i] = -rvec[i][c];
        }
        a.push_back(std::move(row));
        b.push_back(Rat(0));
    }
    {
        RatVec row(2 * n, Rat(0));
        for (int i = 0; i < n; ++i) row[i] = 1;
        a.push_back(std::move(row));
        b.push_back(Rat(1));
        RatVec row2(2 * n, Rat(0));
        for (int i = 0; i < n; ++i) row2[n + i] = 1;
        a.push_back(std::move(row2));
        b.push_back(Rat(1));
    }

    UniquenessReport rep;
    rep.nullspace_dim = static_cast<int>(nullspace(a).size());
    rep.unique = rep.nullspace_dim == 0;
    auto sol = solve_linear(a, b);
    if (sol) {
        rep.lambda.assign(sol->begin(), sol->begin() + n);
        rep.mu.assign(sol->begin() + n, sol->end());
        rep.uniform = true;
        const Rat u(1, n);
        for (const Rat& v : *sol) rep.uniform = rep.uniform && v == u;
        rep.uniform = rep.uniform && rep.unique;
    }
    return rep;
}

UniquenessReport collection_uniqueness_solve(const DetCollection& c) {
    auto maps = det_collection_maps(c);
    auto line = maps[0][0].scenario();
    DeterministicMap psi_h(line, c.m, {0, 0, 1, mod(c.h, c.m)});
    std::vector<SDist> left, right;
    for (int i = 0; i < c.m; ++i) {
        for (int j = 0; j < c.m; ++j) {
            left.push_back(deterministic_sdist(maps[i][j]));
            right.push_back(act(psi_h, left.back()));
        }
    }
    return mixture_uniqueness_solve(left, right);
}

UniquenessReport collection_uniqueness_solve(const AvgCollection& c) {
    std::vector<SDist> left = avg_collection_sdists(c);
    auto line = left.front().scenario();
    DeterministicMap psi(line, c.m, {0, 0, 1});
    std::vector<SDist> right;
    for (const SDist& q : left) right.push_back(act(psi, q));
    return mixture_uniqueness_solve(left, right);
}

}  // namespace sctx
