#include "sctx/polytope.hpp"

#include "sctx/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sctx {

namespace {

std::vector<Outcome> all_outcomes(int m, int arity) {
    std::vector<Outcome> out;
    Outcome y(arity, 0);
    while (true) {
        out.push_back(y);
        int i = arity - 1;
        while (i >= 0 && ++y[i] == m) y[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

int outcome_rank(const Outcome& y, int m) {
    int r = 0;
    for (int a : y) r = r * m + a;
    return r;
}

}  // namespace

CoordSpace::CoordSpace(ScenarioPtr scenario, int m) : scenario_(std::move(scenario)), m_(m) {
    require_valid(*scenario_);
    if (m_ < 2) throw std::invalid_argument("CoordSpace: modulus must be >= 2");
    const auto& gens = scenario_->generators();
    ncols_ = 0;
    offset_.reserve(gens.size());
    outcomes_.reserve(gens.size());
    for (int g : gens) {
        offset_.push_back(ncols_);
        outcomes_.push_back(all_outcomes(m_, scenario_->simplex(g).dim + 1));
        ncols_ += static_cast<int>(outcomes_.back().size());
    }
}

int CoordSpace::col(int generator_position, const Outcome& y) const {
    return offset_[generator_position] + outcome_rank(y, m_);
}

std::pair<int, Outcome> CoordSpace::coord(int col) const {
    for (int k = static_cast<int>(offset_.size()) - 1; k >= 0; --k) {
        if (col >= offset_[k]) return {k, outcomes_[k][col - offset_[k]]};
    }
    throw std::out_of_range("CoordSpace::coord");
}

RatVec CoordSpace::to_vector(const SDist& p) const {
    if (p.modulus() != m_ || p.scenario()->size() != scenario_->size())
        throw std::invalid_argument("CoordSpace::to_vector: incompatible distribution");
    RatVec x(ncols_, Rat(0));
    for (size_t k = 0; k < p.generator_dists().size(); ++k) {
        for (const auto& [y, w] : p.generator_dists()[k].support())
            x[col(static_cast<int>(k), y)] = w;
    }
    return x;
}

SDist CoordSpace::to_sdist(const RatVec& x) const {
    if (static_cast<int>(x.size()) != ncols_)
        throw std::invalid_argument("CoordSpace::to_sdist: wrong length");
    const auto& gens = scenario_->generators();
    std::vector<Dist> dists;
    dists.reserve(gens.size());
    for (size_t k = 0; k < gens.size(); ++k) {
        Dist d(m_, scenario_->simplex(gens[k]).dim + 1);
        for (size_t r = 0; r < outcomes_[k].size(); ++r) {
            const Rat& w = x[offset_[k] + static_cast<int>(r)];
            if (w != 0) d.add(outcomes_[k][r], w);
        }
        dists.push_back(std::move(d));
    }
    return SDist(scenario_, m_, std::move(dists));
}

HRep build_hrep(const CoordSpace& coords) {
    const Scenario& s = *coords.scenario();
    const int n = coords.ncols();
    const int m = coords.modulus();
    HRep h;

    // Per-generator normalization.
    const auto& gens = s.generators();
    for (size_t k = 0; k < gens.size(); ++k) {
        RatVec row(n, Rat(0));
        for (const Outcome& y : coords.outcomes_of(static_cast<int>(k)))
            row[coords.col(static_cast<int>(k), y)] = 1;
        h.eq_a.push_back(std::move(row));
        h.eq_b.push_back(Rat(1));
    }

    // Face compatibility: give every simplex a symbolic expression (one
    // affine row per outcome) induced from one canonical parent; every
    // further parent contributes equality rows against it.
    std::vector<std::vector<RatVec>> expr(s.size());
    std::vector<int> gen_pos(s.size(), -1);
    for (size_t k = 0; k < gens.size(); ++k) gen_pos[gens[k]] = static_cast<int>(k);

    std::vector<int> order(s.size());
    for (int i = 0; i < s.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&s](int a, int b) { return s.simplex(a).dim > s.simplex(b).dim; });

    for (int i : order) {
        if (gen_pos[i] >= 0) {
            const int k = gen_pos[i];
            const auto& outs = coords.outcomes_of(k);
            expr[i].assign(outs.size(), RatVec(n, Rat(0)));
            for (size_t r = 0; r < outs.size(); ++r) expr[i][r][coords.col(k, outs[r])] = 1;
        }
        if (expr[i].empty()) continue;
        const int dim = s.simplex(i).dim;
        if (dim == 0) continue;
        const auto& outs = all_outcomes(m, dim + 1);
        for (int fi = 0; fi <= dim; ++fi) {
            // Marginalize the symbolic rows along face fi.
            std::vector<RatVec> marg(outs.size() / m, RatVec(n, Rat(0)));
            for (size_t r = 0; r < outs.size(); ++r) {
                Outcome z;
                z.reserve(dim);
                for (int t = 0; t <= dim; ++t)
                    if (t != fi) z.push_back(outs[r][t]);
                RatVec& dst = marg[outcome_rank(z, m)];
                for (int c = 0; c < n; ++c)
                    if (expr[i][r][c] != 0) dst[c] += expr[i][r][c];
            }
            const int f = s.face(i, fi);
            if (expr[f].empty()) {
                expr[f] = std::move(marg);
            } else {
                for (size_t r = 0; r < marg.size(); ++r) {
                    RatVec row(n, Rat(0));
                    bool nonzero = false;
                    for (int c = 0; c < n; ++c) {
                        row[c] = marg[r][c] - expr[f][r][c];
                        nonzero = nonzero || row[c] != 0;
                    }
                    if (nonzero) {
                        h.eq_a.push_back(std::move(row));
                        h.eq_b.push_back(Rat(0));
                    }
                }
            }
        }
    }

    // Nonnegativity, one row per coordinate: -x_c <= 0.
    for (int c = 0; c < n; ++c) {
        RatVec row(n, Rat(0));
        row[c] = -1;
        h.ineq_a.push_back(std::move(row));
        h.ineq_b.push_back(Rat(0));
    }
    return h;
}

VertexCertificate is_vertex(const SDist& p) {
    require_valid(p);
    CoordSpace coords(p.scenario(), p.modulus());
    HRep h = build_hrep(coords);
    RatVec x = coords.to_vector(p);

    RatMat rows = h.eq_a;
    for (int c = 0; c < coords.ncols(); ++c) {
        if (x[c] == 0) {
            RatVec row(coords.ncols(), Rat(0));
            row[c] = 1;
            rows.push_back(std::move(row));
        }
    }
    VertexCertificate cert;
    cert.ncoords = coords.ncols();
    cert.active_rank = rank(std::move(rows));
    cert.vertex = cert.active_rank == cert.ncoords;
    return cert;
}

NoncontextualityCertificate is_noncontextual(const SDist& p, std::uint64_t cap) {
    require_valid(p);
    CoordSpace coords(p.scenario(), p.modulus());
    std::vector<DeterministicMap> maps = enumerate_deterministic(p.scenario(), p.modulus(), cap);

    const int rows = coords.ncols() + 1;
    const int cols = static_cast<int>(maps.size());
    RatMat a(rows, RatVec(cols, Rat(0)));
    for (int j = 0; j < cols; ++j) {
        const auto& gens = p.scenario()->generators();
        for (size_t k = 0; k < gens.size(); ++k)
            a[coords.col(static_cast<int>(k), maps[j].tuple_on(gens[k]))][j] = 1;
        a[rows - 1][j] = 1;
    }
    RatVec b = coords.to_vector(p);
    b.push_back(Rat(1));

    NonnegLpResult lp = solve_nonneg(a, b);
    NoncontextualityCertificate cert;
    if (lp.feasible) {
        cert.noncontextual = true;
        cert.witness.scenario = p.scenario();
        cert.witness.m = p.modulus();
        for (int j = 0; j < cols; ++j)
            if (lp.x[j] != 0) cert.witness.weights[maps[j].labels()] = lp.x[j];
        if (!(theta(cert.witness) == p))
            throw std::logic_error("is_noncontextual: witness does not reproduce p");
    } else {
        cert.noncontextual = false;
        cert.separating.assign(lp.farkas_y.begin(), lp.farkas_y.end() - 1);
        cert.separating_const = lp.farkas_y.back();
    }
    return cert;
}

namespace {

// Extreme rays of {y : rows . y >= 0} (a pointed cone) by double
// description with combinatorial adjacency.  Rays are canonically scaled so
// the first nonzero entry is +-1.
struct Ray {
    RatVec v;
    std::vector<char> active;  // per processed row: row . v == 0
};

void canonicalize(RatVec& v) {
    for (const Rat& e : v) {
        if (e != 0) {
            const Rat scale = abs(e);
            for (Rat& f : v) f /= scale;
            return;
        }
    }
}

std::vector<RatVec> extreme_rays(const RatMat& rows, int dim) {
    // Greedy full-rank initial subset.
    std::vector<int> init;
    {
        RatMat sel;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            sel.push_back(rows[i]);
            if (rank(sel) == static_cast<int>(sel.size())) {
                init.push_back(i);
                if (static_cast<int>(init.size()) == dim) break;
            } else {
                sel.pop_back();
            }
        }
        if (static_cast<int>(init.size()) != dim)
            throw std::logic_error("extreme_rays: cone is not pointed");
    }

    // Initial simplicial cone: rays are the columns of the inverse of the
    // selected rows, i.e. solve sel . R = I.
    std::vector<Ray> rays;
    {
        RatMat sel;
        for (int i : init) sel.push_back(rows[i]);
        for (int j = 0; j < dim; ++j) {
            RatVec e(dim, Rat(0));
            e[j] = 1;
            auto r = solve_linear(sel, e);
            if (!r) throw std::logic_error("extreme_rays: singular initial basis");
            canonicalize(*r);
            rays.push_back({std::move(*r), {}});
        }
    }

    std::vector<char> used(rows.size(), 0);
    for (int i : init) used[i] = 1;
    std::vector<int> processed = init;

    auto dot = [](const RatVec& a, const RatVec& b) {
        Rat d(0);
        for (size_t k = 0; k < a.size(); ++k)
            if (a[k] != 0 && b[k] != 0) d += a[k] * b[k];
        return d;
    };

    // Activity flags for the initial rows.
    for (Ray& r : rays) {
        r.active.reserve(rows.size());
        for (int i : processed) r.active.push_back(dot(rows[i], r.v) == 0);
    }

    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        if (used[i]) continue;
        std::vector<Rat> val(rays.size());
        for (size_t k = 0; k < rays.size(); ++k) val[k] = dot(rows[i], rays[k].v);

        std::vector<size_t> pos, neg;
        for (size_t k = 0; k < rays.size(); ++k) {
            if (val[k] > 0) pos.push_back(k);
            if (val[k] < 0) neg.push_back(k);
        }

        std::vector<Ray> next;
        for (size_t k = 0; k < rays.size(); ++k) {
            if (val[k] >= 0) {
                Ray r = rays[k];
                r.active.push_back(val[k] == 0);
                next.push_back(std::move(r));
            }
        }
        // Combine adjacent (+,-) pairs into rays active on row i.
        for (size_t kp : pos) {
            for (size_t kn : neg) {
                std::vector<char> meet(processed.size());
                for (size_t t = 0; t < processed.size(); ++t)
                    meet[t] = rays[kp].active[t] && rays[kn].active[t];
                bool adjacent = true;
                for (size_t q = 0; q < rays.size() && adjacent; ++q) {
                    if (q == kp || q == kn) continue;
                    bool contains = true;
                    for (size_t t = 0; t < processed.size(); ++t) {
                        if (meet[t] && !rays[q].active[t]) {
                            contains = false;
                            break;
                        }
                    }
                    if (contains) adjacent = false;
                }
                if (!adjacent) continue;
                Ray combo;
                combo.v.assign(rays[kp].v.size(), Rat(0));
                for (size_t t = 0; t < combo.v.size(); ++t)
                    combo.v[t] = val[kp] * rays[kn].v[t] - val[kn] * rays[kp].v[t];
                canonicalize(combo.v);
                combo.active.resize(processed.size() + 1);
                for (size_t t = 0; t < processed.size(); ++t)
                    combo.active[t] = dot(rows[processed[t]], combo.v) == 0;
                combo.active[processed.size()] = 1;
                next.push_back(std::move(combo));
            }
        }
        rays = std::move(next);
        processed.push_back(i);
        used[i] = 1;

        std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) { return a.v < b.v; });
        rays.erase(std::unique(rays.begin(), rays.end(),
                               [](const Ray& a, const Ray& b) { return a.v == b.v; }),
                   rays.end());
    }

    std::vector<RatVec> out;
    out.reserve(rays.size());
    for (Ray& r : rays) out.push_back(std::move(r.v));
    return out;
}

// Vertices of {x : eq_a x = eq_b, x >= 0} as coordinate vectors.
std::vector<RatVec> enumerate_polytope_vertices(const RatMat& eq_a, const RatVec& eq_b, int n) {
    auto base = solve_linear(eq_a, eq_b);
    if (!base) return {};
    std::vector<RatVec> null_basis = nullspace(eq_a);
    const int d = static_cast<int>(null_basis.size());

    // Homogenized inequality rows over (z, t): N_i . z + x_p[i] t >= 0,
    // plus t >= 0.
    RatMat rows;
    for (int i = 0; i < n; ++i) {
        RatVec row(d + 1, Rat(0));
        bool nonzero = false;
        for (int k = 0; k < d; ++k) {
            row[k] = null_basis[k][i];
            nonzero = nonzero || row[k] != 0;
        }
        row[d] = (*base)[i];
        nonzero = nonzero || row[d] != 0;
        if (nonzero) rows.push_back(std::move(row));
    }
    {
        RatVec row(d + 1, Rat(0));
        row[d] = 1;
        rows.push_back(std::move(row));
    }

    std::vector<RatVec> rays = extreme_rays(rows, d + 1);
    std::vector<RatVec> verts;
    for (const RatVec& r : rays) {
        if (r[d] == 0) throw std::logic_error("enumerate_polytope_vertices: unbounded direction");
        RatVec x(n, Rat(0));
        for (int i = 0; i < n; ++i) {
            x[i] = (*base)[i];
            for (int k = 0; k < d; ++k)
                if (r[k] != 0 && null_basis[k][i] != 0) x[i] += r[k] / r[d] * null_basis[k][i];
        }
        verts.push_back(std::move(x));
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

}  // namespace

std::vector<SDist> enumerate_vertices(ScenarioPtr scenario, int m, int coord_cap) {
    CoordSpace coords(std::move(scenario), m);
    if (coords.ncols() > coord_cap)
        throw std::runtime_error("enumerate_vertices: " + std::to_string(coords.ncols()) +
                                 " coordinates exceed cap " + std::to_string(coord_cap));
    HRep h = build_hrep(coords);
    std::vector<RatVec> verts = enumerate_polytope_vertices(h.eq_a, h.eq_b, coords.ncols());
    std::vector<SDist> out;
    out.reserve(verts.size());
    for (const RatVec& x : verts) {
        SDist p = coords.to_sdist(x);
        if (!is_vertex(p).vertex)
            throw std::logic_error("enumerate_vertices: output failed the rank test");
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<SDist> vsupp(const SDist& p, int coord_cap) {
    require_valid(p);
    CoordSpace coords(p.scenario(), p.modulus());
    if (coords.ncols() > coord_cap)
        throw std::runtime_error("vsupp: " + std::to_string(coords.ncols()) +
                                 " coordinates exceed cap " + std::to_string(coord_cap));
    HRep h = build_hrep(coords);
    RatVec x = coords.to_vector(p);
    for (int c = 0; c < coords.ncols(); ++c) {
        if (x[c] == 0) {
            RatVec row(coords.ncols(), Rat(0));
            row[c] = 1;
            h.eq_a.push_back(std::move(row));
            h.eq_b.push_back(Rat(0));
        }
    }
    std::vector<RatVec> verts = enumerate_polytope_vertices(h.eq_a, h.eq_b, coords.ncols());
    std::vector<SDist> out;
    out.reserve(verts.size());
    for (const RatVec& v : verts) {
        SDist q = coords.to_sdist(v);
        if (!preceq(q, p) || !is_vertex(q).vertex)
            throw std::logic_error("vsupp: output failed the support or rank check");
        out.push_back(std::move(q));
    }
    return out;
}

bool is_closed_vertex_set(const std::vector<SDist>& vs, int coord_cap) {
    if (vs.empty()) throw std::invalid_argument("is_closed_vertex_set: empty set");
    for (const SDist& q : vs) {
        if (!is_vertex(q).vertex)
            throw std::invalid_argument("is_closed_vertex_set: input is not a vertex");
    }
    std::vector<std::pair<Rat, SDist>> terms;
    const Rat w(1, static_cast<int>(vs.size()));
    for (const SDist& q : vs) terms.emplace_back(w, q);
    std::vector<SDist> support = vsupp(mix_sdist(terms), coord_cap);
    std::sort(support.begin(), support.end());

    std::vector<SDist> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return support == sorted;
}

}  // namespace sctx
