#include "sctx/cone_suspension.hpp"

#include <algorithm>
#include <stdexcept>

namespace sctx {

namespace {

void require_space(const SDist& p, const Scenario& expected, const char* op) {
    if (p.scenario()->name() != expected.name() || p.scenario()->size() != expected.size())
        throw std::invalid_argument(std::string(op) + ": distribution lives on '" +
                                    p.scenario()->name() + "', expected '" + expected.name() +
                                    "'");
}

// The restriction of a suspension distribution to one cone copy; generator
// ids of the cone sub-scenario match the suspension's.
SDist cone_restriction(const SDist& p, const Cone& c) {
    auto cone_scenario = std::make_shared<Scenario>(c.space);
    std::vector<Dist> dists;
    dists.reserve(cone_scenario->generators().size());
    for (int g : cone_scenario->generators())
        dists.push_back(p.on_generator_id(cone_scenario->simplex(g).id));
    return SDist(cone_scenario, p.modulus(), std::move(dists));
}

}  // namespace

bool JoinPoint::is_valid() const {
    if (parts.empty()) return false;
    Rat total(0);
    for (const auto& [lambda, comp] : parts) {
        if (lambda < 0 || lambda > 1) return false;
        if ((lambda == 0) != !comp.has_value()) return false;
        total += lambda;
    }
    return total == 1;
}

JoinPoint cone_decompose(const SDist& p, const Cone& c) {
    require_space(p, c.space, "cone_decompose");
    if (!is_connected(c.base))
        throw std::invalid_argument("cone_decompose: the base scenario must be connected");
    require_valid(p);
    const int m = p.modulus();

    const auto& base_gens = c.base.generators();
    // lambda_j from each cone generator; agreement is a consequence of face
    // compatibility, asserted here.
    std::vector<RatVec> lambda_by_gen;
    for (int g : base_gens) {
        const Dist& lifted = p.on_generator_id(c.lifted(c.base.simplex(g).id));
        RatVec lambda(m, Rat(0));
        for (const auto& [y, w] : lifted.support()) lambda[y[0]] += w;
        lambda_by_gen.push_back(std::move(lambda));
    }
    for (size_t k = 1; k < lambda_by_gen.size(); ++k) {
        if (lambda_by_gen[k] != lambda_by_gen[0])
            throw std::logic_error("cone_decompose: lambda_j differs across cone generators");
    }

    JoinPoint out;
    auto base_ptr = std::make_shared<Scenario>(c.base);
    for (int j = 0; j < m; ++j) {
        const Rat& lambda = lambda_by_gen[0][j];
        if (lambda == 0) {
            out.parts.emplace_back(Rat(0), std::nullopt);
            continue;
        }
        std::vector<Dist> dists;
        dists.reserve(base_gens.size());
        for (int g : base_gens) {
            const Dist& lifted = p.on_generator_id(c.lifted(c.base.simplex(g).id));
            Dist d(m, c.base.simplex(g).dim + 1);
            for (const auto& [y, w] : lifted.support()) {
                if (y[0] != j) continue;
                d.add(Outcome(y.begin() + 1, y.end()), w / lambda);
            }
            dists.push_back(std::move(d));
        }
        out.parts.emplace_back(lambda, SDist(base_ptr, m, std::move(dists)));
    }
    return out;
}

SDist cone_assemble(const JoinPoint& parts, const Cone& c) {
    if (!parts.is_valid())
        throw std::invalid_argument("cone_assemble: join point violates its invariants");
    const int m = parts.modulus();
    for (const auto& [lambda, comp] : parts.parts) {
        if (!comp) continue;
        require_space(*comp, c.base, "cone_assemble");
        if (comp->modulus() != m)
            throw std::invalid_argument("cone_assemble: component modulus mismatch");
        require_valid(*comp);
    }

    auto cone_ptr = std::make_shared<Scenario>(c.space);
    std::map<std::string, std::string> base_of;  // lifted id -> base id
    for (const auto& [base_id, lifted_id] : c.lift) base_of[lifted_id] = base_id;

    std::vector<Dist> dists;
    dists.reserve(cone_ptr->generators().size());
    for (int g : cone_ptr->generators()) {
        const std::string& base_id = base_of.at(cone_ptr->simplex(g).id);
        Dist d(m, cone_ptr->simplex(g).dim + 1);
        for (int j = 0; j < m; ++j) {
            const auto& [lambda, comp] = parts.parts[j];
            if (!comp) continue;
            for (const auto& [y, w] : comp->on_generator_id(base_id).support()) {
                Outcome full;
                full.reserve(y.size() + 1);
                full.push_back(j);
                full.insert(full.end(), y.begin(), y.end());
                d.add(std::move(full), lambda * w);
            }
        }
        dists.push_back(std::move(d));
    }
    SDist out(cone_ptr, m, std::move(dists));
    require_valid(out);
    return out;
}

namespace {

// The glued mixture sum_j lambda_j p^(j) of a join point, on the base.
SDist join_mixture(const JoinPoint& jp) {
    std::vector<std::pair<Rat, SDist>> terms;
    for (const auto& [lambda, comp] : jp.parts) {
        if (comp) terms.emplace_back(lambda, *comp);
    }
    return mix_sdist(terms);
}

}  // namespace

SuspensionPoint suspension_decompose(const SDist& p, const Suspension& s) {
    require_space(p, s.space, "suspension_decompose");
    require_valid(p);
    SuspensionPoint sp;
    sp.up = cone_decompose(cone_restriction(p, s.up), s.up);
    sp.down = cone_decompose(cone_restriction(p, s.down), s.down);
    if (!(join_mixture(sp.up) == join_mixture(sp.down)))
        throw std::logic_error("suspension_decompose: glued mixtures disagree on the base");
    return sp;
}

SDist suspension_assemble(const SuspensionPoint& sp, const Suspension& s) {
    if (!sp.up.is_valid() || !sp.down.is_valid())
        throw std::invalid_argument("suspension_assemble: join point violates its invariants");
    SDist up = cone_assemble(sp.up, s.up);
    SDist down = cone_assemble(sp.down, s.down);
    if (!(join_mixture(sp.up) == join_mixture(sp.down)))
        throw std::invalid_argument(
            "suspension_assemble: gluing violated, the up and down mixtures differ on the base");

    auto total = std::make_shared<Scenario>(s.space);
    std::vector<Dist> dists;
    dists.reserve(total->generators().size());
    for (int g : total->generators()) {
        const std::string& id = total->simplex(g).id;
        if (s.up.space.contains(id))
            dists.push_back(up.on_generator_id(id));
        else
            dists.push_back(down.on_generator_id(id));
    }
    SDist out(total, up.modulus(), std::move(dists));
    require_valid(out);
    return out;
}

SuspensionLpVerdict suspension_noncontextuality_lp(const SuspensionPoint& sp, const Suspension& s,
                                                   std::uint64_t cap) {
    if (!sp.up.is_valid() || !sp.down.is_valid())
        throw std::invalid_argument("suspension_noncontextuality_lp: invalid suspension point");
    const int m = sp.up.modulus();
    auto base_ptr = std::make_shared<Scenario>(s.base);
    const std::vector<DeterministicMap> maps = enumerate_deterministic(base_ptr, m, cap);
    const int nmaps = static_cast<int>(maps.size());
    CoordSpace coords(base_ptr, m);

    // Variable blocks: one mixture per side per j with nonzero weight.
    struct Block {
        bool up;
        int j;
        int offset;
    };
    std::vector<Block> blocks;
    int nvars = 0;
    for (int j = 0; j < m; ++j) {
        if (sp.up.parts[j].second) {
            blocks.push_back({true, j, nvars});
            nvars += nmaps;
        }
    }
    for (int j = 0; j < m; ++j) {
        if (sp.down.parts[j].second) {
            blocks.push_back({false, j, nvars});
            nvars += nmaps;
        }
    }

    // Rows: per block, theta matching on every coordinate plus
    // normalization; then the mixture equality per labeling.
    const int theta_rows = coords.ncols() + 1;
    const int rows = static_cast<int>(blocks.size()) * theta_rows + nmaps;
    RatMat a(rows, RatVec(nvars, Rat(0)));
    RatVec b(rows, Rat(0));

    const auto& gens = s.base.generators();
    int row0 = 0;
    for (const Block& blk : blocks) {
        const SDist& target =
            blk.up ? *sp.up.parts[blk.j].second : *sp.down.parts[blk.j].second;
        RatVec t = coords.to_vector(target);
        for (int c = 0; c < coords.ncols(); ++c) b[row0 + c] = t[c];
        b[row0 + coords.ncols()] = 1;
        for (int phi = 0; phi < nmaps; ++phi) {
            for (size_t k = 0; k < gens.size(); ++k) {
                const int c = coords.col(static_cast<int>(k), maps[phi].tuple_on(gens[k]));
                a[row0 + c][blk.offset + phi] = 1;
            }
            a[row0 + coords.ncols()][blk.offset + phi] = 1;
        }
        row0 += theta_rows;
    }
    for (const Block& blk : blocks) {
        const Rat& weight =
            blk.up ? sp.up.parts[blk.j].first : sp.down.parts[blk.j].first;
        const Rat signed_weight = blk.up ? weight : -weight;
        for (int phi = 0; phi < nmaps; ++phi) a[row0 + phi][blk.offset + phi] = signed_weight;
    }

    NonnegLpResult lp = solve_nonneg(a, b);
    SuspensionLpVerdict verdict;
    verdict.up_witness.resize(m);
    verdict.down_witness.resize(m);
    if (!lp.feasible) {
        verdict.noncontextual = false;
        return verdict;
    }
    verdict.noncontextual = true;
    for (const Block& blk : blocks) {
        DetMixture q{base_ptr, m, {}};
        for (int phi = 0; phi < nmaps; ++phi) {
            const Rat& w = lp.x[blk.offset + phi];
            if (w != 0) q.weights[maps[phi].labels()] = w;
        }
        const SDist& target =
            blk.up ? *sp.up.parts[blk.j].second : *sp.down.parts[blk.j].second;
        if (!(theta(q) == target))
            throw std::logic_error("suspension_noncontextuality_lp: witness mismatch");
        (blk.up ? verdict.up_witness : verdict.down_witness)[blk.j] = std::move(q);
    }
    return verdict;
}

}  // namespace sctx
