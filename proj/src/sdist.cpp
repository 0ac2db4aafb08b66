#include "sctx/sdist.hpp"

#include <algorithm>
#include <stdexcept>

namespace sctx {

namespace {

void require_compatible(const SDist& p, const SDist& q, const char* op) {
    if (p.modulus() != q.modulus())
        throw std::invalid_argument(std::string(op) + ": modulus mismatch");
    if (p.scenario()->name() != q.scenario()->name() ||
        p.scenario()->size() != q.scenario()->size())
        throw std::invalid_argument(std::string(op) + ": scenario mismatch");
}

}  // namespace

SDist::SDist(ScenarioPtr scenario, int m, std::vector<Dist> generator_dists)
    : scenario_(std::move(scenario)), m_(m), dists_(std::move(generator_dists)) {
    if (m_ < 2) throw std::invalid_argument("SDist: modulus must be >= 2");
    const auto& gens = scenario_->generators();
    if (dists_.size() != gens.size())
        throw std::invalid_argument("SDist: expected one distribution per generator");
    for (size_t k = 0; k < gens.size(); ++k) {
        const Simplex& g = scenario_->simplex(gens[k]);
        if (dists_[k].modulus() != m_)
            throw std::invalid_argument("SDist: modulus mismatch on generator '" + g.id + "'");
        if (dists_[k].arity() != g.dim + 1)
            throw std::invalid_argument("SDist: arity mismatch on generator '" + g.id + "'");
    }
}

const Dist& SDist::on_generator_id(const std::string& id) const {
    const auto& gens = scenario_->generators();
    const int idx = scenario_->index_of(id);
    for (size_t k = 0; k < gens.size(); ++k)
        if (gens[k] == idx) return dists_[k];
    throw std::invalid_argument("SDist: '" + id + "' is not a generator");
}

bool SDist::operator==(const SDist& o) const {
    return m_ == o.m_ && scenario_->size() == o.scenario_->size() && dists_ == o.dists_;
}

bool SDist::operator<(const SDist& o) const {
    if (m_ != o.m_) return m_ < o.m_;
    return dists_ < o.dists_;
}

DeterministicMap::DeterministicMap(ScenarioPtr scenario, int m, std::vector<int> labels)
    : scenario_(std::move(scenario)), m_(m), labels_(std::move(labels)) {
    if (m_ < 2) throw std::invalid_argument("DeterministicMap: modulus must be >= 2");
    if (labels_.size() != scenario_->vertex_list().size())
        throw std::invalid_argument("DeterministicMap: one label per vertex required");
    for (int& a : labels_) a = ((a % m_) + m_) % m_;
}

int DeterministicMap::label_of_vertex(int vertex_simplex_index) const {
    const int pos = scenario_->vertex_position(vertex_simplex_index);
    if (pos < 0) throw std::invalid_argument("DeterministicMap: not a vertex simplex");
    return labels_[pos];
}

int DeterministicMap::label_of_vertex_id(const std::string& id) const {
    return label_of_vertex(scenario_->index_of(id));
}

Outcome DeterministicMap::tuple_on(int simplex_index) const {
    const auto& verts = scenario_->vertices_of(simplex_index);
    Outcome y;
    y.reserve(verts.size());
    for (int v : verts) y.push_back(labels_[scenario_->vertex_position(v)]);
    return y;
}

DeterministicMap DeterministicMap::negated() const {
    std::vector<int> neg(labels_.size());
    for (size_t k = 0; k < labels_.size(); ++k) neg[k] = (m_ - labels_[k]) % m_;
    return DeterministicMap(scenario_, m_, std::move(neg));
}

DeterministicMap DeterministicMap::plus(const DeterministicMap& o) const {
    if (labels_.size() != o.labels_.size())
        throw std::invalid_argument("DeterministicMap::plus: scenario mismatch");
    std::vector<int> sum(labels_.size());
    for (size_t k = 0; k < labels_.size(); ++k) sum[k] = (labels_[k] + o.labels_[k]) % m_;
    return DeterministicMap(scenario_, m_, std::move(sum));
}

bool DetMixture::is_valid() const {
    Rat total(0);
    for (const auto& [labels, w] : weights) {
        if (w < 0) return false;
        total += w;
    }
    return total == 1;
}

namespace {

// Induced distribution per simplex plus the provenance of its canonical
// value; disagreements are collected instead of thrown.
struct Induced {
    std::vector<Dist> dists;
    std::vector<std::string> provider;  // generator id that produced the value
    SDistReport report;
};

Induced induce_all(const SDist& p) {
    const Scenario& s = *p.scenario();
    Induced out{std::vector<Dist>(s.size(), Dist(p.modulus(), 0)),
                std::vector<std::string>(s.size()), {}};
    std::vector<char> have(s.size(), 0);

    const auto& gens = s.generators();
    for (size_t k = 0; k < gens.size(); ++k) {
        out.dists[gens[k]] = p.on_generator(static_cast<int>(k));
        out.provider[gens[k]] = s.simplex(gens[k]).id;
        have[gens[k]] = 1;
    }

    std::vector<int> order(s.size());
    for (int i = 0; i < s.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&s](int a, int b) { return s.simplex(a).dim > s.simplex(b).dim; });

    for (int i : order) {
        if (!have[i]) continue;  // unreachable only on invalid scenarios
        const int n = s.simplex(i).dim;
        for (int fi = 0; fi <= n && n >= 1; ++fi) {
            const int f = s.face(i, fi);
            Dist marg = marginalize(out.dists[i], fi);
            if (!have[f]) {
                out.dists[f] = std::move(marg);
                out.provider[f] = out.provider[i];
                have[f] = 1;
            } else if (!(out.dists[f] == marg)) {
                out.report.ok = false;
                out.report.violations.push_back(
                    {s.simplex(f).id, out.provider[f], out.provider[i],
                     "marginals disagree on face '" + s.simplex(f).id + "' (via '" +
                         out.provider[f] + "' vs '" + out.provider[i] + "')"});
            }
        }
    }
    return out;
}

}  // namespace

SDistReport validate_sdist(const SDist& p) {
    require_valid(*p.scenario());
    return induce_all(p).report;
}

void require_valid(const SDist& p) {
    SDistReport rep = validate_sdist(p);
    if (rep.ok) return;
    std::string msg = "invalid simplicial distribution:";
    for (const auto& v : rep.violations) msg += "\n  " + v.detail;
    throw std::invalid_argument(msg);
}

std::vector<Dist> all_simplex_dists(const SDist& p) {
    Induced ind = induce_all(p);
    if (!ind.report.ok) {
        std::string msg = "all_simplex_dists: distribution is not face-compatible:";
        for (const auto& v : ind.report.violations) msg += "\n  " + v.detail;
        throw std::invalid_argument(msg);
    }
    return std::move(ind.dists);
}

std::vector<DeterministicMap> enumerate_deterministic(ScenarioPtr scenario, int m,
                                                      std::uint64_t cap) {
    require_valid(*scenario);
    const size_t nv = scenario->vertex_list().size();
    std::uint64_t count = 1;
    for (size_t k = 0; k < nv; ++k) {
        count *= static_cast<std::uint64_t>(m);
        if (count > cap)
            throw std::runtime_error("enumerate_deterministic: labeling count exceeds cap " +
                                     std::to_string(cap));
    }
    std::vector<DeterministicMap> out;
    out.reserve(count);
    std::vector<int> labels(nv, 0);
    while (true) {
        out.emplace_back(scenario, m, labels);
        int i = static_cast<int>(nv) - 1;
        while (i >= 0 && ++labels[i] == m) labels[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

SDist deterministic_sdist(const DeterministicMap& phi) {
    const Scenario& s = *phi.scenario();
    std::vector<Dist> dists;
    dists.reserve(s.generators().size());
    for (int g : s.generators()) dists.push_back(delta(phi.modulus(), phi.tuple_on(g)));
    return SDist(phi.scenario(), phi.modulus(), std::move(dists));
}

SDist theta(const DetMixture& q) {
    if (!q.is_valid()) throw std::invalid_argument("theta: mixture weights must be a distribution");
    const Scenario& s = *q.scenario;
    std::vector<Dist> dists;
    dists.reserve(s.generators().size());
    for (int g : s.generators()) {
        Dist d(q.m, s.simplex(g).dim + 1);
        for (const auto& [labels, w] : q.weights) {
            DeterministicMap phi(q.scenario, q.m, labels);
            d.add(phi.tuple_on(g), w);
        }
        dists.push_back(std::move(d));
    }
    return SDist(q.scenario, q.m, std::move(dists));
}

SDist product(const SDist& p, const SDist& q) {
    require_compatible(p, q, "product");
    std::vector<Dist> dists;
    dists.reserve(p.generator_dists().size());
    for (size_t k = 0; k < p.generator_dists().size(); ++k)
        dists.push_back(convolve(p.generator_dists()[k], q.generator_dists()[k]));
    return SDist(p.scenario(), p.modulus(), std::move(dists));
}

SDist act(const DeterministicMap& phi, const SDist& q) {
    if (phi.modulus() != q.modulus()) throw std::invalid_argument("act: modulus mismatch");
    if (phi.scenario()->size() != q.scenario()->size())
        throw std::invalid_argument("act: scenario mismatch");
    const auto& gens = q.scenario()->generators();
    std::vector<Dist> dists;
    dists.reserve(gens.size());
    for (size_t k = 0; k < gens.size(); ++k)
        dists.push_back(shift_by(q.generator_dists()[k], phi.tuple_on(gens[k])));
    return SDist(q.scenario(), q.modulus(), std::move(dists));
}

SDist mix_sdist(const std::vector<std::pair<Rat, SDist>>& terms) {
    if (terms.empty()) throw std::invalid_argument("mix_sdist: no terms");
    const SDist& first = terms.front().second;
    Rat total(0);
    std::vector<Dist> dists;
    for (size_t k = 0; k < first.generator_dists().size(); ++k) {
        std::vector<std::pair<Rat, Dist>> parts;
        parts.reserve(terms.size());
        for (const auto& [w, p] : terms) {
            require_compatible(first, p, "mix_sdist");
            parts.emplace_back(w, p.generator_dists()[k]);
        }
        dists.push_back(mix(parts));
    }
    for (const auto& [w, p] : terms) total += w;
    if (total != 1) throw std::invalid_argument("mix_sdist: weights must sum to 1");
    return SDist(first.scenario(), first.modulus(), std::move(dists));
}

SDist restrict_sdist(const SDist& p, const ScenarioPtr& sub) {
    require_valid(*sub);
    const Scenario& host = *p.scenario();
    for (const Simplex& t : sub->simplices()) {
        const int hi = host.index_of(t.id);
        if (hi < 0)
            throw std::invalid_argument("restrict: '" + t.id + "' is not in the host scenario");
        if (host.simplex(hi).dim != t.dim || host.simplex(hi).face_ids != t.face_ids)
            throw std::invalid_argument("restrict: '" + t.id +
                                        "' differs between host and sub-scenario");
    }
    std::vector<Dist> host_dists = all_simplex_dists(p);
    std::vector<Dist> dists;
    dists.reserve(sub->generators().size());
    for (int g : sub->generators())
        dists.push_back(host_dists[host.index_of(sub->simplex(g).id)]);
    return SDist(sub, p.modulus(), std::move(dists));
}

bool preceq(const SDist& q, const SDist& p) {
    require_compatible(q, p, "preceq");
    for (size_t k = 0; k < q.generator_dists().size(); ++k) {
        for (const auto& [y, w] : q.generator_dists()[k].support()) {
            if (p.generator_dists()[k].at(y) == 0) return false;
        }
    }
    return true;
}

}  // namespace sctx
