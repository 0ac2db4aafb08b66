#include "sctx/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>

namespace sctx {

namespace {

Outcome outcome_from_json(const Json& j) {
    Outcome y;
    for (const auto& v : j) y.push_back(v.get<int>());
    return y;
}

Json outcome_to_json(const Outcome& y) {
    Json j = Json::array();
    for (int a : y) j.push_back(a);
    return j;
}

}  // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::runtime_error("parse error in '" + path + "': " + e.what());
    }
    return j;
}

Json scenario_to_json(const Scenario& s) {
    Json simplices = Json::array();
    for (const Simplex& t : s.simplices()) {
        Json faces = Json::array();
        for (const std::string& f : t.face_ids) faces.push_back(f);
        simplices.push_back({{"id", t.id}, {"dim", t.dim}, {"faces", faces}});
    }
    return Json{{"name", s.name()}, {"simplices", simplices}};
}

Scenario scenario_from_json(const Json& j) {
    std::vector<Simplex> simplices;
    for (const auto& t : j.at("simplices")) {
        Simplex sx;
        sx.id = t.at("id").get<std::string>();
        sx.dim = t.at("dim").get<int>();
        for (const auto& f : t.at("faces")) sx.face_ids.push_back(f.get<std::string>());
        simplices.push_back(std::move(sx));
    }
    return Scenario(j.value("name", std::string("scenario")), std::move(simplices));
}

Scenario parse_scenario_file(const std::string& path) {
    Scenario s = scenario_from_json(read_json_file(path));
    require_valid(s);
    return s;
}

Json sdist_to_json(const SDist& p) {
    Json gens = Json::object();
    const auto& glist = p.scenario()->generators();
    for (size_t k = 0; k < glist.size(); ++k) {
        Json entries = Json::array();
        for (const auto& [y, w] : p.generator_dists()[k].support())
            entries.push_back({{"outcome", outcome_to_json(y)}, {"prob", rat_str(w)}});
        gens[p.scenario()->simplex(glist[k]).id] = entries;
    }
    return Json{{"m", p.modulus()}, {"generators", gens}};
}

SDist sdist_from_json(const Json& j, const ScenarioPtr& scenario) {
    const int m = j.at("m").get<int>();
    const auto& gens = j.at("generators");
    std::vector<Dist> dists;
    for (int g : scenario->generators()) {
        const std::string& id = scenario->simplex(g).id;
        if (!gens.contains(id))
            throw std::invalid_argument("distribution: missing generator '" + id + "'");
        Dist d(m, scenario->simplex(g).dim + 1);
        for (const auto& entry : gens.at(id))
            d.add(outcome_from_json(entry.at("outcome")),
                  parse_rat(entry.at("prob").get<std::string>()));
        if (!d.is_valid())
            throw std::invalid_argument("distribution: generator '" + id +
                                        "' does not carry a probability distribution");
        dists.push_back(std::move(d));
    }
    return SDist(scenario, m, std::move(dists));
}

Json detmap_to_json(const DeterministicMap& phi) {
    Json labels = Json::object();
    const auto& vl = phi.scenario()->vertex_list();
    for (size_t k = 0; k < vl.size(); ++k)
        labels[phi.scenario()->simplex(vl[k]).id] = phi.labels()[k];
    return Json{{"m", phi.modulus()}, {"labels", labels}};
}

DeterministicMap detmap_from_json(const Json& j, const ScenarioPtr& scenario) {
    const int m = j.at("m").get<int>();
    const auto& labels = j.at("labels");
    std::vector<int> values(scenario->vertex_list().size(), 0);
    for (size_t k = 0; k < scenario->vertex_list().size(); ++k) {
        const std::string& id = scenario->simplex(scenario->vertex_list()[k]).id;
        if (!labels.contains(id))
            throw std::invalid_argument("deterministic map: missing vertex '" + id + "'");
        values[k] = labels.at(id).get<int>();
    }
    return DeterministicMap(scenario, m, std::move(values));
}

Json mixture_to_json(const DetMixture& q) {
    Json entries = Json::array();
    const auto& vl = q.scenario->vertex_list();
    for (const auto& [labels, w] : q.weights) {
        Json lj = Json::object();
        for (size_t k = 0; k < vl.size(); ++k) lj[q.scenario->simplex(vl[k]).id] = labels[k];
        entries.push_back({{"labels", lj}, {"weight", rat_str(w)}});
    }
    return Json{{"m", q.m}, {"mixture", entries}};
}

namespace {

Json terms_to_json(const std::vector<IneqTerm>& terms) {
    Json out = Json::array();
    for (const IneqTerm& t : terms)
        out.push_back({{"simplex", t.simplex},
                       {"outcome", outcome_to_json(t.outcome)},
                       {"coef", rat_str(t.coef)}});
    return out;
}

std::vector<IneqTerm> terms_from_json(const Json& j) {
    std::vector<IneqTerm> out;
    for (const auto& t : j)
        out.push_back({t.at("simplex").get<std::string>(), outcome_from_json(t.at("outcome")),
                       parse_rat(t.at("coef").get<std::string>())});
    return out;
}

}  // namespace

Json inequality_to_json(const LinearInequality& ineq) {
    return Json{{"name", ineq.name},
                {"terms", terms_to_json(ineq.terms)},
                {"rhs_terms", terms_to_json(ineq.rhs_terms)},
                {"bound", rat_str(ineq.bound)},
                {"sense", "le"}};
}

LinearInequality inequality_from_json(const Json& j) {
    if (j.value("sense", std::string("le")) != "le")
        throw std::invalid_argument("inequality: only sense 'le' is supported");
    LinearInequality ineq;
    ineq.name = j.value("name", std::string());
    ineq.terms = terms_from_json(j.at("terms"));
    ineq.rhs_terms = terms_from_json(j.at("rhs_terms"));
    ineq.bound = parse_rat(j.at("bound").get<std::string>());
    return ineq;
}

Json family_to_json(const std::vector<LinearInequality>& family) {
    Json out = Json::array();
    for (const LinearInequality& ineq : family) out.push_back(inequality_to_json(ineq));
    return out;
}

std::vector<LinearInequality> family_from_json(const Json& j) {
    std::vector<LinearInequality> out;
    for (const auto& e : j) out.push_back(inequality_from_json(e));
    return out;
}

Json join_point_to_json(const JoinPoint& jp) {
    Json parts = Json::array();
    for (const auto& [lambda, comp] : jp.parts) {
        Json entry = {{"lambda", rat_str(lambda)}};
        entry["component"] = comp ? sdist_to_json(*comp) : Json(nullptr);
        parts.push_back(std::move(entry));
    }
    return Json{{"parts", parts}};
}

JoinPoint join_point_from_json(const Json& j, const ScenarioPtr& base) {
    JoinPoint jp;
    for (const auto& entry : j.at("parts")) {
        const Rat lambda = parse_rat(entry.at("lambda").get<std::string>());
        if (entry.at("component").is_null())
            jp.parts.emplace_back(lambda, std::nullopt);
        else
            jp.parts.emplace_back(lambda, sdist_from_json(entry.at("component"), base));
    }
    if (!jp.is_valid()) throw std::invalid_argument("join point violates its invariants");
    return jp;
}

Json suspension_point_to_json(const SuspensionPoint& sp) {
    return Json{{"up", join_point_to_json(sp.up)}, {"down", join_point_to_json(sp.down)}};
}

SuspensionPoint suspension_point_from_json(const Json& j, const ScenarioPtr& base) {
    return SuspensionPoint{join_point_from_json(j.at("up"), base),
                           join_point_from_json(j.at("down"), base)};
}

Json det_collection_to_json(const DetCollection& c) {
    auto mat = [](const Mat2& m) {
        return Json::array({Json::array({m[0][0], m[0][1]}), Json::array({m[1][0], m[1][1]})});
    };
    Json sigma1 = Json::array();
    for (const auto& row : c.sigma1) {
        Json jrow = Json::array();
        for (const auto& pair : row) jrow.push_back(Json::array({pair[0], pair[1]}));
        sigma1.push_back(std::move(jrow));
    }
    return Json{{"type", "det"}, {"m", c.m}, {"A", mat(c.A)}, {"B", mat(c.B)},
                {"h", c.h},      {"sigma1", sigma1}};
}

DetCollection det_collection_from_json(const Json& j) {
    DetCollection c;
    c.m = j.at("m").get<int>();
    auto mat = [](const Json& inner) {
        Mat2 m;
        for (int r = 0; r < 2; ++r)
            for (int k = 0; k < 2; ++k) m[r][k] = inner.at(r).at(k).get<int>();
        return m;
    };
    c.A = mat(j.at("A"));
    c.B = mat(j.at("B"));
    c.h = j.at("h").get<int>();
    for (const auto& row : j.at("sigma1")) {
        std::vector<std::array<int, 2>> r;
        for (const auto& pair : row) r.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
        c.sigma1.push_back(std::move(r));
    }
    return c;
}

Json avg_collection_to_json(const AvgCollection& c) {
    Json exps = Json::array();
    for (const auto& e : c.exponents) exps.push_back(Json::array({e[0], e[1]}));
    return Json{{"type", "avg"}, {"m", c.m}, {"exponents", exps}};
}

AvgCollection avg_collection_from_json(const Json& j) {
    AvgCollection c;
    c.m = j.at("m").get<int>();
    for (const auto& e : j.at("exponents"))
        c.exponents.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return c;
}

Json certificate_to_json(const NoncontextualityCertificate& cert, const CoordSpace& coords) {
    Json out;
    out["verdict"] = cert.noncontextual ? "noncontextual" : "contextual";
    if (cert.noncontextual) {
        out["witness"] = mixture_to_json(cert.witness);
    } else {
        Json coeffs = Json::array();
        for (int c = 0; c < coords.ncols(); ++c) {
            if (cert.separating[c] == 0) continue;
            const auto [gen_pos, y] = coords.coord(c);
            const int g = coords.scenario()->generators()[gen_pos];
            coeffs.push_back({{"simplex", coords.scenario()->simplex(g).id},
                              {"outcome", outcome_to_json(y)},
                              {"coef", rat_str(cert.separating[c])}});
        }
        out["separating"] = {{"coefficients", coeffs},
                             {"constant", rat_str(cert.separating_const)}};
    }
    return out;
}

}  // namespace sctx
