#pragma once

#include "sctx/bell.hpp"
#include "sctx/cone_suspension.hpp"
#include "sctx/vertex_factory.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace sctx {

using Json = nlohmann::json;

// Scenario: {"name", "m"?, "simplices": [{"id", "dim", "faces": [ids]}]};
// vertices carry "faces": [] and generators are inferred.
Json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const Json& j);

// Parses and validates; throws std::invalid_argument naming the violations
// (exit code 2 territory) and std::runtime_error on unreadable files.
Scenario parse_scenario_file(const std::string& path);

// Distribution: {"m", "generators": {id: [{"outcome": [..], "prob": "a/b"}]}}.
Json sdist_to_json(const SDist& p);
SDist sdist_from_json(const Json& j, const ScenarioPtr& scenario);

// Deterministic map: {"m", "labels": {vertex id: int}}.
Json detmap_to_json(const DeterministicMap& phi);
DeterministicMap detmap_from_json(const Json& j, const ScenarioPtr& scenario);

Json mixture_to_json(const DetMixture& q);

// Inequality: {"name", "terms": [{"simplex", "outcome", "coef"}],
// "rhs_terms": [...], "bound", "sense": "le"}.
Json inequality_to_json(const LinearInequality& ineq);
LinearInequality inequality_from_json(const Json& j);
Json family_to_json(const std::vector<LinearInequality>& family);
std::vector<LinearInequality> family_from_json(const Json& j);

// Join point: {"parts": [{"lambda": "a/b", "component": dist|null}]}.
Json join_point_to_json(const JoinPoint& jp);
JoinPoint join_point_from_json(const Json& j, const ScenarioPtr& base);

Json suspension_point_to_json(const SuspensionPoint& sp);
SuspensionPoint suspension_point_from_json(const Json& j, const ScenarioPtr& base);

// Collections: {"type": "det", "m", "A", "B", "h", "sigma1": [[[u,v],..],..]}
// and {"type": "avg", "m", "exponents": [[e1,e2],..]}.
Json det_collection_to_json(const DetCollection& c);
DetCollection det_collection_from_json(const Json& j);
Json avg_collection_to_json(const AvgCollection& c);
AvgCollection avg_collection_from_json(const Json& j);

Json certificate_to_json(const NoncontextualityCertificate& cert, const CoordSpace& coords);

Json read_json_file(const std::string& path);

}  // namespace sctx
