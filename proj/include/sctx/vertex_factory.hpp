#pragma once

#include "sctx/cone_suspension.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace sctx {

using Mat2 = std::array<std::array<int, 2>, 2>;

// A complete collection of deterministic distributions on the three-edge
// line: phi^{i,j}_{s1} from the table, phi^{i,j}_{s2} = (i,j)A^T and
// phi^{i,j}_{s3} = (i,j)B^T, bound to the shift h used by psi^h.
struct DetCollection {
    int m = 2;
    Mat2 A{};
    Mat2 B{};
    int h = 0;
    // sigma1[i][j] = phi^{i,j}_{s1}.
    std::vector<std::vector<std::array<int, 2>>> sigma1;
};

// A complete collection of average distributions on the two-edge line:
// q^j_{s_k} = S^{exponents[j][k-1]}, each edge column a permutation of Z_m.
struct AvgCollection {
    int m = 2;
    std::vector<std::array<int, 2>> exponents;
};

struct CollectionReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

// Conditions checked exactly: the sigma1 table is a bijection onto Z_m^2,
// the three edge values chain into simplicial maps, and the three gcd
// conditions hold for the bound h.
CollectionReport validate_det_collection(const DetCollection& c);

// Permutation condition per edge, plus uniform vertex marginals of each
// shift distribution.
CollectionReport validate_avg_collection(const AvgCollection& c);

// The m^2 maps phi^{i,j} on the given three-edge line scenario (defaults to
// build_line(3)), indexed [i][j].
std::vector<std::vector<DeterministicMap>> det_collection_maps(const DetCollection& c,
                                                               ScenarioPtr line_scenario = {});

// The m distributions q^j on the given two-edge line scenario (defaults to
// build_line(2)).
std::vector<SDist> avg_collection_sdists(const AvgCollection& c, ScenarioPtr line_scenario = {});

// A deterministic map restricting to psi^h on the line: vertex labels
// (0,0,1,h) along a three-edge line, (0,0,1) along a two-edge line.  The
// extension labels the remaining vertices (by id) and must agree with the
// forced labels; the line must be in standard orientation.
DeterministicMap psi_map(ScenarioPtr x, const LineSpec& line, int m, int h,
                         const std::map<std::string, int>& extension);

struct FactoryReport {
    bool accepted = false;
    std::vector<std::string> failures;  // named hypothesis rejections
    std::optional<SDist> result;        // on the suspension of x
    // Certification of the construction (filled when accepted).
    VertexCertificate vertex;
    bool contextual = false;
    bool suspension_lp_contextual = false;
};

// First family: m^2 vertices q^{i,j} whose line restrictions form a
// complete collection of deterministic distributions, each column closed,
// with a psi-invariant grand mixture.  Builds
//   (<1/m, p^j>_j ; <1/m, psi.p^j>_j),  p^j = (1/m) sum_i q^{i,j},
// on the suspension and certifies it.  Hypotheses are recomputed, never
// trusted; any failure refuses the construction.
FactoryReport build_suspension_vertex_det(ScenarioPtr x, const LineSpec& line,
                                          const std::vector<std::vector<SDist>>& q,
                                          const DeterministicMap& psi,
                                          std::uint64_t cap = kDefaultLabelingCap);

// Second family: m vertices p^j whose restrictions to a two-edge line form
// a complete collection of average distributions, with psi fixed to
// (0,0),(0,1) on the line and a psi-invariant mixture.
FactoryReport build_suspension_vertex_avg(ScenarioPtr x, const LineSpec& line,
                                          const std::vector<SDist>& p,
                                          const DeterministicMap& psi,
                                          std::uint64_t cap = kDefaultLabelingCap);

// Exact solution set of  sum lambda_i left_i = sum mu_i (psi . left_i)
// with both weight vectors summing to 1: unique iff the homogeneous
// nullspace is trivial.
struct UniquenessReport {
    bool unique = false;
    bool uniform = false;  // solution equals the uniform weights
    int nullspace_dim = 0;
    RatVec lambda;
    RatVec mu;
};

UniquenessReport mixture_uniqueness_solve(const std::vector<SDist>& left,
                                          const std::vector<SDist>& right);

UniquenessReport collection_uniqueness_solve(const DetCollection& c);
UniquenessReport collection_uniqueness_solve(const AvgCollection& c);

}  // namespace sctx
