#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sctx {

// One nondegenerate simplex of a measurement space.  A simplex of dimension
// n >= 1 lists its n+1 faces in order (entry i is d_i); vertices list none.
struct Simplex {
    std::string id;
    int dim = 0;
    std::vector<std::string> face_ids;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string msg) {
        ok = false;
        violations.push_back(std::move(msg));
    }
};

// A finitely generated measurement space presented as a Delta-set: only
// nondegenerate simplices are stored and degeneracy maps are omitted (a
// simplicial distribution's value on a degenerate simplex carries no
// independent constraint).  Immutable after construction.
//
// Construction is permissive: structural defects (dangling face ids,
// wrong face counts, broken simplicial identities) are reported by
// validate_scenario rather than thrown, so defective inputs can be
// diagnosed.  All builders in this module produce validated scenarios.
class Scenario {
  public:
    Scenario() = default;
    Scenario(std::string name, std::vector<Simplex> simplices);

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(simplices_.size()); }
    const Simplex& simplex(int idx) const { return simplices_[idx]; }
    const std::vector<Simplex>& simplices() const { return simplices_; }

    // Index of an id, or -1.
    int index_of(const std::string& id) const;
    bool contains(const std::string& id) const { return index_of(id) >= 0; }

    // Resolved face indices of simplex idx (d_0..d_n); -1 marks a dangling
    // reference.  Empty for vertices.
    const std::vector<int>& faces(int idx) const { return faces_[idx]; }
    int face(int idx, int i) const { return faces_[idx][i]; }

    // Ordered vertex indices (v_0..v_n) of simplex idx.  Only available on
    // structurally resolved scenarios.
    const std::vector<int>& vertices_of(int idx) const { return vertices_[idx]; }

    // Indices of the dim-0 simplices, in construction order.
    const std::vector<int>& vertex_list() const { return vertex_list_; }

    // Position of a simplex in vertex_list(), or -1 when it is not a vertex.
    int vertex_position(int idx) const { return vertex_pos_[idx]; }

    // Simplices that are not a face of any other simplex (computed, never
    // declared), in construction order.
    const std::vector<int>& generators() const { return generators_; }

    // All face references resolved with consistent dimensions.  Full
    // validity additionally needs the simplicial identities; see
    // validate_scenario.
    bool structurally_resolved() const { return resolved_; }

  private:
    std::string name_;
    std::vector<Simplex> simplices_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> faces_;
    std::vector<std::vector<int>> vertices_;
    std::vector<int> vertex_list_;
    std::vector<int> vertex_pos_;
    std::vector<int> generators_;
    bool resolved_ = false;

    friend ValidationReport validate_scenario(const Scenario&);
};

using ScenarioPtr = std::shared_ptr<const Scenario>;

// Checks id uniqueness, face resolution, face dimensions, the simplicial
// identities d_i d_j = d_{j-1} d_i (i < j) on every simplex of dim >= 2,
// and reachability of every non-generator from a generator.  Each
// violation names the offending simplex.
ValidationReport validate_scenario(const Scenario& s);

// Throws std::invalid_argument listing the violations when s is invalid.
void require_valid(const Scenario& s);

// The n-cycle (n >= 3): vertices v1..vn, edges s1..sn with d_1(sk) = vk and
// d_0(sk) = v(k+1 mod n).  n = 4 is the CHSH measurement space.
Scenario build_cycle(int n);

// The line with n edges (n >= 1): vertices v0..vn, edges s1..sn glued by
// d_0(sk) = d_1(s(k+1)).
Scenario build_line(int n);

// A single vertex "v".
Scenario build_point();

// Cone of a base scenario: every nondegenerate simplex sigma acquires a
// lifted simplex (c,sigma) one dimension up, with d_0(c,sigma) = sigma and
// d_i(c,sigma) = (c,d_{i-1}sigma); for a vertex v the second face of the
// lifted edge is the cone point itself (join convention).  The cone point
// is vertex 0 of every lifted simplex, so outcome tuples on lifted
// simplices carry the cone-point outcome first.
struct Cone {
    Scenario space;
    Scenario base;
    std::string cone_point;
    // base simplex id -> lifted simplex id; the inclusion of the base is
    // the identity on ids.
    std::map<std::string, std::string> lift;

    const std::string& lifted(const std::string& base_id) const;
};

Cone cone(const Scenario& base, const std::string& cone_point_name = "c");

// Suspension: two cones glued along the base.  "up" is the s_1 copy with
// cone point "c+", "down" the s_2 copy with cone point "c-".  Each Cone
// member's space is the corresponding sub-scenario of the suspension (ids
// shared), giving the two cone embeddings.
struct Suspension {
    Scenario space;
    Scenario base;
    Cone up;
    Cone down;
};

Suspension suspension(const Scenario& base);

// Id-disjoint union; ids are auto-prefixed "a."/"b.".
Scenario disjoint_union(const Scenario& x, const Scenario& y);

// True iff the vertex/edge graph is connected.  Throws on an empty scenario.
bool is_connected(const Scenario& s);

// A line inside a host scenario: edges sigma_1..sigma_n with orientation
// bits i_1..i_n; consecutive edges glue by d_{i_k}(sigma_k) =
// d_{1-i_{k+1}}(sigma_{k+1}).
struct LineSpec {
    std::vector<std::string> edges;
    std::vector<int> orientation;
};

// Throws std::invalid_argument when the spec does not describe a line in s.
void require_line(const Scenario& s, const LineSpec& line);

// Vertex indices t_0..t_n visited by the line, t_0 = d_{1-i_1}(sigma_1).
std::vector<int> line_vertex_path(const Scenario& s, const LineSpec& line);

}  // namespace sctx
