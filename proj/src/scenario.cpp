#include "sctx/scenario.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sctx {

Scenario::Scenario(std::string name, std::vector<Simplex> simplices)
    : name_(std::move(name)), simplices_(std::move(simplices)) {
    for (int i = 0; i < size(); ++i) {
        index_.emplace(simplices_[i].id, i);  // duplicates keep the first; validate reports them
    }

    resolved_ = true;
    faces_.resize(size());
    for (int i = 0; i < size(); ++i) {
        const Simplex& s = simplices_[i];
        faces_[i].reserve(s.face_ids.size());
        for (const std::string& fid : s.face_ids) {
            auto it = index_.find(fid);
            faces_[i].push_back(it == index_.end() ? -1 : it->second);
            if (faces_[i].back() < 0) resolved_ = false;
        }
        if (s.dim == 0) {
            if (!s.face_ids.empty()) resolved_ = false;
        } else if (static_cast<int>(s.face_ids.size()) != s.dim + 1) {
            resolved_ = false;
        }
    }
    if (resolved_) {
        for (int i = 0; i < size() && resolved_; ++i)
            for (int f : faces_[i])
                if (simplices_[f].dim != simplices_[i].dim - 1) resolved_ = false;
    }

    vertex_pos_.assign(size(), -1);
    for (int i = 0; i < size(); ++i) {
        if (simplices_[i].dim == 0) {
            vertex_pos_[i] = static_cast<int>(vertex_list_.size());
            vertex_list_.push_back(i);
        }
    }

    std::vector<char> is_face(size(), 0);
    if (resolved_) {
        for (int i = 0; i < size(); ++i)
            for (int f : faces_[i]) is_face[f] = 1;
    }
    for (int i = 0; i < size(); ++i)
        if (!is_face[i]) generators_.push_back(i);

    // Ordered vertex lists, by increasing dimension: v_n comes from d_0,
    // v_0..v_{n-1} from d_n.
    vertices_.resize(size());
    if (resolved_) {
        std::vector<int> order(size());
        for (int i = 0; i < size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return simplices_[a].dim < simplices_[b].dim;
        });
        for (int i : order) {
            const int n = simplices_[i].dim;
            if (n == 0) {
                vertices_[i] = {i};
                continue;
            }
            vertices_[i] = vertices_[faces_[i][n]];
            vertices_[i].push_back(vertices_[faces_[i][0]].back());
        }
    }
}

int Scenario::index_of(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

ValidationReport validate_scenario(const Scenario& s) {
    ValidationReport rep;

    std::set<std::string> seen;
    for (const Simplex& sx : s.simplices()) {
        if (!seen.insert(sx.id).second) rep.fail("duplicate simplex id '" + sx.id + "'");
    }

    for (int i = 0; i < s.size(); ++i) {
        const Simplex& sx = s.simplex(i);
        if (sx.dim < 0) {
            rep.fail("simplex '" + sx.id + "' has negative dimension");
            continue;
        }
        const int expected = sx.dim == 0 ? 0 : sx.dim + 1;
        if (static_cast<int>(sx.face_ids.size()) != expected) {
            rep.fail("simplex '" + sx.id + "' of dim " + std::to_string(sx.dim) + " lists " +
                     std::to_string(sx.face_ids.size()) + " faces, expected " +
                     std::to_string(expected));
            continue;
        }
        for (int k = 0; k < static_cast<int>(sx.face_ids.size()); ++k) {
            const int f = s.faces_[i][k];
            if (f < 0) {
                rep.fail("simplex '" + sx.id + "': dangling face reference '" + sx.face_ids[k] +
                         "'");
            } else if (s.simplex(f).dim != sx.dim - 1) {
                rep.fail("simplex '" + sx.id + "': face '" + sx.face_ids[k] + "' has dim " +
                         std::to_string(s.simplex(f).dim) + ", expected " +
                         std::to_string(sx.dim - 1));
            }
        }
    }
    if (!rep.ok) return rep;  // identity checks need resolved faces

    // d_i d_j = d_{j-1} d_i for i < j.
    for (int t = 0; t < s.size(); ++t) {
        const int n = s.simplex(t).dim;
        for (int j = 1; j <= n; ++j) {
            for (int i = 0; i < j; ++i) {
                const int lhs = s.face(s.face(t, j), i);
                const int rhs = s.face(s.face(t, i), j - 1);
                if (lhs != rhs) {
                    rep.fail("simplex '" + s.simplex(t).id + "': d_" + std::to_string(i) + " d_" +
                             std::to_string(j) + " != d_" + std::to_string(j - 1) + " d_" +
                             std::to_string(i));
                }
            }
        }
    }

    // Every non-generator must be an iterated face of some generator.
    std::vector<char> reached(s.size(), 0);
    std::vector<int> stack(s.generators());
    for (int g : stack) reached[g] = 1;
    while (!stack.empty()) {
        const int t = stack.back();
        stack.pop_back();
        for (int f : s.faces(t)) {
            if (!reached[f]) {
                reached[f] = 1;
                stack.push_back(f);
            }
        }
    }
    for (int i = 0; i < s.size(); ++i) {
        if (!reached[i])
            rep.fail("simplex '" + s.simplex(i).id + "' is not reachable from any generator");
    }

    return rep;
}

void require_valid(const Scenario& s) {
    ValidationReport rep = validate_scenario(s);
    if (rep.ok) return;
    std::string msg = "invalid scenario '" + s.name() + "':";
    for (const std::string& v : rep.violations) msg += "\n  " + v;
    throw std::invalid_argument(msg);
}

Scenario build_cycle(int n) {
    if (n < 3) throw std::invalid_argument("build_cycle: need n >= 3");
    std::vector<Simplex> sx;
    for (int k = 1; k <= n; ++k) sx.push_back({"v" + std::to_string(k), 0, {}});
    for (int k = 1; k <= n; ++k) {
        const std::string head = "v" + std::to_string(k % n + 1);
        const std::string tail = "v" + std::to_string(k);
        sx.push_back({"s" + std::to_string(k), 1, {head, tail}});
    }
    Scenario s("cycle-" + std::to_string(n), std::move(sx));
    require_valid(s);
    return s;
}

Scenario build_line(int n) {
    if (n < 1) throw std::invalid_argument("build_line: need n >= 1");
    std::vector<Simplex> sx;
    for (int k = 0; k <= n; ++k) sx.push_back({"v" + std::to_string(k), 0, {}});
    for (int k = 1; k <= n; ++k) {
        sx.push_back({"s" + std::to_string(k), 1,
                      {"v" + std::to_string(k), "v" + std::to_string(k - 1)}});
    }
    Scenario s("line-" + std::to_string(n), std::move(sx));
    require_valid(s);
    return s;
}

Scenario build_point() {
    Scenario s("point", {{"v", 0, {}}});
    require_valid(s);
    return s;
}

const std::string& Cone::lifted(const std::string& base_id) const {
    auto it = lift.find(base_id);
    if (it == lift.end())
        throw std::invalid_argument("cone: '" + base_id + "' is not a base simplex");
    return it->second;
}

Cone cone(const Scenario& base, const std::string& cone_point_name) {
    require_valid(base);
    if (base.contains(cone_point_name))
        throw std::invalid_argument("cone: id '" + cone_point_name + "' already in use");

    Cone result;
    result.base = base;
    result.cone_point = cone_point_name;

    std::vector<Simplex> sx = base.simplices();
    sx.push_back({cone_point_name, 0, {}});

    for (const Simplex& b : base.simplices()) {
        const std::string lid = cone_point_name + "." + b.id;
        if (base.contains(lid))
            throw std::invalid_argument("cone: id '" + lid + "' already in use");
        result.lift[b.id] = lid;
    }
    for (const Simplex& b : base.simplices()) {
        Simplex lifted;
        lifted.id = result.lift[b.id];
        lifted.dim = b.dim + 1;
        lifted.face_ids.push_back(b.id);  // d_0(c,sigma) = sigma
        if (b.dim == 0) {
            lifted.face_ids.push_back(cone_point_name);  // d_1(c,v) = c
        } else {
            for (const std::string& f : b.face_ids) lifted.face_ids.push_back(result.lift[f]);
        }
        sx.push_back(std::move(lifted));
    }

    result.space = Scenario(cone_point_name + "(" + base.name() + ")", std::move(sx));
    require_valid(result.space);
    return result;
}

Suspension suspension(const Scenario& base) {
    Cone up = cone(base, "c+");
    Cone down = cone(base, "c-");

    std::vector<Simplex> sx = up.space.simplices();
    for (int i = base.size(); i < down.space.size(); ++i) sx.push_back(down.space.simplex(i));

    Suspension result;
    result.base = base;
    result.up = std::move(up);
    result.down = std::move(down);
    result.space = Scenario("susp(" + base.name() + ")", std::move(sx));
    require_valid(result.space);
    return result;
}

Scenario disjoint_union(const Scenario& x, const Scenario& y) {
    require_valid(x);
    require_valid(y);
    std::vector<Simplex> sx;
    auto add = [&sx](const Scenario& s, const std::string& prefix) {
        for (Simplex t : s.simplices()) {
            t.id = prefix + t.id;
            for (std::string& f : t.face_ids) f = prefix + f;
            sx.push_back(std::move(t));
        }
    };
    add(x, "a.");
    add(y, "b.");
    Scenario s(x.name() + "+" + y.name(), std::move(sx));
    require_valid(s);
    return s;
}

bool is_connected(const Scenario& s) {
    require_valid(s);
    if (s.vertex_list().empty()) throw std::invalid_argument("is_connected: empty scenario");

    std::map<int, int> comp;  // vertex index -> component root (union-find, path halving)
    for (int v : s.vertex_list()) comp[v] = v;
    auto find = [&comp](int v) {
        while (comp[v] != v) {
            comp[v] = comp[comp[v]];
            v = comp[v];
        }
        return v;
    };
    for (int i = 0; i < s.size(); ++i) {
        if (s.simplex(i).dim != 1) continue;
        comp[find(s.face(i, 0))] = find(s.face(i, 1));
    }
    const int root = find(s.vertex_list().front());
    for (int v : s.vertex_list())
        if (find(v) != root) return false;
    return true;
}

void require_line(const Scenario& s, const LineSpec& line) {
    require_valid(s);
    if (line.edges.empty()) throw std::invalid_argument("line: no edges");
    if (line.orientation.size() != line.edges.size())
        throw std::invalid_argument("line: orientation bits must match the edge count");

    std::set<std::string> distinct;
    for (size_t k = 0; k < line.edges.size(); ++k) {
        const int idx = s.index_of(line.edges[k]);
        if (idx < 0) throw std::invalid_argument("line: unknown edge '" + line.edges[k] + "'");
        if (s.simplex(idx).dim != 1)
            throw std::invalid_argument("line: '" + line.edges[k] + "' is not a 1-simplex");
        if (!distinct.insert(line.edges[k]).second)
            throw std::invalid_argument("line: edge '" + line.edges[k] + "' repeats");
        if (line.orientation[k] != 0 && line.orientation[k] != 1)
            throw std::invalid_argument("line: orientation bits must be 0 or 1");
    }
    for (size_t k = 0; k + 1 < line.edges.size(); ++k) {
        const int a = s.index_of(line.edges[k]);
        const int b = s.index_of(line.edges[k + 1]);
        if (s.face(a, line.orientation[k]) != s.face(b, 1 - line.orientation[k + 1]))
            throw std::invalid_argument("line: edges '" + line.edges[k] + "' and '" +
                                        line.edges[k + 1] + "' do not glue");
    }
}

std::vector<int> line_vertex_path(const Scenario& s, const LineSpec& line) {
    require_line(s, line);
    std::vector<int> path;
    path.push_back(s.face(s.index_of(line.edges[0]), 1 - line.orientation[0]));
    for (size_t k = 0; k < line.edges.size(); ++k)
        path.push_back(s.face(s.index_of(line.edges[k]), line.orientation[k]));
    return path;
}

}  // namespace sctx
