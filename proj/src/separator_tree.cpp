#include "geodesic/separator_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

namespace geodesic {

namespace {

// Triangulated sphere: the domain triangulation plus an abstract vertex
// joined to the outer ring, and fan triangulations inside the holes.
struct Sphere {
    int inf = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<bool> real;                  // edge id < real count
    std::vector<std::array<int, 2>> edge_faces;
    std::vector<std::array<int, 3>> face_edges;
    std::vector<int> weight;                 // 1 for domain triangles
};

Sphere build_sphere(const PolygonDomain& domain, const Triangulation& tri) {
    Sphere s;
    const int n = static_cast<int>(domain.vertex_count());
    s.inf = n;
    s.edges = tri.edges;
    s.real.assign(tri.edges.size(), true);
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
        s.face_edges.push_back(tri.triangle_edges[t]);
        s.weight.push_back(1);
    }
    auto add_edge = [&](int a, int b) {
        s.edges.push_back({a, b});
        s.real.push_back(false);
        return static_cast<int>(s.edges.size()) - 1;
    };
    auto real_edge = [&](int a, int b) {
        const int e = tri.edge_id(a, b);
        if (e < 0) throw Error("ring edge missing from triangulation");
        return e;
    };

    const auto& outer = domain.ring(0);
    const std::size_t m = outer.size();
    std::vector<int> spoke(m);
    for (std::size_t i = 0; i < m; ++i) spoke[i] = add_edge(s.inf, outer[i]);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = (i + 1) % m;
        s.face_edges.push_back({real_edge(outer[i], outer[j]), spoke[j], spoke[i]});
        s.weight.push_back(0);
    }
    for (std::size_t r = 1; r < domain.ring_count(); ++r) {
        const auto& h = domain.ring(static_cast<int>(r));
        const std::size_t k = h.size();
        std::vector<int> chord(k, -1);
        chord[1] = real_edge(h[0], h[1]);
        chord[k - 1] = real_edge(h[0], h[k - 1]);
        for (std::size_t i = 2; i + 1 < k; ++i) chord[i] = add_edge(h[0], h[i]);
        for (std::size_t i = 1; i + 1 < k; ++i) {
            s.face_edges.push_back({chord[i], real_edge(h[i], h[i + 1]), chord[i + 1]});
            s.weight.push_back(0);
        }
    }

    s.edge_faces.assign(s.edges.size(), {-1, -1});
    for (std::size_t f = 0; f < s.face_edges.size(); ++f) {
        for (int e : s.face_edges[f]) {
            auto& side = s.edge_faces[static_cast<std::size_t>(e)];
            if (side[0] < 0) {
                side[0] = static_cast<int>(f);
            } else if (side[1] < 0) {
                side[1] = static_cast<int>(f);
            } else {
                throw Error("sphere edge with more than two faces");
            }
        }
    }
    for (const auto& side : s.edge_faces) {
        if (side[1] < 0) throw Error("sphere edge with fewer than two faces");
    }
    const int euler = (n + 1) - static_cast<int>(s.edges.size()) + static_cast<int>(s.face_edges.size());
    if (euler != 2) throw Error("completed sphere violates Euler's formula");
    return s;
}

}  // namespace

std::vector<int> TreePath::effective() const {
    if (pointer < 0) return nodes;
    std::vector<int> out;
    for (int v : nodes) {
        out.push_back(v);
        if (v == pointer) return out;
    }
    return out;
}

int SeparatorTree::height() const {
    int h = 0;
    for (const auto& nd : nodes_) h = std::max(h, nd.level);
    return h;
}

Region SeparatorTree::node_region(int id) const {
    const auto& nd = node(id);
    std::map<std::array<int, 2>, int> count;
    std::vector<int> verts;
    for (int t : nd.triangles) {
        const auto& tr = tri_.triangles[static_cast<std::size_t>(t)];
        for (int i = 0; i < 3; ++i) {
            const int a = tr[static_cast<std::size_t>(i)];
            const int b = tr[static_cast<std::size_t>((i + 1) % 3)];
            ++count[{std::min(a, b), std::max(a, b)}];
            verts.push_back(a);
        }
    }
    std::vector<std::array<int, 2>> boundary;
    for (const auto& [e, c] : count) {
        if (c == 1) boundary.push_back(e);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return Region(tri_.points, std::move(boundary), std::move(verts));
}

std::vector<Point> SeparatorTree::path_points(int node_id, int path) const {
    std::vector<Point> out;
    for (int v : node(node_id).paths[static_cast<std::size_t>(path)]) out.push_back(tri_.points[static_cast<std::size_t>(v)]);
    return out;
}

TreePath SeparatorTree::root_to_leaf(Point p) const {
    const Location loc = locate(tri_, p);
    TreePath tp;
    tp.triangle = loc.triangle;
    for (int v = leaf_of(loc.triangle); v >= 0; v = node(v).parent) tp.nodes.push_back(v);
    std::reverse(tp.nodes.begin(), tp.nodes.end());
    // First node on the path whose separator passes through p.
    int best = -1;
    const auto through = edges_through(tri_, loc);
    for (int v : tp.nodes) {
        const auto& nd = node(v);
        bool hit = loc.vertex >= 0 && std::binary_search(nd.q_vertices.begin(), nd.q_vertices.end(), loc.vertex);
        if (loc.vertex < 0) {
            for (int e : through) hit |= std::binary_search(nd.q_edges.begin(), nd.q_edges.end(), e);
        }
        if (hit) {
            best = v;
            break;
        }
    }
    tp.pointer = best;
    return tp;
}

SeparatorTree build_separator_tree(const PolygonDomain& domain) { return build_separator_tree(ExactOracle(domain)); }

SeparatorTree build_separator_tree(const ExactOracle& oracle) {
    SeparatorTree st;
    st.domain_ = oracle.domain();
    const auto& domain = st.domain_;
    const int n = static_cast<int>(domain.vertex_count());
    st.spt_ = oracle.tree(0);

    std::vector<Segment> constraints;
    for (int v = 0; v < n; ++v) {
        const int p = st.spt_.parent[static_cast<std::size_t>(v)];
        if (p >= 0) constraints.push_back({domain.vertex(v), domain.vertex(p)});
    }
    st.tri_ = triangulate(domain, constraints);
    const auto& tri = st.tri_;
    const Sphere sphere = build_sphere(domain, tri);
    st.sphere_ = {n + 1, static_cast<int>(sphere.edges.size()), static_cast<int>(sphere.face_edges.size())};

    // Spanning tree of the sphere: shortest path tree plus the abstract edge
    // to the root. Rooted at the abstract vertex.
    const std::size_t nv = static_cast<std::size_t>(n) + 1;
    std::vector<int> tparent(nv, -1);
    std::vector<bool> tree_edge(sphere.edges.size(), false);
    for (int v = 0; v < n; ++v) {
        const int p = st.spt_.parent[static_cast<std::size_t>(v)];
        if (p < 0) continue;
        const int e = tri.edge_id(v, p);
        if (e < 0) throw Error("shortest path tree edge missing from triangulation");
        tree_edge[static_cast<std::size_t>(e)] = true;
        tparent[static_cast<std::size_t>(v)] = p;
    }
    tparent[0] = sphere.inf;
    for (std::size_t e = tri.edges.size(); e < sphere.edges.size(); ++e) {
        if (sphere.edges[e] == std::array<int, 2>{sphere.inf, 0}) tree_edge[e] = true;
    }
    if (std::count(tree_edge.begin(), tree_edge.end(), true) != n) throw Error("spanning tree has wrong size");
    std::vector<int> depth(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) {
        int d = 0;
        for (int x = static_cast<int>(v); tparent[static_cast<std::size_t>(x)] >= 0; x = tparent[static_cast<std::size_t>(x)]) ++d;
        depth[v] = d;
    }
    auto climb = [&](int a, int b) {
        // Paths a->lca and b->lca.
        std::vector<int> pa{a}, pb{b};
        while (a != b) {
            if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
                a = tparent[static_cast<std::size_t>(a)];
                pa.push_back(a);
            } else {
                b = tparent[static_cast<std::size_t>(b)];
                pb.push_back(b);
            }
        }
        return std::pair{pa, pb};
    };

    // Dual tree over faces through non-tree edges.
    const std::size_t nf = sphere.face_edges.size();
    std::vector<std::vector<std::pair<int, int>>> dual(nf);  // (face, edge)
    int dual_edges = 0;
    for (std::size_t e = 0; e < sphere.edges.size(); ++e) {
        if (tree_edge[e]) continue;
        const auto [f, g] = sphere.edge_faces[e];
        dual[static_cast<std::size_t>(f)].emplace_back(g, static_cast<int>(e));
        dual[static_cast<std::size_t>(g)].emplace_back(f, static_cast<int>(e));
        ++dual_edges;
    }
    if (dual_edges != static_cast<int>(nf) - 1) throw Error("dual of the cotree is not a tree");

    st.leaf_of_.assign(tri.triangles.size(), -1);
    std::vector<char> in_set(nf, 0);

    struct Work {
        std::vector<int> faces;
        int parent;
        int level;
    };
    std::deque<Work> queue;
    {
        std::vector<int> all(nf);
        for (std::size_t f = 0; f < nf; ++f) all[f] = static_cast<int>(f);
        queue.push_back({all, -1, 0});
    }
    // Breadth-first, so node ids grow with level.
    while (!queue.empty()) {
        Work w = std::move(queue.front());
        queue.pop_front();
        SeparatorNode nd;
        nd.id = static_cast<int>(st.nodes_.size());
        nd.parent = w.parent;
        nd.level = w.level;
        for (int f : w.faces) {
            if (sphere.weight[static_cast<std::size_t>(f)] > 0) nd.triangles.push_back(f);
        }
        std::sort(nd.triangles.begin(), nd.triangles.end());
        if (nd.parent >= 0) st.nodes_[static_cast<std::size_t>(nd.parent)].children.push_back(nd.id);
        const int W = static_cast<int>(nd.triangles.size());
        if (W == 1) {
            st.leaf_of_[static_cast<std::size_t>(nd.triangles[0])] = nd.id;
            st.nodes_.push_back(std::move(nd));
            continue;
        }

        for (int f : w.faces) in_set[static_cast<std::size_t>(f)] = 1;
        // Root the restricted dual tree and accumulate subtree weights.
        std::vector<int> order, parent_face, parent_edge;
        std::map<int, int> slot;
        order.push_back(w.faces.front());
        parent_face.push_back(-1);
        parent_edge.push_back(-1);
        slot[w.faces.front()] = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const int f = order[i];
            for (const auto& [g, e] : dual[static_cast<std::size_t>(f)]) {
                if (!in_set[static_cast<std::size_t>(g)] || g == parent_face[i]) continue;
                slot[g] = static_cast<int>(order.size());
                order.push_back(g);
                parent_face.push_back(f);
                parent_edge.push_back(e);
            }
        }
        if (order.size() != w.faces.size()) throw Error("restricted dual tree is disconnected");
        std::vector<int> sub(order.size(), 0);
        for (std::size_t i = order.size(); i-- > 0;) {
            sub[i] += sphere.weight[static_cast<std::size_t>(order[i])];
            if (parent_face[i] >= 0) sub[static_cast<std::size_t>(slot[parent_face[i]])] += sub[i];
        }
        std::tuple<int, int, int, int> best{W + 1, 0, 0, 0};
        std::size_t best_i = 0;
        for (std::size_t i = 1; i < order.size(); ++i) {
            const int e = parent_edge[i];
            const auto& ed = sphere.edges[static_cast<std::size_t>(e)];
            const std::tuple<int, int, int, int> key{std::max(sub[i], W - sub[i]), std::min(ed[0], ed[1]),
                                                     std::max(ed[0], ed[1]), e};
            if (key < best) {
                best = key;
                best_i = i;
            }
        }
        const int cut_edge = std::get<3>(best);
        const auto [u, v] = sphere.edges[static_cast<std::size_t>(cut_edge)];
        nd.cut = {u, v};

        // Side A: the subtree below the cut.
        std::vector<char> side(order.size(), 0);
        side[best_i] = 1;
        for (std::size_t i = best_i + 1; i < order.size(); ++i) {
            if (parent_face[i] >= 0 && side[static_cast<std::size_t>(slot[parent_face[i]])]) side[i] = 1;
        }
        std::vector<int> a_faces, b_faces;
        for (std::size_t i = 0; i < order.size(); ++i) (side[i] ? a_faces : b_faces).push_back(order[i]);

        // Separator: real parts of the cycle.
        auto [pu, pv] = climb(u, v);
        auto strip = [&](std::vector<int> p) {
            std::erase(p, sphere.inf);
            return p;
        };
        std::vector<std::vector<int>> paths;
        for (auto p : {strip(pu), strip(pv)}) {
            if (!p.empty()) paths.push_back(std::move(p));
        }
        if (sphere.real[static_cast<std::size_t>(cut_edge)]) paths.push_back({u, v});
        // A single vertex already lying on another path adds nothing.
        std::vector<std::vector<int>> kept;
        for (std::size_t i = 0; i < paths.size(); ++i) {
            if (paths[i].size() == 1) {
                bool covered = false;
                for (std::size_t j = 0; j < paths.size(); ++j) {
                    if (j != i && paths[j].size() > 1 &&
                        std::find(paths[j].begin(), paths[j].end(), paths[i][0]) != paths[j].end()) {
                        covered = true;
                    }
                }
                if (covered) continue;
            }
            kept.push_back(paths[i]);
        }
        nd.paths = std::move(kept);

        std::vector<char> tri_in(tri.triangles.size(), 0);
        for (int t : nd.triangles) tri_in[static_cast<std::size_t>(t)] = 1;
        for (const auto& p : nd.paths) {
            for (std::size_t i = 0; i < p.size(); ++i) {
                nd.q_vertices.push_back(p[i]);
                if (i + 1 == p.size()) break;
                const int e = tri.edge_id(p[i], p[i + 1]);
                nd.q_edges.push_back(e);
                const auto& sides = tri.edge_triangles[static_cast<std::size_t>(e)];
                const bool touches = (sides[0] >= 0 && tri_in[static_cast<std::size_t>(sides[0])]) ||
                                     (sides[1] >= 0 && tri_in[static_cast<std::size_t>(sides[1])]);
                if (!touches) ++nd.outside_edges;
            }
        }
        for (auto* v : {&nd.q_edges, &nd.q_vertices}) {
            std::sort(v->begin(), v->end());
            v->erase(std::unique(v->begin(), v->end()), v->end());
        }

        for (int f : w.faces) in_set[static_cast<std::size_t>(f)] = 0;
        const int level = nd.level;
        const int id = nd.id;
        st.nodes_.push_back(std::move(nd));
        for (auto* part : {&a_faces, &b_faces}) {
            int weight = 0;
            for (int f : *part) weight += sphere.weight[static_cast<std::size_t>(f)];
            if (weight > 0) queue.push_back({std::move(*part), id, level + 1});
        }
    }

    // Pointers: nodes are in breadth-first order, so the first writer is the
    // highest node.
    st.edge_pointer_.assign(tri.edges.size(), -1);
    for (const auto& nd : st.nodes_) {
        std::vector<char> tri_in(tri.triangles.size(), 0);
        for (int t : nd.triangles) tri_in[static_cast<std::size_t>(t)] = 1;
        for (int e : nd.q_edges) {
            const auto& sides = tri.edge_triangles[static_cast<std::size_t>(e)];
            const bool bounds = (sides[0] >= 0 && tri_in[static_cast<std::size_t>(sides[0])]) ||
                                (sides[1] >= 0 && tri_in[static_cast<std::size_t>(sides[1])]);
            int& ep = st.edge_pointer_[static_cast<std::size_t>(e)];
            if (bounds && ep < 0) ep = nd.id;
        }
    }
    return st;
}

}  // namespace geodesic
