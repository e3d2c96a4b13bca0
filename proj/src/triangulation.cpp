#include "geodesic/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace geodesic {

int Triangulation::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    const std::array<int, 2> key{u, v};
    const auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key) return -1;
    return static_cast<int>(it - edges.begin());
}

double Triangulation::triangle_area(int t) const {
    const auto& tr = triangles[static_cast<std::size_t>(t)];
    const Point a = points[static_cast<std::size_t>(tr[0])];
    const Point b = points[static_cast<std::size_t>(tr[1])];
    const Point c = points[static_cast<std::size_t>(tr[2])];
    return 0.5 * cross(b - a, c - a);
}

namespace {

using EdgeKey = std::array<int, 2>;

EdgeKey key_of(int u, int v) { return u < v ? EdgeKey{u, v} : EdgeKey{v, u}; }

// Segments sharing an endpoint never conflict here because no inserted
// segment passes through a vertex.
bool conflicts(const std::vector<Point>& pts, EdgeKey s, EdgeKey t) {
    if (s[0] == t[0] || s[0] == t[1] || s[1] == t[0] || s[1] == t[1]) return false;
    return segment_contact(pts[static_cast<std::size_t>(s[0])], pts[static_cast<std::size_t>(s[1])],
                           pts[static_cast<std::size_t>(t[0])], pts[static_cast<std::size_t>(t[1])]) !=
           Contact::none;
}

bool passes_through_vertex(const std::vector<Point>& pts, int u, int v) {
    const Point a = pts[static_cast<std::size_t>(u)];
    const Point b = pts[static_cast<std::size_t>(v)];
    for (std::size_t w = 0; w < pts.size(); ++w) {
        if (static_cast<int>(w) == u || static_cast<int>(w) == v) continue;
        if (on_segment(pts[w], a, b)) return true;
    }
    return false;
}

int vertex_at(const PolygonDomain& domain, Point p) {
    const auto& pts = domain.vertices();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i] == p) return static_cast<int>(i);
    }
    throw Error("constrained segment endpoint is not a domain vertex");
}

// Splits u-v at the vertices lying on its interior.
std::vector<EdgeKey> split_at_vertices(const std::vector<Point>& pts, int u, int v) {
    const Point a = pts[static_cast<std::size_t>(u)];
    const Point b = pts[static_cast<std::size_t>(v)];
    std::vector<std::pair<double, int>> on;
    for (std::size_t w = 0; w < pts.size(); ++w) {
        if (on_segment(pts[w], a, b)) on.emplace_back(dot(pts[w] - a, b - a), static_cast<int>(w));
    }
    std::sort(on.begin(), on.end());
    std::vector<EdgeKey> out;
    for (std::size_t i = 0; i + 1 < on.size(); ++i) out.push_back(key_of(on[i].second, on[i + 1].second));
    return out;
}

}  // namespace

Triangulation triangulate(const PolygonDomain& domain, std::span<const Segment> constrained) {
    const auto& pts = domain.vertices();
    const int n = static_cast<int>(pts.size());
    std::vector<EdgeKey> placed;
    std::vector<bool> is_constrained;

    for (const auto& e : domain.region().edges()) {
        placed.push_back(key_of(e[0], e[1]));
        is_constrained.push_back(false);
    }

    std::vector<EdgeKey> required;
    for (const Segment& s : constrained) {
        const int u = vertex_at(domain, s.a);
        const int v = vertex_at(domain, s.b);
        if (u == v) throw Error("degenerate constrained segment");
        if (!domain.visible(s.a, s.b)) throw Error("constrained segment leaves the domain");
        for (EdgeKey k : split_at_vertices(pts, u, v)) required.push_back(k);
    }
    std::sort(required.begin(), required.end());
    required.erase(std::unique(required.begin(), required.end()), required.end());
    for (std::size_t i = 0; i < required.size(); ++i) {
        for (std::size_t j = i + 1; j < required.size(); ++j) {
            if (conflicts(pts, required[i], required[j])) throw Error("constrained segments cross");
        }
    }
    for (EdgeKey k : required) {
        const auto it = std::find(placed.begin(), placed.end(), k);
        if (it != placed.end()) {
            is_constrained[static_cast<std::size_t>(it - placed.begin())] = true;
            continue;
        }
        for (EdgeKey p : placed) {
            if (conflicts(pts, k, p)) throw Error("constrained segment crosses the boundary");
        }
        placed.push_back(k);
        is_constrained.push_back(true);
    }

    // Greedy maximal set of non-crossing diagonals, shortest first. A maximal
    // non-crossing straight-line graph on the vertex set inside the domain is
    // a triangulation.
    std::vector<std::pair<double, EdgeKey>> candidates;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            candidates.emplace_back(distance(pts[static_cast<std::size_t>(u)], pts[static_cast<std::size_t>(v)]),
                                    EdgeKey{u, v});
        }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [len, k] : candidates) {
        if (std::find(placed.begin(), placed.end(), k) != placed.end()) continue;
        bool ok = true;
        for (EdgeKey p : placed) {
            if (conflicts(pts, k, p)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (passes_through_vertex(pts, k[0], k[1])) continue;
        if (!domain.visible(pts[static_cast<std::size_t>(k[0])], pts[static_cast<std::size_t>(k[1])])) continue;
        placed.push_back(k);
        is_constrained.push_back(false);
    }

    Triangulation tri;
    tri.points = pts;
    std::vector<std::size_t> order(placed.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return placed[a] < placed[b]; });
    for (std::size_t i : order) {
        tri.edges.push_back(placed[i]);
        tri.constrained.push_back(is_constrained[i]);
    }

    // Rotation system: neighbors of each vertex sorted counterclockwise.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& e : tri.edges) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    for (int v = 0; v < n; ++v) {
        const Point o = pts[static_cast<std::size_t>(v)];
        auto upper = [&](int w) {
            const Point d = pts[static_cast<std::size_t>(w)] - o;
            return d.y > 0 || (d.y == 0 && d.x > 0);
        };
        auto& list = adj[static_cast<std::size_t>(v)];
        std::sort(list.begin(), list.end(), [&](int p, int q) {
            const bool up = upper(p), uq = upper(q);
            if (up != uq) return up;
            return orientation(o, pts[static_cast<std::size_t>(p)], pts[static_cast<std::size_t>(q)]) > 0;
        });
    }
    auto prev_ccw = [&](int v, int u) {
        const auto& list = adj[static_cast<std::size_t>(v)];
        const auto it = std::find(list.begin(), list.end(), u);
        const std::size_t i = static_cast<std::size_t>(it - list.begin());
        return list[(i + list.size() - 1) % list.size()];
    };

    std::map<std::pair<int, int>, bool> used;
    for (const auto& e : tri.edges) {
        for (auto [u, v] : {std::pair{e[0], e[1]}, std::pair{e[1], e[0]}}) {
            if (used[{u, v}]) continue;
            std::vector<int> face;
            int a = u, b = v;
            while (!used[{a, b}]) {
                used[{a, b}] = true;
                face.push_back(a);
                const int c = prev_ccw(b, a);
                a = b;
                b = c;
                if (face.size() > tri.edges.size() * 2) break;
            }
            if (face.size() != 3) continue;
            const Point p0 = pts[static_cast<std::size_t>(face[0])];
            const Point p1 = pts[static_cast<std::size_t>(face[1])];
            const Point p2 = pts[static_cast<std::size_t>(face[2])];
            if (orientation(p0, p1, p2) <= 0) continue;
            const Point centroid{(p0.x + p1.x + p2.x) / 3.0, (p0.y + p1.y + p2.y) / 3.0};
            if (domain.contains(centroid) != Containment::interior) continue;
            std::array<int, 3> t{face[0], face[1], face[2]};
            std::rotate(t.begin(), std::min_element(t.begin(), t.end()), t.end());
            tri.triangles.push_back(t);
        }
    }
    std::sort(tri.triangles.begin(), tri.triangles.end());

    const std::size_t expected = static_cast<std::size_t>(n) + 2 * domain.hole_count() - 2;
    if (tri.triangles.size() != expected) {
        throw Error("triangulation produced " + std::to_string(tri.triangles.size()) + " triangles, expected " +
                    std::to_string(expected));
    }

    tri.edge_triangles.assign(tri.edges.size(), {-1, -1});
    tri.neighbors.assign(tri.triangles.size(), {-1, -1, -1});
    tri.triangle_edges.assign(tri.triangles.size(), {-1, -1, -1});
    tri.vertex_edges.assign(static_cast<std::size_t>(n), {});
    for (std::size_t e = 0; e < tri.edges.size(); ++e) {
        tri.vertex_edges[static_cast<std::size_t>(tri.edges[e][0])].push_back(static_cast<int>(e));
        tri.vertex_edges[static_cast<std::size_t>(tri.edges[e][1])].push_back(static_cast<int>(e));
    }
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
        for (int i = 0; i < 3; ++i) {
            const int e = tri.edge_id(tri.triangles[t][static_cast<std::size_t>(i)],
                                      tri.triangles[t][static_cast<std::size_t>((i + 1) % 3)]);
            if (e < 0) throw Error("triangulation is inconsistent");
            tri.triangle_edges[t][static_cast<std::size_t>(i)] = e;
            auto& side = tri.edge_triangles[static_cast<std::size_t>(e)];
            (side[0] < 0 ? side[0] : side[1]) = static_cast<int>(t);
        }
    }
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
        for (int i = 0; i < 3; ++i) {
            const auto& side = tri.edge_triangles[static_cast<std::size_t>(tri.triangle_edges[t][static_cast<std::size_t>(i)])];
            tri.neighbors[t][static_cast<std::size_t>(i)] = side[0] == static_cast<int>(t) ? side[1] : side[0];
        }
    }
    return tri;
}

Location locate(const Triangulation& tri, Point p) {
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
        const auto& tr = tri.triangles[t];
        int zero = 0;
        bool inside = true;
        std::array<int, 3> o{};
        for (int i = 0; i < 3; ++i) {
            o[static_cast<std::size_t>(i)] = orientation(tri.points[static_cast<std::size_t>(tr[static_cast<std::size_t>(i)])],
                                                         tri.points[static_cast<std::size_t>(tr[static_cast<std::size_t>((i + 1) % 3)])], p);
            if (o[static_cast<std::size_t>(i)] < 0) inside = false;
            if (o[static_cast<std::size_t>(i)] == 0) ++zero;
        }
        if (!inside) continue;
        Location loc;
        loc.triangle = static_cast<int>(t);
        for (int i = 0; i < 3; ++i) {
            if (tri.points[static_cast<std::size_t>(tr[static_cast<std::size_t>(i)])] == p) loc.vertex = tr[static_cast<std::size_t>(i)];
        }
        if (zero > 0) {
            for (int i = 0; i < 3; ++i) {
                if (o[static_cast<std::size_t>(i)] == 0) {
                    loc.edge = tri.triangle_edges[t][static_cast<std::size_t>(i)];
                    break;
                }
            }
        }
        return loc;
    }
    throw Error("point lies outside the domain");
}

std::vector<int> edges_through(const Triangulation& tri, const Location& loc) {
    if (loc.vertex >= 0) return tri.vertex_edges[static_cast<std::size_t>(loc.vertex)];
    if (loc.edge >= 0) return {loc.edge};
    return {};
}

}  // namespace geodesic
