#include "geodesic/exact_oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace geodesic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool through_vertex(const std::vector<Point>& pts, int u, int v) {
    const Point a = pts[static_cast<std::size_t>(u)];
    const Point b = pts[static_cast<std::size_t>(v)];
    for (std::size_t w = 0; w < pts.size(); ++w) {
        if (static_cast<int>(w) == u || static_cast<int>(w) == v) continue;
        if (on_segment(pts[w], a, b)) return true;
    }
    return false;
}

}  // namespace

std::vector<int> ShortestPathTree::path_to_root(int v) const {
    std::vector<int> out;
    for (int x = v; x >= 0; x = parent[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

ExactOracle::ExactOracle(PolygonDomain domain) : domain_(std::move(domain)), n_(domain_.vertex_count()) {
    const auto& pts = domain_.vertices();
    const int n = static_cast<int>(n_);
    adj_.assign(n_, {});
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (through_vertex(pts, u, v)) continue;
            if (!domain_.visible(pts[static_cast<std::size_t>(u)], pts[static_cast<std::size_t>(v)])) continue;
            const double w = geodesic::distance(pts[static_cast<std::size_t>(u)], pts[static_cast<std::size_t>(v)]);
            vis_edges_.push_back({u, v});
            adj_[static_cast<std::size_t>(u)].emplace_back(v, w);
            adj_[static_cast<std::size_t>(v)].emplace_back(u, w);
        }
    }
    dist_.assign(n_ * n_, kInf);
    parent_.assign(n_ * n_, -1);
    for (int r = 0; r < n; ++r) {
        // Dijkstra; equal-length alternatives resolve to the smaller predecessor id.
        std::vector<bool> done(n_, false);
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist_[index(r, r)] = 0.0;
        pq.emplace(0.0, r);
        while (!pq.empty()) {
            const auto [d, u] = pq.top();
            pq.pop();
            if (done[static_cast<std::size_t>(u)]) continue;
            done[static_cast<std::size_t>(u)] = true;
            for (const auto& [v, w] : adj_[static_cast<std::size_t>(u)]) {
                if (done[static_cast<std::size_t>(v)]) continue;
                const double nd = d + w;
                double& cur = dist_[index(r, v)];
                int& par = parent_[index(r, v)];
                if (nd < cur || (nd == cur && u < par)) {
                    cur = nd;
                    par = u;
                    pq.emplace(nd, v);
                }
            }
        }
    }
}

std::vector<int> ExactOracle::vertex_path(int u, int v) const {
    std::vector<int> out;
    for (int x = v; x >= 0; x = parent_[index(u, x)]) out.push_back(x);
    std::reverse(out.begin(), out.end());
    return out;
}

ShortestPathTree ExactOracle::tree(int root) const {
    ShortestPathTree t;
    t.root = root;
    t.parent.assign(parent_.begin() + static_cast<std::ptrdiff_t>(index(root, 0)),
                    parent_.begin() + static_cast<std::ptrdiff_t>(index(root, 0) + n_));
    t.dist.assign(dist_.begin() + static_cast<std::ptrdiff_t>(index(root, 0)),
                  dist_.begin() + static_cast<std::ptrdiff_t>(index(root, 0) + n_));
    return t;
}

void ExactOracle::check_inside(Point p) const {
    if (!is_finite(p)) throw Error("query point is not finite");
    if (domain_.contains(p) == Containment::exterior) throw Error("query point lies outside the domain");
}

std::vector<int> ExactOracle::visible_vertices(Point p) const {
    std::vector<int> out;
    for (std::size_t v = 0; v < n_; ++v) {
        if (domain_.visible(p, domain_.vertices()[v])) out.push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<double> ExactOracle::vertex_distances_from(Point s) const {
    check_inside(s);
    std::vector<double> out(n_, kInf);
    for (int a : visible_vertices(s)) {
        const double sa = geodesic::distance(s, domain_.vertex(a));
        for (std::size_t v = 0; v < n_; ++v) out[v] = std::min(out[v], sa + dist_[index(a, static_cast<int>(v))]);
    }
    return out;
}

double ExactOracle::distance_value(Point s, const std::vector<double>& from_s, Point t) const {
    check_inside(t);
    if (domain_.visible(s, t)) return geodesic::distance(s, t);
    double best = kInf;
    for (int b : visible_vertices(t)) best = std::min(best, from_s[static_cast<std::size_t>(b)] + geodesic::distance(domain_.vertex(b), t));
    return best;
}

double ExactOracle::distance_value(Point s, Point t) const {
    check_inside(s);
    check_inside(t);
    if (domain_.visible(s, t)) return geodesic::distance(s, t);
    return distance_value(s, vertex_distances_from(s), t);
}

ExactPath ExactOracle::distance(Point s, Point t) const {
    check_inside(s);
    check_inside(t);
    if (s == t) return {0.0, {s}};
    if (domain_.visible(s, t)) return {geodesic::distance(s, t), {s, t}};
    const auto vs = visible_vertices(s);
    const auto vt = visible_vertices(t);
    double best = kInf;
    int ba = -1, bb = -1;
    for (int a : vs) {
        const double sa = geodesic::distance(s, domain_.vertex(a));
        for (int b : vt) {
            const double len = sa + dist_[index(a, b)] + geodesic::distance(domain_.vertex(b), t);
            if (len < best) {
                best = len;
                ba = a;
                bb = b;
            }
        }
    }
    if (ba < 0) throw Error("no path between query points");
    ExactPath out;
    out.path.push_back(s);
    for (int v : vertex_path(ba, bb)) out.path.push_back(domain_.vertex(v));
    out.path.push_back(t);
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < out.path.size(); ++i) len += geodesic::distance(out.path[i], out.path[i + 1]);
    out.length = len;
    return out;
}

ExactPath exact_distance(const PolygonDomain& domain, Point s, Point t) {
    return ExactOracle(domain).distance(s, t);
}

ShortestPathTree shortest_path_tree(const PolygonDomain& domain, int root) {
    if (root < 0 || static_cast<std::size_t>(root) >= domain.vertex_count()) throw Error("root is not a vertex id");
    return ExactOracle(domain).tree(root);
}

}  // namespace geodesic
