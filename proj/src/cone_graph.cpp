#include "geodesic/cone_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace geodesic {

bool Cone::contains(Point p) const {
    const Point v = p - apex;
    if (v.x == 0.0 && v.y == 0.0) return false;
    const double a = std::atan2(cross(direction, v), dot(direction, v));
    return -half_angle < a && a <= half_angle;
}

double Cone::cone_distance(Point p) const { return std::abs(dot(direction, p - apex)); }

ConeFamily::ConeFamily(double eps) : eps_(eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw Error("eps must lie in (0, 1]");
    k_ = static_cast<int>(std::ceil(16.0 * std::numbers::pi / eps));
    theta_ = 2.0 * std::numbers::pi / k_;
    for (int i = 0; i < k_; ++i) {
        const double mid = (i + 0.5) * theta_;
        axes_.push_back({std::cos(mid), std::sin(mid)});
        bounds_.push_back({std::cos(i * theta_), std::sin(i * theta_)});
    }
}

int ConeFamily::index_of(Point d) const {
    double a = std::atan2(d.y, d.x);
    if (a <= 0.0) a += 2.0 * std::numbers::pi;
    const int i = static_cast<int>(std::ceil(a / theta_)) - 1;
    return std::clamp(i, 0, k_ - 1);
}

Point ConeFamily::axis(int i) const { return axes_[static_cast<std::size_t>(i)]; }

Point ConeFamily::boundary(int i) const { return bounds_[static_cast<std::size_t>(i)]; }

Cone ConeFamily::cone(int i, Point apex) const { return Cone{apex, axis(i), 0.5 * theta_}; }

ConeFamily build_family(double eps) { return ConeFamily(eps); }

std::optional<int> minimal_cone_neighbor(const Region& region, const Cone& cone, std::span<const Candidate> candidates) {
    std::vector<std::tuple<double, int, int>> order;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Point c = candidates[i].point;
        if (c == cone.apex || !cone.contains(c)) continue;
        order.emplace_back(cone.cone_distance(c), candidates[i].id, static_cast<int>(i));
    }
    std::sort(order.begin(), order.end());
    for (const auto& [d, id, i] : order) {
        if (region.visible(cone.apex, candidates[static_cast<std::size_t>(i)].point)) return i;
    }
    return std::nullopt;
}

std::vector<int> minimal_cone_neighbors(const Region& region, const ConeFamily& family, Point p,
                                        std::span<const Candidate> candidates) {
    std::vector<std::tuple<int, double, int, int>> order;  // cone, d^C, id, index
    order.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Point c = candidates[i].point;
        if (c == p) continue;
        const int k = family.index_of(c - p);
        order.emplace_back(k, family.cone_distance(k, p, c), candidates[i].id, static_cast<int>(i));
    }
    std::sort(order.begin(), order.end());
    std::vector<int> out(static_cast<std::size_t>(family.size()), -1);
    for (const auto& [k, d, id, i] : order) {
        if (out[static_cast<std::size_t>(k)] >= 0) continue;
        if (region.visible(p, candidates[static_cast<std::size_t>(i)].point)) out[static_cast<std::size_t>(k)] = i;
    }
    return out;
}

std::vector<Candidate> ConeGraph::candidates() const {
    std::vector<Candidate> out;
    for (std::size_t i = 0; i < points.size(); ++i) out.push_back({points[i], ids[i]});
    return out;
}

ConeGraph build_cone_graph(const Region& region, const ConeFamily& family) {
    ConeGraph g;
    g.cones = family.size();
    g.ids = region.vertex_ids();
    for (int id : g.ids) g.points.push_back(region.point(id));
    const auto cands = g.candidates();
    for (std::size_t v = 0; v < g.points.size(); ++v) {
        g.neighbors.push_back(minimal_cone_neighbors(region, family, g.points[v], cands));
        for (int w : g.neighbors.back()) {
            if (w < 0) continue;
            const int a = std::min(static_cast<int>(v), w);
            const int b = std::max(static_cast<int>(v), w);
            g.edges.push_back({a, b});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    g.adj.assign(g.points.size(), {});
    for (const auto& e : g.edges) {
        const double w = distance(g.points[static_cast<std::size_t>(e[0])], g.points[static_cast<std::size_t>(e[1])]);
        g.adj[static_cast<std::size_t>(e[0])].emplace_back(e[1], w);
        g.adj[static_cast<std::size_t>(e[1])].emplace_back(e[0], w);
    }
    return g;
}

ConeGraph build_cone_graph(const PolygonDomain& domain, const ConeFamily& family) {
    return build_cone_graph(domain.region(), family);
}

std::vector<int> extend(const ConeGraph& graph, const Region& region, const ConeFamily& family, Point s) {
    const auto cands = graph.candidates();
    return minimal_cone_neighbors(region, family, s, cands);
}

}  // namespace geodesic
