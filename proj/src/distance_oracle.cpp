#include "geodesic/distance_oracle.hpp"

#include <algorithm>

namespace geodesic {

namespace {

bool in_closed_triangle(const Triangulation& tri, int t, Point p) {
    const auto& v = tri.triangles[static_cast<std::size_t>(t)];
    for (int i = 0; i < 3; ++i) {
        if (orientation(tri.points[static_cast<std::size_t>(v[i])], tri.points[static_cast<std::size_t>(v[(i + 1) % 3])], p) < 0)
            return false;
    }
    return true;
}

bool share_triangle(const Triangulation& tri, Point s, Point t) {
    for (std::size_t i = 0; i < tri.triangles.size(); ++i) {
        if (in_closed_triangle(tri, static_cast<int>(i), s) && in_closed_triangle(tri, static_cast<int>(i), t)) return true;
    }
    return false;
}

}  // namespace

DistanceOracle::DistanceOracle(PolygonDomain domain, double eps) : eps_(eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw Error("eps must lie in (0, 1]");
    tree_ = build_separator_tree(domain);
    structures_.resize(tree_.nodes().size());
    for (const SeparatorNode& nd : tree_.nodes()) {
        if (nd.paths.empty()) continue;
        const Region region = tree_.node_region(nd.id);
        for (std::size_t j = 0; j < nd.paths.size(); ++j) {
            ArcPath q(tree_.path_points(nd.id, static_cast<int>(j)), nd.paths[j]);
            structures_[static_cast<std::size_t>(nd.id)].emplace_back(region, std::move(q), eps);
        }
    }
}

std::size_t DistanceOracle::structure_count() const {
    std::size_t n = 0;
    for (const auto& s : structures_) n += s.size();
    return n;
}

std::size_t DistanceOracle::stored_anchor_count() const {
    std::size_t n = 0;
    for (const auto& s : structures_)
        for (const auto& ps : s) n += ps.stored_anchor_count();
    return n;
}

std::vector<LevelStats> DistanceOracle::level_stats() const {
    std::vector<LevelStats> out;
    for (const SeparatorNode& nd : tree_.nodes()) {
        if (static_cast<std::size_t>(nd.level) >= out.size()) out.resize(static_cast<std::size_t>(nd.level) + 1);
        LevelStats& ls = out[static_cast<std::size_t>(nd.level)];
        ls.level = nd.level;
        ++ls.nodes;
        for (const auto& ps : structures_[static_cast<std::size_t>(nd.id)]) {
            ++ls.structures;
            ls.anchors += ps.stored_anchor_count();
            ls.steiner += ps.steiner_count();
            ls.graph_nodes += ps.node_points().size();
        }
    }
    return out;
}

DistanceResult DistanceOracle::query(Point s, Point t) const {
    const PolygonDomain& d = domain();
    if (d.contains(s) == Containment::exterior || d.contains(t) == Containment::exterior)
        throw Error("query point lies outside the domain");
    // Answer in a canonical order so that query(s,t) and query(t,s) agree bit for bit.
    const bool flip = t < s;
    if (flip) std::swap(s, t);

    DistanceResult best;
    if (s == t) {
        best.witness = {s};
    } else if (share_triangle(tree_.triangulation(), s, t)) {
        best.estimate = distance(s, t);
        best.witness = {s, t};
    } else {
        best.estimate = std::numeric_limits<double>::infinity();
        const auto ps = tree_.root_to_leaf(s).effective();
        const auto pt = tree_.root_to_leaf(t).effective();
        for (std::size_t i = 0; i < ps.size() && i < pt.size() && ps[i] == pt[i]; ++i) {
            const auto& list = structures_[static_cast<std::size_t>(ps[i])];
            for (std::size_t j = 0; j < list.size(); ++j) {
                const PathStructure& q = list[j];
                const AnchorSet as = q.query_anchor_set(s);
                const AnchorSet at = q.query_anchor_set(t);
                const ViaResult r = via_q_distance(as, at);
                if (r.value < best.estimate) {
                    best.estimate = r.value;
                    best.witness = q.witness(as, at, r);
                    best.node = ps[i];
                    best.path = static_cast<int>(j);
                }
            }
        }
    }
    if (flip) std::reverse(best.witness.begin(), best.witness.end());
    return best;
}

DistanceOracle build_oracle(const PolygonDomain& domain, double eps) { return DistanceOracle(domain, eps); }

}  // namespace geodesic
