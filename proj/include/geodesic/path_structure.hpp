#pragma once

#include <limits>
#include <span>
#include <vector>

#include "geodesic/cone_graph.hpp"
#include "geodesic/geometry.hpp"
#include "geodesic/graph.hpp"

namespace geodesic {

/// A polyline through polygon vertices with cumulative arc length from its
/// first vertex.
struct ArcPath {
    std::vector<Point> points;
    std::vector<int> ids;
    std::vector<double> prefix;

    ArcPath() = default;
    ArcPath(std::vector<Point> pts, std::vector<int> vertex_ids);

    double total() const { return prefix.back(); }
    std::size_t edge_count() const { return points.size() - 1; }
    /// Point at arc coordinate `arc` on edge `edge`.
    Point at(double arc, int edge) const;
    /// Vertices strictly between two positions, in order from the first.
    std::vector<Point> between(double arc_a, double arc_b) const;
};

struct ArcWeight {
    double arc;
    double weight;
};

/// Anchor pruning along a path: start at the lightest candidate (ties:
/// smallest arc), drop candidates dominated by it, then sweep outward keeping
/// b when (1+eps2) w(b) < w(prev) + |arc(prev) - arc(b)|. Returns indices into
/// `candidates`, ordered by arc.
std::vector<int> greedy_prune(std::span<const ArcWeight> candidates, double eps2);

struct Anchor {
    double arc = 0.0;
    int edge = 0;
    double weight = 0.0;
    Point point;
    int node = -1;        // continuous-graph node (vertex anchors)
    int via = -1;         // query anchors: cone neighbor used, -1 for a direct hit
    int via_anchor = -1;  // index into the neighbor's anchor list
};

struct AnchorSet {
    Point owner;
    std::vector<Anchor> anchors;  // ordered by arc

    bool empty() const { return anchors.empty(); }
    std::size_t size() const { return anchors.size(); }
};

struct ViaResult {
    double value = std::numeric_limits<double>::infinity();
    int a = -1;  // anchor index in the first set
    int b = -1;  // anchor index in the second set
};

/// min over anchor pairs of w_a + (w_b + |arc_a - arc_b|).
ViaResult via_q_distance(const AnchorSet& first, const AnchorSet& second);

/// Continuous graph and anchor sets for one separator path inside one region.
class PathStructure {
public:
    PathStructure(Region region, ArcPath path, double eps);

    const Region& region() const { return region_; }
    const ArcPath& path() const { return path_; }
    const ConeFamily& family() const { return family_; }
    const ConeGraph& cone_graph() const { return cones_; }
    double eps() const { return eps_; }
    double eps2() const { return eps_ / 9.0; }
    std::size_t anchor_bound() const;

    /// Continuous graph: nodes 0..V-1 are the region's vertices (cone graph
    /// order), then path vertices outside the region, then Steiner points.
    const Adjacency& graph() const { return adj_; }
    const std::vector<Point>& node_points() const { return node_points_; }
    std::size_t steiner_count() const { return steiner_count_; }
    /// Path nodes sorted by arc, as (arc, edge, node).
    struct PathNode {
        double arc;
        int edge;
        int node;
    };
    const std::vector<PathNode>& path_nodes() const { return chain_; }

    /// X_Q(p): first visible hits of the family's boundary rays from p.
    std::vector<PathNode> ray_hits(Point p) const;

    std::size_t vertex_count() const { return cones_.points.size(); }
    const AnchorSet& vertex_anchors(int v) const { return vertex_anchors_[static_cast<std::size_t>(v)]; }
    /// Polyline of the continuous-graph path realizing a vertex anchor.
    std::vector<Point> vertex_route(int v, int anchor) const;

    /// Anchors for an arbitrary point of the region.
    AnchorSet query_anchor_set(Point s) const;
    /// Candidate pool size of the last query_anchor_set call for s (X'_Q(s)).
    std::size_t candidate_count(Point s) const;
    /// Polyline from the owner to anchor i of a query anchor set.
    std::vector<Point> route(const AnchorSet& set, int i) const;

    /// Polyline s -> anchor a -> along the path -> anchor b -> t.
    std::vector<Point> witness(const AnchorSet& s, const AnchorSet& t, const ViaResult& r) const;

    std::size_t stored_anchor_count() const;

private:
    std::vector<ArcWeight> query_candidates(Point s, std::vector<Anchor>& out) const;

    Region region_;
    ArcPath path_;
    double eps_;
    ConeFamily family_;
    ConeGraph cones_;
    std::vector<Point> node_points_;
    Adjacency adj_;
    std::vector<PathNode> chain_;
    std::size_t steiner_count_ = 0;
    std::vector<AnchorSet> vertex_anchors_;
    std::vector<std::vector<std::vector<int>>> vertex_routes_;  // [v][anchor] node ids
};

}  // namespace geodesic
