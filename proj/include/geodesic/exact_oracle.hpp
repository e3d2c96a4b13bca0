#pragma once

#include <vector>

#include "geodesic/geometry.hpp"

namespace geodesic {

struct ExactPath {
    double length = 0.0;
    std::vector<Point> path;  // s, polygon vertices..., t
};

struct ShortestPathTree {
    int root = 0;
    std::vector<int> parent;    // -1 at the root
    std::vector<double> dist;
    /// Vertex ids from v up to the root.
    std::vector<int> path_to_root(int v) const;
};

/// Brute-force geodesic distances: vertex visibility graph plus Dijkstra from
/// every vertex. Queries extend the graph with s and t on the fly.
class ExactOracle {
public:
    explicit ExactOracle(PolygonDomain domain);

    const PolygonDomain& domain() const { return domain_; }
    std::size_t vertex_count() const { return n_; }

    /// Vertex pairs joined by a visible segment that passes through no third
    /// vertex, as (u, v) with u < v.
    const std::vector<std::array<int, 2>>& visibility_edges() const { return vis_edges_; }

    double vertex_distance(int u, int v) const { return dist_[index(u, v)]; }
    /// Polygon vertices of a shortest u-v path, u first.
    std::vector<int> vertex_path(int u, int v) const;
    ShortestPathTree tree(int root) const;

    /// Geodesic distances from an arbitrary point to every polygon vertex.
    std::vector<double> vertex_distances_from(Point s) const;

    ExactPath distance(Point s, Point t) const;
    double distance_value(Point s, Point t) const;
    /// Like distance_value but reusing vertex_distances_from(s).
    double distance_value(Point s, const std::vector<double>& from_s, Point t) const;

private:
    std::size_t index(int u, int v) const {
        return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
    }
    void check_inside(Point p) const;
    std::vector<int> visible_vertices(Point p) const;

    PolygonDomain domain_;
    std::size_t n_ = 0;
    std::vector<std::array<int, 2>> vis_edges_;
    std::vector<std::vector<std::pair<int, double>>> adj_;
    std::vector<double> dist_;   // n x n
    std::vector<int> parent_;    // parent_[root*n + v]
};

ExactPath exact_distance(const PolygonDomain& domain, Point s, Point t);
ShortestPathTree shortest_path_tree(const PolygonDomain& domain, int root);

}  // namespace geodesic
