#pragma once

#include <array>
#include <vector>

#include "geodesic/exact_oracle.hpp"
#include "geodesic/geometry.hpp"
#include "geodesic/triangulation.hpp"

namespace geodesic {

struct SeparatorNode {
    int id = -1;
    int parent = -1;
    int level = 0;
    std::vector<int> triangles;           // sorted triangle ids of P_nu
    std::vector<std::vector<int>> paths;  // Q_nu as vertex-id polylines
    std::vector<int> children;            // empty or two ids
    std::array<int, 2> cut{-1, -1};       // closing edge of the fundamental cycle (n = abstract vertex)
    std::vector<int> q_edges;             // sorted triangulation edge ids used by Q_nu
    std::vector<int> q_vertices;          // sorted vertex ids on Q_nu
    int outside_edges = 0;                // Q edges bordering no triangle of P_nu

    bool leaf() const { return children.empty(); }
};

/// Root-to-leaf path for a point. When the point lies on a separator edge or
/// vertex, `pointer` names the first node on the path whose Q passes through it
/// (for edge points this is edge_pointer()).
struct TreePath {
    std::vector<int> nodes;  // root first, leaf last
    int triangle = -1;
    int pointer = -1;

    /// nodes truncated after the pointer node when one is set.
    std::vector<int> effective() const;
};

class SeparatorTree {
public:
    SeparatorTree() = default;

    const PolygonDomain& domain() const { return domain_; }
    const Triangulation& triangulation() const { return tri_; }
    const ShortestPathTree& spt() const { return spt_; }
    const std::vector<SeparatorNode>& nodes() const { return nodes_; }
    const SeparatorNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
    int root() const { return 0; }
    int height() const;
    int leaf_of(int triangle) const { return leaf_of_[static_cast<std::size_t>(triangle)]; }

    /// Highest node whose separator uses triangulation edge e while e bounds
    /// one of the node's triangles, or -1.
    int edge_pointer(int e) const { return edge_pointer_[static_cast<std::size_t>(e)]; }

    /// P_nu as a region: boundary = unshared edges of the node's triangles.
    Region node_region(int id) const;
    std::vector<Point> path_points(int node, int path) const;

    TreePath root_to_leaf(Point p) const;

    /// Sphere statistics (vertices, edges, faces) of the completed graph.
    std::array<int, 3> sphere_counts() const { return sphere_; }

    friend SeparatorTree build_separator_tree(const PolygonDomain& domain);
    friend SeparatorTree build_separator_tree(const ExactOracle& oracle);

private:
    PolygonDomain domain_;
    Triangulation tri_;
    ShortestPathTree spt_;
    std::vector<SeparatorNode> nodes_;
    std::vector<int> leaf_of_;
    std::vector<int> edge_pointer_;
    std::array<int, 3> sphere_{};
};

SeparatorTree build_separator_tree(const PolygonDomain& domain);
SeparatorTree build_separator_tree(const ExactOracle& oracle);

}  // namespace geodesic
