#pragma once

#include <vector>

#include "geodesic/path_structure.hpp"
#include "geodesic/separator_tree.hpp"

namespace geodesic {

struct DistanceResult {
    double estimate = 0.0;
    std::vector<Point> witness;  // obstacle-avoiding polyline from s to t
    int node = -1;               // separator node that produced the estimate, -1 for a direct segment
    int path = -1;
};

struct LevelStats {
    int level = 0;
    int nodes = 0;
    int structures = 0;
    std::size_t anchors = 0;
    std::size_t steiner = 0;
    std::size_t graph_nodes = 0;
};

/// Two-point (1+eps) geodesic distance oracle.
class DistanceOracle {
public:
    DistanceOracle(PolygonDomain domain, double eps);

    const PolygonDomain& domain() const { return tree_.domain(); }
    double eps() const { return eps_; }
    const SeparatorTree& tree() const { return tree_; }
    const std::vector<PathStructure>& structures(int node) const { return structures_[static_cast<std::size_t>(node)]; }
    std::size_t structure_count() const;
    std::size_t stored_anchor_count() const;
    std::vector<LevelStats> level_stats() const;

    /// Throws Error when s or t is outside the domain.
    DistanceResult query(Point s, Point t) const;

private:
    double eps_;
    SeparatorTree tree_;
    std::vector<std::vector<PathStructure>> structures_;
};

DistanceOracle build_oracle(const PolygonDomain& domain, double eps);

}  // namespace geodesic
