#pragma once

#include <utility>
#include <vector>

namespace geodesic {

using Adjacency = std::vector<std::vector<std::pair<int, double>>>;

struct ShortestPaths {
    std::vector<double> dist;  // +inf when unreachable
    std::vector<int> parent;   // -1 at the source and when unreachable
    std::vector<int> path_to(int v) const;  // source first
};

/// Dijkstra; equal-length alternatives resolve to the smaller predecessor id.
ShortestPaths dijkstra(const Adjacency& adj, int source);

}  // namespace geodesic
