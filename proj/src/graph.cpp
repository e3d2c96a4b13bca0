#include "geodesic/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace geodesic {

std::vector<int> ShortestPaths::path_to(int v) const {
    std::vector<int> out;
    for (int x = v; x >= 0; x = parent[static_cast<std::size_t>(x)]) out.push_back(x);
    std::reverse(out.begin(), out.end());
    return out;
}

ShortestPaths dijkstra(const Adjacency& adj, int source) {
    const std::size_t n = adj.size();
    ShortestPaths sp;
    sp.dist.assign(n, std::numeric_limits<double>::infinity());
    sp.parent.assign(n, -1);
    std::vector<char> done(n, 0);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    sp.dist[static_cast<std::size_t>(source)] = 0.0;
    pq.emplace(0.0, source);
    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (done[static_cast<std::size_t>(u)]) continue;
        done[static_cast<std::size_t>(u)] = 1;
        for (const auto& [v, w] : adj[static_cast<std::size_t>(u)]) {
            const auto vi = static_cast<std::size_t>(v);
            if (done[vi]) continue;
            const double nd = d + w;
            if (nd < sp.dist[vi] || (nd == sp.dist[vi] && u < sp.parent[vi])) {
                sp.dist[vi] = nd;
                sp.parent[vi] = u;
                pq.emplace(nd, v);
            }
        }
    }
    return sp;
}

}  // namespace geodesic
