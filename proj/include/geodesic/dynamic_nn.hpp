#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "geodesic/distance_oracle.hpp"
#include "geodesic/euclid_ann.hpp"
#include "geodesic/voronoi1d.hpp"

namespace geodesic {

struct SiteRecord {
    int id = -1;
    Point position;
    int leaf = -1;                              // leaf node holding it, -1 for separator sites
    std::vector<std::pair<int, int>> paths;     // (node, path) indexes it entered
};

struct NNResult {
    int site = -1;
    double estimate = 0.0;
    std::vector<Point> witness;  // filled only on request
};

/// Dynamic (1+eps)-close geodesic nearest neighbor over a fixed domain.
class NNIndex {
public:
    NNIndex(const PolygonDomain& domain, double eps);
    explicit NNIndex(std::shared_ptr<const DistanceOracle> backbone);

    const DistanceOracle& backbone() const { return *oracle_; }
    std::shared_ptr<const DistanceOracle> shared_backbone() const { return oracle_; }
    double eps() const { return oracle_->eps(); }

    void insert(Point site, int id);
    void erase(int id);
    std::size_t size() const { return sites_.size(); }
    const std::map<int, SiteRecord>& sites() const { return sites_; }

    std::optional<NNResult> query(Point q, bool with_witness = false) const;

    const PathSiteIndex& path_index(int node, int path) const;
    /// Leaf structure or nullptr when the leaf never held a site.
    const EuclidAnnIndex* leaf_index(int leaf) const;

private:
    std::shared_ptr<const DistanceOracle> oracle_;
    std::vector<std::vector<PathSiteIndex>> paths_;
    std::map<int, EuclidAnnIndex> leaves_;
    std::map<int, SiteRecord> sites_;
};

}  // namespace geodesic
