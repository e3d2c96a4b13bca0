#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "geodesic/cone_graph.hpp"
#include "geodesic/voronoi1d.hpp"

namespace geodesic {

/// Dynamic 2D dominance minimum: points (x, y) with value v, query
/// min (v, id) over x >= qx, y >= qy. Scapegoat tree on (x, id) whose nodes
/// carry a MinTreap of their subtree keyed by y.
class DominanceIndex {
public:
    DominanceIndex() = default;
    DominanceIndex(DominanceIndex&&) noexcept = default;
    DominanceIndex& operator=(DominanceIndex&&) noexcept = default;
    ~DominanceIndex();

    void insert(double x, double y, double value, int id);
    void erase(int id);
    std::size_t size() const { return entries_.size(); }
    /// (value, id) minimizing value, ties to the smaller id.
    std::optional<std::pair<double, int>> query(double qx, double qy) const;

private:
    struct Entry {
        double x, y, value;
    };
    struct Node;
    Node* build(std::vector<Node*>& items, int lo, int hi);
    void rebuild(Node*& slot);
    void collect(Node* t, std::vector<Node*>& out, bool live_only);
    void destroy(Node* t);
    void consider(const MinTreap& sec, double qy, std::optional<std::pair<double, int>>& best) const;

    Node* root_ = nullptr;
    std::map<int, Entry> entries_;
    std::size_t total_ = 0;  // nodes in the tree, including deleted ones
};

struct EannHit {
    int id;
    double distance;
};

/// Dynamic Euclidean (1+eps)-close neighbor: one dominance index per cone.
class EuclidAnnIndex {
public:
    explicit EuclidAnnIndex(double eps);

    const ConeFamily& family() const { return family_; }
    void insert(Point site, int id);
    void erase(int id);
    bool contains(int id) const { return sites_.count(id) != 0; }
    std::size_t size() const { return sites_.size(); }
    Point site(int id) const { return sites_.at(id); }

    /// Site with minimal cone distance in the translated cone k at q.
    std::optional<int> cone_candidate(int k, Point q) const;
    std::optional<EannHit> query(Point q) const;

    /// Cone-local coordinates (left, right, along) of p for cone k.
    std::array<double, 3> project(int k, Point p) const;

private:
    ConeFamily family_;
    std::vector<DominanceIndex> cones_;
    std::map<int, Point> sites_;
};

}  // namespace geodesic
