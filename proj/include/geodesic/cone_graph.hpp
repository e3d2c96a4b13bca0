#pragma once

#include <optional>
#include <span>
#include <vector>

#include "geodesic/geometry.hpp"
#include "geodesic/graph.hpp"

namespace geodesic {

/// A single cone: directions within half_angle of `direction` around apex.
struct Cone {
    Point apex;
    Point direction;  // unit
    double half_angle = 0.0;

    bool contains(Point p) const;
    /// |direction . (p - apex)|
    double cone_distance(Point p) const;
};

/// K equal cones of angle 2*pi/K <= eps/8 around the origin. Cone i holds the
/// directions with angle in (i*theta, (i+1)*theta]: the counterclockwise
/// bounding ray is included, the clockwise one is not.
class ConeFamily {
public:
    explicit ConeFamily(double eps);

    double eps() const { return eps_; }
    int size() const { return k_; }
    double angle() const { return theta_; }

    /// Cone holding direction d (d != 0).
    int index_of(Point d) const;
    /// Unit axis of cone i (its bisector).
    Point axis(int i) const;
    /// Unit direction of the clockwise bounding ray of cone i (angle i*theta).
    Point boundary(int i) const;
    Cone cone(int i, Point apex) const;

    /// Cone index of b seen from a, and d^C(a, b).
    double cone_distance(int i, Point a, Point b) const { return std::abs(dot(axis(i), b - a)); }

private:
    double eps_;
    int k_;
    double theta_;
    std::vector<Point> axes_;
    std::vector<Point> bounds_;
};

ConeFamily build_family(double eps);

/// A candidate point with an id used for tie-breaking.
struct Candidate {
    Point point;
    int id;
};

/// Visible candidate in the cone minimizing cone distance (ties: smallest id);
/// candidates equal to the apex are skipped.
std::optional<int> minimal_cone_neighbor(const Region& region, const Cone& cone, std::span<const Candidate> candidates);

/// For each family cone translated to p, the index into `candidates` of the
/// minimal visible neighbor, or -1.
std::vector<int> minimal_cone_neighbors(const Region& region, const ConeFamily& family, Point p,
                                        std::span<const Candidate> candidates);

/// Clarkson's cone graph over the vertices of a region. Local vertex i is
/// region.vertex_ids()[i].
struct ConeGraph {
    std::vector<Point> points;
    std::vector<int> ids;                     // global ids of the local vertices
    std::vector<std::vector<int>> neighbors;  // [v][cone] local id or -1
    std::vector<std::array<int, 2>> edges;    // undirected, (min, max), sorted
    Adjacency adj;
    int cones = 0;

    std::vector<Candidate> candidates() const;
};

ConeGraph build_cone_graph(const Region& region, const ConeFamily& family);
ConeGraph build_cone_graph(const PolygonDomain& domain, const ConeFamily& family);

/// Outgoing neighbors of s in G[s], one entry per cone (local id or -1).
std::vector<int> extend(const ConeGraph& graph, const Region& region, const ConeFamily& family, Point s);

}  // namespace geodesic
