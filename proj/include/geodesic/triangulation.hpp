#pragma once

#include <array>
#include <span>
#include <vector>

#include "geodesic/geometry.hpp"

namespace geodesic {

/// Triangulation of a polygonal domain using only the domain's vertices.
struct Triangulation {
    std::vector<Point> points;
    /// Counterclockwise vertex triples.
    std::vector<std::array<int, 3>> triangles;
    /// Undirected edges as (min id, max id), sorted.
    std::vector<std::array<int, 2>> edges;
    /// Triangles on each side of an edge; -1 where the side is outside.
    std::vector<std::array<int, 2>> edge_triangles;
    /// neighbors[t][i] is the triangle across edge (v_i, v_{i+1}), or -1.
    std::vector<std::array<int, 3>> neighbors;
    /// Edge ids of the three sides of each triangle, aligned with neighbors.
    std::vector<std::array<int, 3>> triangle_edges;
    /// Incident edge ids per vertex.
    std::vector<std::vector<int>> vertex_edges;
    std::vector<bool> constrained;

    /// Edge id joining u and v, or -1.
    int edge_id(int u, int v) const;
    double triangle_area(int t) const;
};

/// Triangulates the domain so that every constrained segment (endpoints at
/// domain vertices) is a union of triangulation edges.
Triangulation triangulate(const PolygonDomain& domain, std::span<const Segment> constrained = {});

struct Location {
    int triangle = -1;  // lowest-id triangle whose closure contains the point
    int edge = -1;      // set when the point lies on an edge of that triangle
    int vertex = -1;    // set when the point is a triangulation vertex
};

/// Point location by scanning; throws Error for exterior points.
Location locate(const Triangulation& tri, Point p);

/// Edge ids whose closed segment contains p.
std::vector<int> edges_through(const Triangulation& tri, const Location& loc);

}  // namespace geodesic
