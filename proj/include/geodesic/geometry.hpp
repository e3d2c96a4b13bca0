#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace geodesic {

/// Raised for invalid inputs (bad domains, exterior points, unknown ids).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Sign of the signed area of (a, b, c): +1 counterclockwise, -1 clockwise,
/// 0 collinear. Exact for all finite double inputs (no overflow assumed).
int orientation(Point a, Point b, Point c);

/// True iff p lies on the closed segment ab (exact).
bool on_segment(Point p, Point a, Point b);

/// Closest point on segment ab to p, and its distance.
double segment_distance(Point p, Point a, Point b);

struct Segment {
    Point a;
    Point b;
};

enum class Contact {
    none,     // closed segments are disjoint
    proper,   // interiors cross in a single point
    touch,    // meet in a single point that is an endpoint of at least one
    overlap,  // collinear with a shared subsegment of positive length
};

/// Exact classification of how closed segments ab and cd meet.
Contact segment_contact(Point a, Point b, Point c, Point d);

/// Intersection point of the supporting lines of ab and cd (not robust for
/// parallel inputs; callers check segment_contact first).
Point line_intersection(Point a, Point b, Point c, Point d);

enum class Containment { interior, boundary, exterior };

struct RayHit {
    Point point;
    int edge = -1;     // boundary edge index within the region
    double t = 0.0;    // distance from the ray origin
};

struct PathHit {
    Point point;
    int edge = -1;     // index of the hit path segment
    double t = 0.0;    // distance from the ray origin
};

/// A closed planar region described by its boundary edges. The boundary is
/// any edge set whose union is a family of closed curves (a polygon with
/// holes, or the unshared edges of a set of triangles). Membership uses
/// crossing parity, so pinched boundaries are handled.
class Region {
public:
    Region() = default;
    Region(std::vector<Point> points, std::vector<std::array<int, 2>> edges,
           std::vector<int> vertex_ids);

    const std::vector<Point>& points() const { return points_; }
    const std::vector<std::array<int, 2>>& edges() const { return edges_; }
    /// Ids (into points()) of the vertices incident to the region.
    const std::vector<int>& vertex_ids() const { return vertex_ids_; }
    Point point(int id) const { return points_[static_cast<std::size_t>(id)]; }
    Segment edge_segment(int e) const;

    Containment contains(Point p) const;

    /// True iff the closed segment ab lies in the closed region. Contact
    /// with the boundary (grazing along edges or through vertices) is allowed.
    bool visible(Point a, Point b) const;

    /// Like visible() but tolerant of endpoints that sit within `tol` of the
    /// boundary on the wrong side. Used to validate computed witness paths
    /// whose Steiner points carry rounding error.
    bool nearly_visible(Point a, Point b, double tol) const;

    /// Far end of the maximal segment in the closed region that starts at
    /// origin and runs along dir. Absent when the ray immediately leaves the
    /// region (origin on the boundary pointing outward, or origin exterior).
    std::optional<RayHit> ray_shoot(Point origin, Point dir) const;

    /// Earliest point of the polyline hit by the ray such that the segment
    /// origin->hit lies in the region. A hit at the origin itself counts.
    std::optional<PathHit> first_path_hit(std::span<const Point> path, Point origin,
                                          Point dir) const;

    /// Distance from p to the nearest boundary edge.
    double boundary_distance(Point p) const;

    /// Length of the bounding box diagonal.
    double extent() const { return extent_; }

private:
    bool visible_impl(Point a, Point b, double tol) const;

    std::vector<Point> points_;
    std::vector<std::array<int, 2>> edges_;
    std::vector<int> vertex_ids_;
    Point lo_{}, hi_{};
    double extent_ = 0.0;
};

/// Outer boundary (counterclockwise) minus hole interiors (each clockwise).
/// Vertex ids enumerate the outer ring first, then each hole in order.
class PolygonDomain {
public:
    PolygonDomain() = default;

    /// Validates simplicity, orientation, containment and disjointness.
    static PolygonDomain create(std::vector<Point> outer,
                                std::vector<std::vector<Point>> holes = {});

    const std::vector<Point>& outer() const { return outer_; }
    const std::vector<std::vector<Point>>& holes() const { return holes_; }
    std::size_t vertex_count() const { return region_.points().size(); }
    std::size_t hole_count() const { return holes_.size(); }
    const std::vector<Point>& vertices() const { return region_.points(); }
    Point vertex(int id) const { return region_.point(id); }
    /// Ring index of every vertex: 0 for outer, 1 + k for hole k.
    int ring_of(int id) const { return ring_of_[static_cast<std::size_t>(id)]; }
    /// Vertex ids of ring r in boundary order.
    const std::vector<int>& ring(int r) const { return rings_[static_cast<std::size_t>(r)]; }
    std::size_t ring_count() const { return rings_.size(); }

    const Region& region() const { return region_; }
    double area() const;

    Containment contains(Point p) const { return region_.contains(p); }
    bool visible(Point a, Point b) const { return region_.visible(a, b); }
    std::optional<RayHit> ray_shoot(Point origin, Point dir) const { return region_.ray_shoot(origin, dir); }

private:
    std::vector<Point> outer_;
    std::vector<std::vector<Point>> holes_;
    std::vector<std::vector<int>> rings_;
    std::vector<int> ring_of_;
    Region region_;
};

double signed_area(std::span<const Point> ring);

/// Parses the text domain format ("outer <n>" then n "x y" lines, then any
/// number of "hole <n>" blocks; '#' starts a comment).
PolygonDomain parse_domain(const std::string& text);
PolygonDomain load_domain(const std::string& path);
std::string format_domain(const PolygonDomain& domain);

}  // namespace geodesic
