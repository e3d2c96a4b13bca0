#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geodesic/distance_oracle.hpp"
#include "geodesic/dynamic_nn.hpp"

namespace geodesic::tools {

/// Minimal SVG writer in domain coordinates (y up).
class Svg {
public:
    Svg(Point lo, Point hi, double width = 800.0);

    void polygon_path(const std::vector<std::vector<Point>>& rings, const std::string& fill);
    void line(Point a, Point b, const std::string& cls, const std::string& color, double width);
    void polyline(const std::vector<Point>& pts, const std::string& cls, const std::string& color, double width);
    void circle(Point c, double r, const std::string& cls, const std::string& color);
    void ring(Point c, double r, const std::string& cls, const std::string& color);
    void text(Point at, const std::string& s, const std::string& cls, double size = 10.0);
    std::string str() const;

private:
    double sx(double x) const;
    double sy(double y) const;

    Point lo_, hi_;
    double scale_, width_, height_, pad_ = 20.0;
    std::string body_;
};

std::string render_domain(const PolygonDomain& d);
/// Leaf triangles plus separator paths coloured by level.
std::string render_tree(const SeparatorTree& tree);
/// A separator path with one anchor set (marks with weight labels).
std::string render_anchors(const PathStructure& ps, const PolygonDomain& d, const AnchorSet& set);
/// Witness of a distance query, and the exact geodesic when given.
std::string render_path(const PolygonDomain& d, const DistanceResult& r, const std::vector<Point>* exact = nullptr);
/// Sites, a query point and the reported site.
std::string render_nn(const NNIndex& nn, std::optional<Point> q, const std::optional<NNResult>& answer);

}  // namespace geodesic::tools
