#include "render.hpp"

#include <algorithm>
#include <cstdio>

namespace geodesic::tools {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string level_color(int level) {
    static const char* palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
    return palette[level % 10];
}

void bounds(const PolygonDomain& d, Point& lo, Point& hi) {
    lo = hi = d.outer().front();
    for (Point p : d.outer()) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
}

Svg canvas(const PolygonDomain& d) {
    Point lo, hi;
    bounds(d, lo, hi);
    return Svg(lo, hi);
}

// Interior fill plus one line element per boundary edge.
void draw_domain(Svg& svg, const PolygonDomain& d) {
    std::vector<std::vector<Point>> rings{d.outer()};
    for (const auto& h : d.holes()) rings.push_back(h);
    svg.polygon_path(rings, "#f4f1ea");
    const auto& r = d.region();
    for (std::size_t e = 0; e < r.edges().size(); ++e) {
        const Segment s = r.edge_segment(static_cast<int>(e));
        svg.line(s.a, s.b, "boundary", "#222", 1.5);
    }
}

}  // namespace

Svg::Svg(Point lo, Point hi, double width) : lo_(lo), hi_(hi), width_(width) {
    const double w = std::max(hi.x - lo.x, 1e-9);
    const double h = std::max(hi.y - lo.y, 1e-9);
    scale_ = (width - 2 * pad_) / w;
    height_ = h * scale_ + 2 * pad_;
}

double Svg::sx(double x) const { return pad_ + (x - lo_.x) * scale_; }
double Svg::sy(double y) const { return height_ - pad_ - (y - lo_.y) * scale_; }

void Svg::polygon_path(const std::vector<std::vector<Point>>& rings, const std::string& fill) {
    std::string d;
    for (const auto& ring : rings) {
        for (std::size_t i = 0; i < ring.size(); ++i) d += (i ? " L" : " M") + num(sx(ring[i].x)) + "," + num(sy(ring[i].y));
        d += " Z";
    }
    body_ += "<path class=\"area\" fill-rule=\"evenodd\" fill=\"" + fill + "\" d=\"" + d.substr(1) + "\"/>\n";
}

void Svg::line(Point a, Point b, const std::string& cls, const std::string& color, double width) {
    body_ += "<line class=\"" + cls + "\" x1=\"" + num(sx(a.x)) + "\" y1=\"" + num(sy(a.y)) + "\" x2=\"" + num(sx(b.x)) +
             "\" y2=\"" + num(sy(b.y)) + "\" stroke=\"" + color + "\" stroke-width=\"" + num(width) + "\"/>\n";
}

void Svg::polyline(const std::vector<Point>& pts, const std::string& cls, const std::string& color, double width) {
    std::string p;
    for (Point q : pts) p += num(sx(q.x)) + "," + num(sy(q.y)) + " ";
    if (!p.empty()) p.pop_back();
    body_ += "<polyline class=\"" + cls + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + num(width) +
             "\" points=\"" + p + "\"/>\n";
}

void Svg::circle(Point c, double r, const std::string& cls, const std::string& color) {
    body_ += "<circle class=\"" + cls + "\" cx=\"" + num(sx(c.x)) + "\" cy=\"" + num(sy(c.y)) + "\" r=\"" + num(r) +
             "\" fill=\"" + color + "\"/>\n";
}

void Svg::ring(Point c, double r, const std::string& cls, const std::string& color) {
    body_ += "<circle class=\"" + cls + "\" cx=\"" + num(sx(c.x)) + "\" cy=\"" + num(sy(c.y)) + "\" r=\"" + num(r) +
             "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
}

void Svg::text(Point at, const std::string& s, const std::string& cls, double size) {
    body_ += "<text class=\"" + cls + "\" x=\"" + num(sx(at.x) + 4) + "\" y=\"" + num(sy(at.y) - 4) + "\" font-size=\"" +
             num(size) + "\">" + s + "</text>\n";
}

std::string Svg::str() const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width_) + "\" height=\"" + num(height_) +
           "\" viewBox=\"0 0 " + num(width_) + " " + num(height_) + "\">\n" + body_ + "</svg>\n";
}

std::string render_domain(const PolygonDomain& d) {
    Svg svg = canvas(d);
    draw_domain(svg, d);
    return svg.str();
}

std::string render_tree(const SeparatorTree& tree) {
    const PolygonDomain& d = tree.domain();
    Svg svg = canvas(d);
    draw_domain(svg, d);
    const auto& tri = tree.triangulation();
    for (const auto& e : tri.edges) svg.line(tri.points[static_cast<std::size_t>(e[0])], tri.points[static_cast<std::size_t>(e[1])], "tri", "#c8c3b8", 0.5);
    for (const auto& nd : tree.nodes()) {
        for (std::size_t j = 0; j < nd.paths.size(); ++j) {
            const auto pts = tree.path_points(nd.id, static_cast<int>(j));
            if (pts.size() == 1) svg.circle(pts[0], 3.5, "separator level" + std::to_string(nd.level), level_color(nd.level));
            else svg.polyline(pts, "separator level" + std::to_string(nd.level), level_color(nd.level), 2.5);
        }
    }
    return svg.str();
}

std::string render_anchors(const PathStructure& ps, const PolygonDomain& d, const AnchorSet& set) {
    Svg svg = canvas(d);
    draw_domain(svg, d);
    svg.polyline(ps.path().points, "separator", "#1f77b4", 2.5);
    svg.circle(set.owner, 4, "owner", "#d62728");
    for (std::size_t i = 0; i < set.anchors.size(); ++i) {
        const Anchor& a = set.anchors[i];
        svg.polyline(ps.route(set, static_cast<int>(i)), "route", "#ff7f0e", 0.8);
        svg.circle(a.point, 3, "anchor", "#2ca02c");
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", a.weight);
        svg.text(a.point, buf, "weight", 9);
    }
    return svg.str();
}

std::string render_path(const PolygonDomain& d, const DistanceResult& r, const std::vector<Point>* exact) {
    Svg svg = canvas(d);
    draw_domain(svg, d);
    if (exact) svg.polyline(*exact, "exact", "#2ca02c", 1.5);
    svg.polyline(r.witness, "witness", "#d62728", 2.0);
    svg.circle(r.witness.front(), 4, "endpoint", "#222");
    svg.circle(r.witness.back(), 4, "endpoint", "#222");
    return svg.str();
}

std::string render_nn(const NNIndex& nn, std::optional<Point> q, const std::optional<NNResult>& answer) {
    const PolygonDomain& d = nn.backbone().domain();
    Svg svg = canvas(d);
    draw_domain(svg, d);
    for (const auto& [id, rec] : nn.sites()) {
        svg.circle(rec.position, 3.5, "site", "#1f77b4");
        svg.text(rec.position, std::to_string(id), "site-id", 9);
    }
    if (answer && !answer->witness.empty()) svg.polyline(answer->witness, "witness", "#d62728", 1.5);
    if (q) svg.circle(*q, 4, "query", "#d62728");
    if (answer) svg.ring(nn.sites().at(answer->site).position, 6, "answer", "#d62728");
    return svg.str();
}

}  // namespace geodesic::tools
