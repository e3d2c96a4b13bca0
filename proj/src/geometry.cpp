#include "geodesic/geometry.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace geodesic {

namespace {

// Error-free transformations (Knuth / Dekker), used by the exact fallback of
// the orientation predicate.
inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    const double bv = x - a;
    const double av = x - bv;
    y = (a - av) + (b - bv);
}

inline void two_product(double a, double b, double& x, double& y) {
    x = a * b;
    y = std::fma(a, b, -x);
}

// Adds b to a nonoverlapping expansion of length n stored in e, in place.
// Returns the new length (n + 1).
int grow_expansion(double* e, int n, double b) {
    double q = b;
    for (int i = 0; i < n; ++i) {
        double h;
        two_sum(q, e[i], q, h);
        e[i] = h;
    }
    e[n] = q;
    return n + 1;
}

int orientation_exact(Point a, Point b, Point c) {
    const double products[6][2] = {
        {a.x, b.y}, {-a.x, c.y}, {-c.x, b.y}, {-a.y, b.x}, {a.y, c.x}, {c.y, b.x},
    };
    double e[12];
    int n = 0;
    for (const auto& p : products) {
        double hi, lo;
        two_product(p[0], p[1], hi, lo);
        n = grow_expansion(e, n, lo);
        n = grow_expansion(e, n, hi);
    }
    for (int i = n - 1; i >= 0; --i) {
        if (e[i] > 0.0) return 1;
        if (e[i] < 0.0) return -1;
    }
    return 0;
}

double param_on(Point p, Point a, Point b) {
    const Point d = b - a;
    return dot(p - a, d) / dot(d, d);
}

bool covered(const std::vector<std::pair<double, double>>& along, double t0, double t1) {
    for (const auto& [lo, hi] : along) {
        if (lo <= t0 && t1 <= hi) return true;
    }
    return false;
}

bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

}  // namespace

int orientation(Point a, Point b, Point c) {
    const double left = (a.x - c.x) * (b.y - c.y);
    const double right = (a.y - c.y) * (b.x - c.x);
    const double det = left - right;
    const double bound = 3.3306690738754716e-16 * (std::abs(left) + std::abs(right));
    if (det > bound) return 1;
    if (-det > bound) return -1;
    return orientation_exact(a, b, c);
}

bool on_segment(Point p, Point a, Point b) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

double segment_distance(Point p, Point a, Point b) {
    const Point d = b - a;
    const double len2 = dot(d, d);
    if (len2 == 0.0) return distance(p, a);
    const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
    return distance(p, a + t * d);
}

Contact segment_contact(Point a, Point b, Point c, Point d) {
    if (a == b) return on_segment(a, c, d) ? Contact::touch : Contact::none;
    if (c == d) return on_segment(c, a, b) ? Contact::touch : Contact::none;
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    if (o1 == 0 && o2 == 0) {
        Point s1 = a, e1 = b, s2 = c, e2 = d;
        if (lex_less(e1, s1)) std::swap(s1, e1);
        if (lex_less(e2, s2)) std::swap(s2, e2);
        const Point lo = lex_less(s1, s2) ? s2 : s1;
        const Point hi = lex_less(e1, e2) ? e1 : e2;
        if (lex_less(lo, hi)) return Contact::overlap;
        if (lo == hi) return Contact::touch;
        return Contact::none;
    }
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return Contact::proper;
    if ((o1 == 0 && on_segment(c, a, b)) || (o2 == 0 && on_segment(d, a, b)) ||
        (o3 == 0 && on_segment(a, c, d)) || (o4 == 0 && on_segment(b, c, d))) {
        return Contact::touch;
    }
    return Contact::none;
}

Point line_intersection(Point a, Point b, Point c, Point d) {
    const Point r = b - a;
    const Point s = d - c;
    const double denom = cross(r, s);
    const double t = cross(c - a, s) / denom;
    return a + t * r;
}

double signed_area(std::span<const Point> ring) {
    double twice = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point p = ring[i];
        const Point q = ring[(i + 1) % ring.size()];
        twice += cross(p, q);
    }
    return 0.5 * twice;
}

// ---------------------------------------------------------------------------
// Region

Region::Region(std::vector<Point> points, std::vector<std::array<int, 2>> edges,
               std::vector<int> vertex_ids)
    : points_(std::move(points)), edges_(std::move(edges)), vertex_ids_(std::move(vertex_ids)) {
    double inf = std::numeric_limits<double>::infinity();
    lo_ = {inf, inf};
    hi_ = {-inf, -inf};
    for (int id : vertex_ids_) {
        const Point p = point(id);
        lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y)};
        hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y)};
    }
    extent_ = vertex_ids_.empty() ? 0.0 : distance(lo_, hi_);
}

Segment Region::edge_segment(int e) const {
    const auto& ed = edges_[static_cast<std::size_t>(e)];
    return {point(ed[0]), point(ed[1])};
}

Containment Region::contains(Point p) const {
    bool inside = false;
    for (const auto& ed : edges_) {
        const Point a = point(ed[0]);
        const Point b = point(ed[1]);
        if (on_segment(p, a, b)) return Containment::boundary;
        if ((a.y > p.y) != (b.y > p.y)) {
            const int o = orientation(a, b, p);
            if (b.y > a.y ? o > 0 : o < 0) inside = !inside;
        }
    }
    return inside ? Containment::interior : Containment::exterior;
}

double Region::boundary_distance(Point p) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& ed : edges_) best = std::min(best, segment_distance(p, point(ed[0]), point(ed[1])));
    return best;
}

bool Region::visible(Point a, Point b) const { return visible_impl(a, b, 0.0); }

bool Region::nearly_visible(Point a, Point b, double tol) const { return visible_impl(a, b, tol); }

bool Region::visible_impl(Point a, Point b, double tol) const {
    auto inside = [&](Point p) {
        if (contains(p) != Containment::exterior) return true;
        return tol > 0.0 && boundary_distance(p) <= tol;
    };
    if (a == b) return inside(a);
    std::vector<double> ts{0.0, 1.0};
    std::vector<std::pair<double, double>> along;
    for (const auto& ed : edges_) {
        const Point c = point(ed[0]);
        const Point d = point(ed[1]);
        switch (segment_contact(a, b, c, d)) {
            case Contact::none:
                break;
            case Contact::proper: {
                if (tol <= 0.0) return false;
                const Point x = line_intersection(a, b, c, d);
                if (distance(x, a) > tol && distance(x, b) > tol) return false;
                ts.push_back(param_on(x, a, b));
                break;
            }
            case Contact::touch:
            case Contact::overlap: {
                const double tc = on_segment(c, a, b) ? param_on(c, a, b) : -1.0;
                const double td = on_segment(d, a, b) ? param_on(d, a, b) : -1.0;
                if (tc >= 0.0) ts.push_back(tc);
                if (td >= 0.0) ts.push_back(td);
                if (orientation(a, b, c) == 0 && orientation(a, b, d) == 0) {
                    // Collinear: the shared stretch lies on the boundary.
                    const double pc = tc >= 0.0 ? tc : param_on(c, a, b);
                    const double pd = td >= 0.0 ? td : param_on(d, a, b);
                    const double lo = std::max(0.0, std::min(pc, pd));
                    const double hi = std::min(1.0, std::max(pc, pd));
                    if (hi > lo) along.emplace_back(lo, hi);
                }
                break;
            }
        }
    }
    std::sort(ts.begin(), ts.end());
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        const double t0 = std::clamp(ts[i], 0.0, 1.0);
        const double t1 = std::clamp(ts[i + 1], 0.0, 1.0);
        if (t1 <= t0) continue;
        if (covered(along, t0, t1)) continue;
        const Point mid = a + (0.5 * (t0 + t1)) * (b - a);
        if (!inside(mid)) return false;
    }
    return true;
}

std::optional<RayHit> Region::ray_shoot(Point origin, Point dir) const {
    const double reach = 2.0 * (extent_ + distance(origin, lo_)) + 1.0;
    const Point far = origin + reach * dir;

    struct Event {
        double t;
        bool crossing;
        int edge;
        Point point;
    };
    std::vector<Event> events;
    std::vector<std::pair<double, double>> along;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Point c = point(edges_[e][0]);
        const Point d = point(edges_[e][1]);
        const int id = static_cast<int>(e);
        switch (segment_contact(origin, far, c, d)) {
            case Contact::none:
                break;
            case Contact::proper: {
                const Point x = line_intersection(origin, far, c, d);
                events.push_back({param_on(x, origin, far), true, id, x});
                break;
            }
            case Contact::touch:
            case Contact::overlap:
                for (Point v : {c, d}) {
                    if (v != origin && on_segment(v, origin, far)) {
                        events.push_back({param_on(v, origin, far), false, id, v});
                    }
                }
                if (orientation(origin, far, c) == 0 && orientation(origin, far, d) == 0) {
                    const double pc = param_on(c, origin, far);
                    const double pd = param_on(d, origin, far);
                    const double lo = std::max(0.0, std::min(pc, pd));
                    const double hi = std::min(1.0, std::max(pc, pd));
                    if (hi > lo) along.emplace_back(lo, hi);
                }
                break;
        }
    }
    std::erase_if(events, [](const Event& ev) { return ev.t <= 0.0; });
    std::sort(events.begin(), events.end(), [](const Event& l, const Event& r) {
        if (l.t != r.t) return l.t < r.t;
        if (l.crossing != r.crossing) return l.crossing;
        return l.edge < r.edge;
    });
    if (events.empty()) return std::nullopt;

    auto piece_inside = [&](double t0, double t1) {
        if (covered(along, t0, t1)) return true;
        const Point mid = origin + (0.5 * (t0 + t1)) * (far - origin);
        return contains(mid) != Containment::exterior;
    };
    if (!piece_inside(0.0, events.front().t)) return std::nullopt;

    std::size_t i = 0;
    while (i < events.size()) {
        std::size_t j = i;
        while (j < events.size() && events[j].t == events[i].t) ++j;
        // Sorting puts crossings first and lower edge ids first within a group.
        const Event& first = events[i];
        const bool leaves = first.crossing || j == events.size() ||
                            !piece_inside(first.t, events[j].t);
        if (leaves) return RayHit{first.point, first.edge, distance(origin, first.point)};
        i = j;
    }
    return std::nullopt;
}

std::optional<PathHit> Region::first_path_hit(std::span<const Point> path, Point origin,
                                              Point dir) const {
    const double reach = 2.0 * (extent_ + distance(origin, lo_)) + 1.0;
    const Point far = origin + reach * dir;

    std::optional<PathHit> best;
    auto consider = [&](Point p, int edge) {
        const double t = distance(origin, p);
        if (!best || t < best->t) best = PathHit{p, edge, t};
    };
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Point p = path[i];
        const Point q = path[i + 1];
        if (p == q) continue;
        const int id = static_cast<int>(i);
        switch (segment_contact(origin, far, p, q)) {
            case Contact::none:
                break;
            case Contact::proper:
                consider(line_intersection(origin, far, p, q), id);
                break;
            case Contact::touch:
            case Contact::overlap:
                if (on_segment(origin, p, q)) consider(origin, id);
                if (on_segment(p, origin, far)) consider(p, id);
                if (on_segment(q, origin, far)) consider(q, id);
                break;
        }
    }
    if (!best) return std::nullopt;
    if (best->t == 0.0) return best;
    const auto exit = ray_shoot(origin, dir);
    if (!exit) return std::nullopt;
    if (best->t > exit->t + 1e-12 * (1.0 + extent_)) return std::nullopt;
    return best;
}

// ---------------------------------------------------------------------------
// PolygonDomain

namespace {

void check_ring_simple(const std::vector<Point>& ring, const std::string& what) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_finite(ring[i])) throw Error(what + ": non-finite coordinate");
        if (ring[i] == ring[(i + 1) % n]) throw Error(what + ": repeated consecutive vertex");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = ring[i], b = ring[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point c = ring[j], d = ring[(j + 1) % n];
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Contact contact = segment_contact(a, b, c, d);
            if (adjacent) {
                if (contact == Contact::overlap) throw Error(what + ": edges fold back on each other");
                // Adjacent edges share exactly one vertex; any other contact
                // means a vertex of one lies on the other.
                const Point other_ab = (j == i + 1) ? a : b;
                const Point other_cd = (j == i + 1) ? d : c;
                if (on_segment(other_ab, c, d) || on_segment(other_cd, a, b)) {
                    throw Error(what + ": edges fold back on each other");
                }
            } else if (contact != Contact::none) {
                throw Error(what + ": boundary is not simple (edges " + std::to_string(i) + " and " +
                            std::to_string(j) + " intersect)");
            }
        }
    }
}

bool rings_touch(const std::vector<Point>& r1, const std::vector<Point>& r2) {
    for (std::size_t i = 0; i < r1.size(); ++i) {
        for (std::size_t j = 0; j < r2.size(); ++j) {
            if (segment_contact(r1[i], r1[(i + 1) % r1.size()], r2[j], r2[(j + 1) % r2.size()]) !=
                Contact::none) {
                return true;
            }
        }
    }
    return false;
}

Region ring_region(const std::vector<Point>& ring) {
    std::vector<std::array<int, 2>> edges;
    std::vector<int> ids;
    const int n = static_cast<int>(ring.size());
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        ids.push_back(i);
    }
    return Region(ring, std::move(edges), std::move(ids));
}

}  // namespace

PolygonDomain PolygonDomain::create(std::vector<Point> outer, std::vector<std::vector<Point>> holes) {
    if (outer.size() < 3) throw Error("outer boundary needs at least 3 vertices");
    check_ring_simple(outer, "outer boundary");
    if (signed_area(outer) <= 0.0) throw Error("outer boundary must be counterclockwise");
    const Region outer_region = ring_region(outer);
    for (std::size_t h = 0; h < holes.size(); ++h) {
        const std::string what = "hole " + std::to_string(h);
        if (holes[h].size() < 3) throw Error(what + " needs at least 3 vertices");
        check_ring_simple(holes[h], what);
        if (signed_area(holes[h]) >= 0.0) throw Error(what + " must be clockwise");
        if (rings_touch(outer, holes[h])) throw Error(what + " touches the outer boundary");
        if (outer_region.contains(holes[h][0]) != Containment::interior) {
            throw Error(what + " is not inside the outer boundary");
        }
        for (std::size_t g = 0; g < h; ++g) {
            if (rings_touch(holes[g], holes[h])) {
                throw Error("holes " + std::to_string(g) + " and " + std::to_string(h) + " intersect");
            }
            if (ring_region(holes[g]).contains(holes[h][0]) != Containment::exterior ||
                ring_region(holes[h]).contains(holes[g][0]) != Containment::exterior) {
                throw Error("holes " + std::to_string(g) + " and " + std::to_string(h) + " are nested");
            }
        }
    }

    PolygonDomain d;
    d.outer_ = std::move(outer);
    d.holes_ = std::move(holes);
    std::vector<Point> points;
    std::vector<std::array<int, 2>> edges;
    std::vector<int> ids;
    auto add_ring = [&](const std::vector<Point>& ring, int ring_index) {
        const int base = static_cast<int>(points.size());
        const int n = static_cast<int>(ring.size());
        std::vector<int> ring_ids;
        for (int i = 0; i < n; ++i) {
            points.push_back(ring[static_cast<std::size_t>(i)]);
            ids.push_back(base + i);
            ring_ids.push_back(base + i);
            edges.push_back({base + i, base + (i + 1) % n});
            d.ring_of_.push_back(ring_index);
        }
        d.rings_.push_back(std::move(ring_ids));
    };
    add_ring(d.outer_, 0);
    for (std::size_t h = 0; h < d.holes_.size(); ++h) add_ring(d.holes_[h], static_cast<int>(h) + 1);
    d.region_ = Region(std::move(points), std::move(edges), std::move(ids));
    return d;
}

double PolygonDomain::area() const {
    double a = signed_area(outer_);
    for (const auto& h : holes_) a += signed_area(h);
    return a;
}

PolygonDomain parse_domain(const std::string& text) {
    std::istringstream lines(text);
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(lines, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    std::size_t pos = 0;
    auto next = [&](const char* what) -> const std::string& {
        if (pos >= tokens.size()) throw Error(std::string("domain file: unexpected end, expected ") + what);
        return tokens[pos++];
    };
    auto number = [&](const char* what) {
        const std::string& tok = next(what);
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw Error("domain file: expected " + std::string(what) + ", got '" + tok + "'");
        }
    };
    auto ring = [&](const char* what) {
        const double count = number("vertex count");
        if (count < 3 || count != std::floor(count)) {
            throw Error(std::string("domain file: ") + what + " needs an integer count >= 3");
        }
        std::vector<Point> pts;
        for (int i = 0; i < static_cast<int>(count); ++i) {
            const double x = number("x coordinate");
            const double y = number("y coordinate");
            pts.push_back({x, y});
        }
        return pts;
    };
    if (next("'outer'") != "outer") throw Error("domain file: must start with 'outer <count>'");
    std::vector<Point> outer = ring("outer");
    std::vector<std::vector<Point>> holes;
    while (pos < tokens.size()) {
        const std::string& kw = next("'hole'");
        if (kw != "hole") throw Error("domain file: expected 'hole', got '" + kw + "'");
        holes.push_back(ring("hole"));
    }
    return PolygonDomain::create(std::move(outer), std::move(holes));
}

PolygonDomain load_domain(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open domain file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_domain(ss.str());
}

std::string format_domain(const PolygonDomain& domain) {
    std::ostringstream out;
    out.precision(17);
    out << "outer " << domain.outer().size() << "\n";
    for (Point p : domain.outer()) out << p.x << " " << p.y << "\n";
    for (const auto& h : domain.holes()) {
        out << "hole " << h.size() << "\n";
        for (Point p : h) out << p.x << " " << p.y << "\n";
    }
    return out.str();
}

}  // namespace geodesic
