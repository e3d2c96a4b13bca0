#include "geodesic/path_structure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace geodesic {

ArcPath::ArcPath(std::vector<Point> pts, std::vector<int> vertex_ids)
    : points(std::move(pts)), ids(std::move(vertex_ids)) {
    if (points.empty()) throw Error("empty path");
    if (ids.size() != points.size()) throw Error("path ids and points differ in length");
    prefix.assign(points.size(), 0.0);
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i] == points[i - 1]) throw Error("path repeats a point");
        prefix[i] = prefix[i - 1] + distance(points[i - 1], points[i]);
    }
}

Point ArcPath::at(double arc, int edge) const {
    if (points.size() == 1) return points[0];
    const auto e = static_cast<std::size_t>(edge);
    const double len = prefix[e + 1] - prefix[e];
    const double t = arc - prefix[e];
    if (t <= 0.0) return points[e];
    if (t >= len) return points[e + 1];
    return points[e] + (t / len) * (points[e + 1] - points[e]);
}

std::vector<Point> ArcPath::between(double arc_a, double arc_b) const {
    std::vector<Point> out;
    const double lo = std::min(arc_a, arc_b);
    const double hi = std::max(arc_a, arc_b);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (prefix[i] > lo && prefix[i] < hi) out.push_back(points[i]);
    }
    if (arc_a > arc_b) std::reverse(out.begin(), out.end());
    return out;
}

std::vector<int> greedy_prune(std::span<const ArcWeight> candidates, double eps2) {
    if (candidates.empty()) return {};
    std::vector<int> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ca = candidates[static_cast<std::size_t>(a)];
        const auto& cb = candidates[static_cast<std::size_t>(b)];
        if (ca.arc != cb.arc) return ca.arc < cb.arc;
        if (ca.weight != cb.weight) return ca.weight < cb.weight;
        return a < b;
    });
    auto w = [&](int i) { return candidates[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])].weight; };
    auto x = [&](int i) { return candidates[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])].arc; };
    const int m = static_cast<int>(order.size());
    int star = 0;
    for (int i = 1; i < m; ++i) {
        if (w(i) < w(star)) star = i;
    }
    std::vector<char> alive(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) alive[static_cast<std::size_t>(i)] = w(i) <= w(star) + std::abs(x(star) - x(i));

    std::vector<int> kept{star};
    int prev = star;
    for (int i = star + 1; i < m; ++i) {
        if (!alive[static_cast<std::size_t>(i)]) continue;
        if ((1.0 + eps2) * w(i) < w(prev) + std::abs(x(prev) - x(i))) {
            kept.push_back(i);
            prev = i;
        }
    }
    prev = star;
    for (int i = star - 1; i >= 0; --i) {
        if (!alive[static_cast<std::size_t>(i)]) continue;
        if ((1.0 + eps2) * w(i) < w(prev) + std::abs(x(prev) - x(i))) {
            kept.push_back(i);
            prev = i;
        }
    }
    std::sort(kept.begin(), kept.end());
    std::vector<int> out;
    for (int i : kept) out.push_back(order[static_cast<std::size_t>(i)]);
    return out;
}

ViaResult via_q_distance(const AnchorSet& first, const AnchorSet& second) {
    ViaResult r;
    for (std::size_t i = 0; i < first.anchors.size(); ++i) {
        const Anchor& a = first.anchors[i];
        for (std::size_t j = 0; j < second.anchors.size(); ++j) {
            const Anchor& b = second.anchors[j];
            const double v = a.weight + (b.weight + std::abs(a.arc - b.arc));
            if (v < r.value) {
                r.value = v;
                r.a = static_cast<int>(i);
                r.b = static_cast<int>(j);
            }
        }
    }
    return r;
}

PathStructure::PathStructure(Region region, ArcPath path, double eps)
    : region_(std::move(region)), path_(std::move(path)), eps_(eps), family_(eps / 9.0) {
    if (!(eps > 0.0 && eps <= 1.0)) throw Error("eps must lie in (0, 1]");
    cones_ = build_cone_graph(region_, family_);
    node_points_ = cones_.points;
    std::map<int, int> node_of;
    for (std::size_t i = 0; i < cones_.ids.size(); ++i) node_of[cones_.ids[i]] = static_cast<int>(i);

    const std::size_t qn = path_.points.size();
    for (std::size_t i = 0; i < qn; ++i) {
        const int id = path_.ids[i];
        int node = -1;
        if (auto it = node_of.find(id); id >= 0 && it != node_of.end()) {
            node = it->second;
        } else {
            // ids < 0 mark path points that are not polygon vertices
            node = static_cast<int>(node_points_.size());
            node_points_.push_back(path_.points[i]);
            if (id >= 0) node_of.emplace(id, node);
        }
        const int edge = qn == 1 ? 0 : static_cast<int>(std::min(i, qn - 2));
        chain_.push_back({path_.prefix[i], edge, node});
    }
    adj_.assign(node_points_.size(), {});
    auto link = [&](int a, int b) {
        if (a == b) return;
        const double len = distance(node_points_[static_cast<std::size_t>(a)], node_points_[static_cast<std::size_t>(b)]);
        if (static_cast<std::size_t>(std::max(a, b)) >= adj_.size()) adj_.resize(static_cast<std::size_t>(std::max(a, b)) + 1);
        adj_[static_cast<std::size_t>(a)].emplace_back(b, len);
        adj_[static_cast<std::size_t>(b)].emplace_back(a, len);
    };
    for (const auto& e : cones_.edges) link(e[0], e[1]);

    // Steiner points: first visible hits of every vertex's cone boundary rays.
    std::map<Point, int> steiner;
    for (std::size_t v = 0; v < cones_.points.size(); ++v) {
        for (PathNode h : ray_hits(cones_.points[v])) {
            if (h.node < 0) {
                const Point p = path_.at(h.arc, h.edge);
                auto it = steiner.find(p);
                if (it == steiner.end()) {
                    it = steiner.emplace(p, static_cast<int>(node_points_.size())).first;
                    node_points_.push_back(p);
                    chain_.push_back({h.arc, h.edge, it->second});
                    ++steiner_count_;
                }
                h.node = it->second;
            }
            link(static_cast<int>(v), h.node);
        }
    }
    adj_.resize(node_points_.size());
    std::sort(chain_.begin(), chain_.end(), [](const PathNode& a, const PathNode& b) {
        if (a.arc != b.arc) return a.arc < b.arc;
        return a.node < b.node;
    });
    for (std::size_t i = 0; i + 1 < chain_.size(); ++i) link(chain_[i].node, chain_[i + 1].node);

    vertex_anchors_.resize(cones_.points.size());
    vertex_routes_.resize(cones_.points.size());
    std::vector<ArcWeight> cands;
    std::vector<const PathNode*> reached;
    for (std::size_t v = 0; v < cones_.points.size(); ++v) {
        const ShortestPaths sp = dijkstra(adj_, static_cast<int>(v));
        cands.clear();
        reached.clear();
        for (const PathNode& c : chain_) {
            const double d = sp.dist[static_cast<std::size_t>(c.node)];
            if (!std::isfinite(d)) continue;
            cands.push_back({c.arc, d});
            reached.push_back(&c);
        }
        AnchorSet& set = vertex_anchors_[v];
        set.owner = cones_.points[v];
        for (int i : greedy_prune(cands, eps2())) {
            const PathNode& c = *reached[static_cast<std::size_t>(i)];
            Anchor a;
            a.arc = c.arc;
            a.edge = c.edge;
            a.weight = cands[static_cast<std::size_t>(i)].weight;
            a.point = node_points_[static_cast<std::size_t>(c.node)];
            a.node = c.node;
            set.anchors.push_back(a);
            vertex_routes_[v].push_back(sp.path_to(c.node));
        }
    }
}

std::size_t PathStructure::anchor_bound() const { return static_cast<std::size_t>(std::floor(4.0 / eps2() + 1.0)); }

std::vector<PathStructure::PathNode> PathStructure::ray_hits(Point p) const {
    std::vector<PathNode> out;
    std::vector<Point> seen;
    auto vertex_node = [&](std::size_t i) {
        for (const PathNode& c : chain_) {
            if (c.arc == path_.prefix[i] && node_points_[static_cast<std::size_t>(c.node)] == path_.points[i]) return c.node;
        }
        return -1;
    };
    if (path_.points.size() == 1) {
        if (region_.visible(p, path_.points[0])) out.push_back({0.0, 0, vertex_node(0)});
        return out;
    }
    for (int k = 0; k < family_.size(); ++k) {
        const auto hit = region_.first_path_hit(path_.points, p, family_.boundary(k));
        if (!hit) continue;
        if (std::find(seen.begin(), seen.end(), hit->point) != seen.end()) continue;
        seen.push_back(hit->point);
        const auto e = static_cast<std::size_t>(hit->edge);
        PathNode h{0.0, hit->edge, -1};
        if (hit->point == path_.points[e]) {
            h.arc = path_.prefix[e];
            h.node = vertex_node(e);
        } else if (hit->point == path_.points[e + 1]) {
            h.arc = path_.prefix[e + 1];
            h.node = vertex_node(e + 1);
        } else {
            h.arc = std::clamp(path_.prefix[e] + distance(path_.points[e], hit->point), path_.prefix[e], path_.prefix[e + 1]);
        }
        out.push_back(h);
    }
    return out;
}

std::vector<Point> PathStructure::vertex_route(int v, int anchor) const {
    std::vector<Point> out;
    for (int node : vertex_routes_[static_cast<std::size_t>(v)][static_cast<std::size_t>(anchor)]) {
        out.push_back(node_points_[static_cast<std::size_t>(node)]);
    }
    return out;
}

std::vector<ArcWeight> PathStructure::query_candidates(Point s, std::vector<Anchor>& out) const {
    out.clear();
    std::vector<ArcWeight> w;
    for (const PathNode& h : ray_hits(s)) {
        Anchor a;
        a.arc = h.arc;
        a.edge = h.edge;
        a.point = h.node >= 0 ? node_points_[static_cast<std::size_t>(h.node)] : path_.at(h.arc, h.edge);
        a.weight = distance(s, a.point);
        a.node = h.node;
        out.push_back(a);
        w.push_back({a.arc, a.weight});
    }
    std::vector<int> ns = extend(cones_, region_, family_, s);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (int v : ns) {
        if (v < 0) continue;
        const double sv = distance(s, cones_.points[static_cast<std::size_t>(v)]);
        const auto& va = vertex_anchors_[static_cast<std::size_t>(v)].anchors;
        for (std::size_t j = 0; j < va.size(); ++j) {
            Anchor a = va[j];
            a.weight = sv + va[j].weight;
            a.via = v;
            a.via_anchor = static_cast<int>(j);
            out.push_back(a);
            w.push_back({a.arc, a.weight});
        }
    }
    return w;
}

std::size_t PathStructure::candidate_count(Point s) const {
    std::vector<Anchor> all;
    return query_candidates(s, all).size();
}

AnchorSet PathStructure::query_anchor_set(Point s) const {
    std::vector<Anchor> all;
    const auto w = query_candidates(s, all);
    AnchorSet set;
    set.owner = s;
    for (int i : greedy_prune(w, eps2())) set.anchors.push_back(all[static_cast<std::size_t>(i)]);
    return set;
}

std::vector<Point> PathStructure::route(const AnchorSet& set, int i) const {
    const Anchor& a = set.anchors[static_cast<std::size_t>(i)];
    std::vector<Point> out{set.owner};
    if (a.via < 0) {
        if (a.point != set.owner) out.push_back(a.point);
        return out;
    }
    for (Point p : vertex_route(a.via, a.via_anchor)) {
        if (p != out.back()) out.push_back(p);
    }
    return out;
}

std::vector<Point> PathStructure::witness(const AnchorSet& s, const AnchorSet& t, const ViaResult& r) const {
    if (r.a < 0) return {};
    std::vector<Point> out = route(s, r.a);
    const Anchor& a = s.anchors[static_cast<std::size_t>(r.a)];
    const Anchor& b = t.anchors[static_cast<std::size_t>(r.b)];
    auto push = [&](Point p) {
        if (out.empty() || out.back() != p) out.push_back(p);
    };
    for (Point p : path_.between(a.arc, b.arc)) push(p);
    std::vector<Point> back = route(t, r.b);
    std::reverse(back.begin(), back.end());
    for (Point p : back) push(p);
    return out;
}

std::size_t PathStructure::stored_anchor_count() const {
    std::size_t n = 0;
    for (const auto& s : vertex_anchors_) n += s.size();
    return n;
}

}  // namespace geodesic
