#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "geodesic/exact_oracle.hpp"
#include "geodesic/path_structure.hpp"
#include "geodesic/random_domain.hpp"
#include "oracles.hpp"

using namespace geodesic;
using namespace fixtures;

namespace {

double reach(std::span<const ArcWeight> c, std::span<const int> kept, double arc) {
    double best = std::numeric_limits<double>::infinity();
    for (int i : kept) best = std::min(best, c[static_cast<std::size_t>(i)].weight + std::abs(c[static_cast<std::size_t>(i)].arc - arc));
    return best;
}

void check_certified(std::span<const ArcWeight> c, double eps2) {
    const auto kept = greedy_prune(c, eps2);
    std::vector<int> all(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) all[i] = static_cast<int>(i);
    for (const auto& p : c) CHECK(reach(c, kept, p.arc) <= (1 + eps2) * reach(c, all, p.arc) * (1 + 1e-12));
}

// min over anchors of weight + arc distance, i.e. the anchor-set estimate of d(owner, q).
double anchor_estimate(const AnchorSet& a, double arc) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& x : a.anchors) best = std::min(best, x.weight + std::abs(x.arc - arc));
    return best;
}

ArcPath vertex_path(const PolygonDomain& d, const std::vector<int>& ids) {
    std::vector<Point> pts;
    for (int v : ids) pts.push_back(d.vertices()[static_cast<std::size_t>(v)]);
    return ArcPath(pts, ids);
}

void check_route(const PathStructure& ps, const AnchorSet& set) {
    for (int i = 0; i < static_cast<int>(set.size()); ++i) {
        const auto r = ps.route(set, i);
        CHECK(oracles::polyline_length(r) == doctest::Approx(set.anchors[static_cast<std::size_t>(i)].weight).epsilon(1e-9));
        CHECK(r.back() == set.anchors[static_cast<std::size_t>(i)].point);
        for (std::size_t k = 0; k + 1 < r.size(); ++k) CHECK(ps.region().visible(r[k], r[k + 1]));
    }
}

Point random_inside(const PolygonDomain& d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-10, 10);
    Point s;
    do s = {u(rng), u(rng)};
    while (d.contains(s) == Containment::exterior);
    return s;
}

bool crosses(const std::vector<Point>& poly, const std::vector<Point>& q) {
    for (std::size_t i = 0; i + 1 < poly.size(); ++i)
        for (std::size_t j = 0; j + 1 < q.size(); ++j)
            if (segment_contact(poly[i], poly[i + 1], q[j], q[j + 1]) != Contact::none) return true;
    if (q.size() == 1)
        for (std::size_t i = 0; i + 1 < poly.size(); ++i)
            if (segment_distance(q[0], poly[i], poly[i + 1]) == 0.0) return true;
    return false;
}

}  // namespace

TEST_CASE("arc path") {
    const ArcPath q({{0, 0}, {3, 4}, {3, 10}}, {-1, -1, -1});
    CHECK(q.total() == 11.0);
    CHECK(q.edge_count() == 2);
    CHECK(q.at(2.5, 0) == Point{1.5, 2});
    CHECK(q.at(5, 0) == Point{3, 4});
    CHECK(q.at(8, 1) == Point{3, 7});
    CHECK(q.between(1, 9) == std::vector<Point>{{3, 4}});
    CHECK(q.between(9, 0) == std::vector<Point>{{3, 4}});
    CHECK(q.between(0, 5).empty());
    CHECK_THROWS_AS(ArcPath({{0, 0}, {0, 0}}, {-1, -1}), Error);
}

TEST_CASE("greedy prune") {
    std::vector<ArcWeight> flat;
    for (int i = 0; i <= 10; ++i) flat.push_back({static_cast<double>(i), 5});
    CHECK(greedy_prune(flat, 0.5) == std::vector<int>{0, 3, 6, 9});
    check_certified(flat, 0.5);

    CHECK(greedy_prune(std::vector<ArcWeight>{}, 0.1).empty());
    CHECK(greedy_prune(std::vector<ArcWeight>{{2, 7}}, 0.1) == std::vector<int>{0});
    // (1, 3.05) is reached through (0, 2) at cost 3 <= 1.1 * 3.05.
    CHECK(greedy_prune(std::vector<ArcWeight>{{1, 3.05}, {0, 2}}, 0.1) == std::vector<int>{1});

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ua(0, 20), uw(0, 10);
    for (int round = 0; round < 300; ++round) {
        std::vector<ArcWeight> c(1 + rng() % 40);
        for (auto& x : c) x = {ua(rng), uw(rng)};
        if (round % 3 == 0) c.push_back(c.front());  // duplicates
        for (double eps2 : {0.5, 0.1, 1.0 / 90}) check_certified(c, eps2);
    }
}

TEST_CASE("continuous graph on a square with a horizontal path") {
    const auto sq = big_square();
    const PathStructure ps(sq.region(), ArcPath({{0, 5}, {10, 5}}, {-1, -1}), 1.0);
    // Steiner hits of (0,0): every boundary ray reaching y = 5 inside the square.
    std::vector<Point> expect;
    const auto& f = ps.family();
    for (int k = 0; k < f.size(); ++k) {
        const Point d = f.boundary(k);
        if (d.y <= 0) continue;
        const double x = 5 * d.x / d.y;
        if (x >= 0 && x <= 10) expect.push_back({x, 5});
    }
    const auto hits = ps.ray_hits({0, 0});
    REQUIRE(hits.size() == expect.size());
    for (std::size_t i = 0; i < hits.size(); ++i) {
        const Point p = ps.path().at(hits[i].arc, hits[i].edge);
        CHECK(distance(p, expect[i]) < 1e-12);
        CHECK((hits[i].node >= 0) == (p == Point{0, 5} || p == Point{10, 5}));
    }
    // Steiner nodes sit on the chain and on at least one star edge.
    const auto& g = ps.graph();
    for (std::size_t v = ps.vertex_count() + 2; v < g.size(); ++v) {
        CHECK(ps.node_points()[v].y == doctest::Approx(5));
        CHECK(g[v].size() >= 2);
    }
    CHECK(ps.steiner_count() > 0);
    CHECK(ps.path_nodes().size() == 2 + ps.steiner_count());
}

TEST_CASE("vertex distance sandwich in the continuous graph") {
    const auto d = square_with_hole();
    const ExactOracle o(d);
    const double eps = 0.5;
    const PathStructure ps(d.region(), vertex_path(d, o.vertex_path(0, 6)), eps);
    for (int u = 0; u < 8; ++u) {
        const auto sp = dijkstra(ps.graph(), u);
        for (int v = 0; v < 8; ++v) {
            const double exact = o.vertex_distance(u, v);
            CHECK(sp.dist[static_cast<std::size_t>(v)] >= exact - 1e-9);
            CHECK(sp.dist[static_cast<std::size_t>(v)] <= (1 + eps / 9) * exact * (1 + 1e-12));
        }
    }
}

TEST_CASE("vertex anchors on a square diagonal") {
    const auto sq = big_square();
    const double eps = 0.5;
    const PathStructure ps(sq.region(), vertex_path(sq, {1, 3}), eps);
    const double len = ps.path().total();
    for (int v = 0; v < 4; ++v) {
        const auto& a = ps.vertex_anchors(v);
        CHECK(a.size() <= ps.anchor_bound());
        for (int i = 0; i <= 100; ++i) {
            const double arc = len * i / 100;
            const double exact = distance(sq.vertices()[static_cast<std::size_t>(v)], ps.path().at(arc, 0));
            const double est = anchor_estimate(a, arc);
            CHECK(est >= exact - 1e-9);
            CHECK(est <= (1 + eps) * exact + 1e-9);
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a.anchors[i].weight >= distance(a.owner, a.anchors[i].point) - 1e-12);
            const auto r = ps.vertex_route(v, static_cast<int>(i));
            CHECK(oracles::polyline_length(r) == doctest::Approx(a.anchors[i].weight).epsilon(1e-9));
        }
    }
    // v on the path: one anchor at v with weight 0.
    CHECK(ps.vertex_anchors(1).size() == 1);
    CHECK(ps.vertex_anchors(1).anchors.front().weight == 0.0);
    // The lightest anchor of (0,0) sits near the foot of its perpendicular.
    const auto& a0 = ps.vertex_anchors(0).anchors;
    const auto best = std::min_element(a0.begin(), a0.end(), [](auto& x, auto& y) { return x.weight < y.weight; });
    CHECK(distance(best->point, {5, 5}) < 0.5);
}

TEST_CASE("query anchors in an empty rectangle") {
    const auto rect = PolygonDomain::create({{0, 0}, {12, 0}, {12, 6}, {0, 6}});
    const double eps = 0.5;
    const PathStructure ps(rect.region(), vertex_path(rect, {0, 1}), eps);
    for (const Point s : {Point{5, 3}, Point{1, 0.5}, Point{11.5, 5.5}, Point{6, 6}}) {
        const auto a = ps.query_anchor_set(s);
        REQUIRE(!a.empty());
        CHECK(a.size() <= ps.anchor_bound());
        const auto k = static_cast<std::size_t>(ps.family().size());
        CHECK(ps.candidate_count(s) <= k + k * ps.anchor_bound());
        for (int i = 0; i <= 100; ++i) {
            const double arc = 12.0 * i / 100;
            const double exact = distance(s, {arc, 0});
            const double est = anchor_estimate(a, arc);
            CHECK(est >= exact - 1e-9);
            CHECK(est <= (1 + eps) * exact + 1e-9);
        }
        check_route(ps, a);
    }
    const auto a = ps.query_anchor_set({5, 3});
    const auto best = std::min_element(a.anchors.begin(), a.anchors.end(), [](auto& x, auto& y) { return x.weight < y.weight; });
    CHECK(best->arc == doctest::Approx(5).epsilon(0.02));
    CHECK(best->via == -1);
    // s on Q.
    const auto on = ps.query_anchor_set({4, 0});
    CHECK(on.anchors.front().weight == 0.0);
    CHECK(anchor_estimate(on, 9) == 5.0);
}

TEST_CASE("via-path distance on a square midline") {
    const auto sq = big_square();
    for (double eps : {1.0, 0.5}) {
        const PathStructure ps(sq.region(), ArcPath({{5, 0}, {5, 10}}, {-1, -1}), eps);
        const auto as = ps.query_anchor_set({2, 5});
        const auto at = ps.query_anchor_set({8, 5});
        const auto r = via_q_distance(as, at);
        CHECK(r.value >= 6.0 - 1e-12);
        CHECK(r.value <= (1 + eps) * 6.0);
        const auto w = ps.witness(as, at, r);
        CHECK(w.front() == Point{2, 5});
        CHECK(w.back() == Point{8, 5});
        CHECK(oracles::polyline_length(w) == doctest::Approx(r.value).epsilon(1e-9));
        const auto same = ps.query_anchor_set({5, 5});
        CHECK(via_q_distance(same, same).value == 0.0);
    }
    CHECK(via_q_distance(AnchorSet{}, AnchorSet{}).value == std::numeric_limits<double>::infinity());
}

TEST_CASE("single-vertex path") {
    const auto d = square_with_hole();
    const PathStructure ps(d.region(), vertex_path(d, {4}), 1.0);
    for (int v = 0; v < 8; ++v) CHECK(ps.vertex_anchors(v).size() == 1);
    const auto a = ps.query_anchor_set({2, 2});
    const auto b = ps.query_anchor_set({5, 2});
    const auto r = via_q_distance(a, b);
    CHECK(r.value == doctest::Approx(distance({2, 2}, {4, 4}) + distance({4, 4}, {5, 2})));
}

TEST_CASE("random domains: realizability, counts and crossing sandwich") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 4; ++k) {
        const auto d = random_domain(300 + static_cast<std::uint64_t>(k), 20, k % 3);
        const ExactOracle o(d);
        const int n = static_cast<int>(d.vertex_count());
        const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
        int v = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (v == u) v = (u + n / 2) % n;
        const double eps = k % 2 == 0 ? 0.5 : 1.0;
        const PathStructure ps(d.region(), vertex_path(d, o.vertex_path(u, v)), eps);
        for (int w = 0; w < n; ++w) {
            const auto& a = ps.vertex_anchors(w);
            CHECK(a.size() <= ps.anchor_bound());
            for (std::size_t i = 0; i < a.size(); ++i) {
                const auto r = ps.vertex_route(w, static_cast<int>(i));
                CHECK(oracles::polyline_length(r) == doctest::Approx(a.anchors[i].weight).epsilon(1e-9));
                for (std::size_t j = 0; j + 1 < r.size(); ++j) CHECK(d.visible(r[j], r[j + 1]));
            }
        }
        int crossing = 0;
        for (int i = 0; i < 40; ++i) {
            const Point s = random_inside(d, rng);
            const Point t = random_inside(d, rng);
            const auto as = ps.query_anchor_set(s);
            const auto at = ps.query_anchor_set(t);
            check_route(ps, as);
            CHECK(as.size() <= ps.anchor_bound());
            const auto r = via_q_distance(as, at);
            const auto exact = o.distance(s, t);
            CHECK(r.value >= exact.length - 1e-9);
            if (crosses(exact.path, ps.path().points)) {
                ++crossing;
                CHECK(r.value <= (1 + eps) * exact.length * (1 + 1e-9));
            }
            const auto wit = ps.witness(as, at, r);
            CHECK(oracles::polyline_length(wit) == doctest::Approx(r.value).epsilon(1e-9));
        }
        CHECK(crossing > 0);
    }
}

TEST_CASE("epsilon composition") {
    for (double eps : {1.0, 0.5, 0.25, 0.1, 0.01}) {
        const double e = eps / 9;
        CHECK((1 + e) * (e * (1 + e) + e + 1) <= 1 + eps);
    }
}
