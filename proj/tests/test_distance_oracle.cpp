#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "geodesic/distance_oracle.hpp"
#include "geodesic/random_domain.hpp"
#include "oracles.hpp"

using namespace geodesic;
using namespace fixtures;

namespace {

void check_witness(const PolygonDomain& d, const DistanceResult& r, Point s, Point t) {
    REQUIRE(!r.witness.empty());
    CHECK(r.witness.front() == s);
    CHECK(r.witness.back() == t);
    CHECK(oracles::polyline_length(r.witness) == doctest::Approx(r.estimate).epsilon(1e-9));
    for (std::size_t i = 0; i + 1 < r.witness.size(); ++i) CHECK(d.region().nearly_visible(r.witness[i], r.witness[i + 1], 1e-9));
}

}  // namespace

TEST_CASE("single triangle has no path structures") {
    const DistanceOracle o(triangle(), 0.5);
    CHECK(o.structure_count() == 0);
    const auto r = o.query({1, 1}, {2, 0.5});
    CHECK(r.estimate == distance({1, 1}, {2, 0.5}));
    CHECK(r.node == -1);
    CHECK(o.query({1, 1}, {1, 1}).estimate == 0.0);
    CHECK_THROWS_AS(o.query({5, 5}, {1, 1}), Error);
    CHECK_THROWS_AS(DistanceOracle(triangle(), 0.0), Error);
    CHECK_THROWS_AS(DistanceOracle(triangle(), 1.5), Error);
}

TEST_CASE("square with a hole") {
    const auto d = square_with_hole();
    const DistanceOracle o(d, 0.25);
    // Every internal node carries one structure per separator path.
    for (const auto& nd : o.tree().nodes()) {
        CHECK(o.structures(nd.id).size() == nd.paths.size());
        for (const auto& ps : o.structures(nd.id)) {
            for (int v = 0; v < static_cast<int>(ps.vertex_count()); ++v) CHECK(ps.vertex_anchors(v).size() <= ps.anchor_bound());
            CHECK(ps.stored_anchor_count() <= ps.vertex_count() * ps.anchor_bound());
        }
    }
    const auto r = o.query({2, 5}, {8, 5});
    CHECK(r.estimate >= 6.4721);
    CHECK(r.estimate <= 8.0902);
    check_witness(d, r, {2, 5}, {8, 5});
    const auto back = o.query({8, 5}, {2, 5});
    CHECK(back.estimate == r.estimate);
    CHECK(o.query({3, 3}, {3, 3}).estimate == 0.0);
    CHECK_THROWS_AS(o.query({5, 5}, {1, 1}), Error);
}

TEST_CASE("convex domain") {
    const auto d = PolygonDomain::create({{0, 0}, {4, 0}, {6, 3}, {4, 6}, {0, 6}, {-2, 3}});
    const double eps = 0.5;
    const DistanceOracle o(d, eps);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ux(-2, 6), uy(0, 6);
    for (int i = 0; i < 100; ++i) {
        Point s, t;
        do s = {ux(rng), uy(rng)};
        while (d.contains(s) == Containment::exterior);
        do t = {ux(rng), uy(rng)};
        while (d.contains(t) == Containment::exterior);
        const auto r = o.query(s, t);
        CHECK(r.estimate >= distance(s, t) * (1 - 1e-12));
        CHECK(r.estimate <= (1 + eps) * distance(s, t) * (1 + 1e-9));
        check_witness(d, r, s, t);
    }
    // Two vertices of one triangle: the straight segment.
    const auto& tri = o.tree().triangulation();
    const auto& v = tri.triangles.front();
    const Point a = tri.points[static_cast<std::size_t>(v[0])];
    const Point b = tri.points[static_cast<std::size_t>(v[1])];
    CHECK(o.query(a, b).estimate == distance(a, b));
}

TEST_CASE("random domains against the exact oracle") {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 4; ++k) {
        const auto d = random_domain(500 + static_cast<std::uint64_t>(k), 16 + 4 * k, k % 3);
        const ExactOracle ex(d);
        const double eps = k % 2 == 0 ? 0.5 : 0.25;
        const DistanceOracle o(d, eps);
        std::uniform_real_distribution<double> u(-10, 10);
        for (int i = 0; i < 40; ++i) {
            Point s, t;
            do s = {u(rng), u(rng)};
            while (d.contains(s) == Containment::exterior);
            // Every few pairs, put t on a polygon vertex or on s.
            if (i % 7 == 0) t = d.vertices()[rng() % d.vertex_count()];
            else if (i % 11 == 0) t = s;
            else do t = {u(rng), u(rng)};
            while (d.contains(t) == Containment::exterior);
            const auto r = o.query(s, t);
            const double exact = ex.distance_value(s, t);
            CHECK(r.estimate >= exact * (1 - 1e-9));
            CHECK(r.estimate <= (1 + eps) * exact * (1 + 1e-9));
            check_witness(d, r, s, t);
            CHECK(o.query(t, s).estimate == r.estimate);
        }
        // Points on separator paths.
        for (const auto& nd : o.tree().nodes()) {
            for (std::size_t j = 0; j < nd.paths.size(); ++j) {
                const auto pts = o.tree().path_points(nd.id, static_cast<int>(j));
                if (pts.size() < 2) continue;
                // ring-edge midpoints can round outside
                if (d.contains(pts[0] + 0.5 * (pts[1] - pts[0])) == Containment::exterior) continue;
                const Point s = pts[0] + 0.5 * (pts[1] - pts[0]);
                Point t;
                do t = {u(rng), u(rng)};
                while (d.contains(t) == Containment::exterior);
                const auto r = o.query(s, t);
                const double exact = ex.distance_value(s, t);
                CHECK(r.estimate >= exact * (1 - 1e-9));
                CHECK(r.estimate <= (1 + eps) * exact * (1 + 1e-9));
            }
        }
        std::size_t total = 0;
        for (const auto& ls : o.level_stats()) total += ls.anchors;
        CHECK(total == o.stored_anchor_count());
    }
}
