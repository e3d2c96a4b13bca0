#include <random>

#include "doctest.h"
#include "geodesic/euclid_ann.hpp"

using namespace geodesic;

namespace {

std::optional<std::pair<double, int>> brute_dominance(const std::map<int, std::array<double, 3>>& pts, double qx, double qy) {
    std::optional<std::pair<double, int>> best;
    for (const auto& [id, p] : pts) {
        if (p[0] < qx || p[1] < qy) continue;
        if (!best || p[2] < best->first || (p[2] == best->first && id < best->second)) best = {{p[2], id}};
    }
    return best;
}

}  // namespace

TEST_CASE("dominance index matches filtering") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 10; ++round) {
        DominanceIndex idx;
        std::map<int, std::array<double, 3>> pts;
        int next = 0;
        for (int op = 0; op < 800; ++op) {
            if (pts.empty() || rng() % 4 != 0) {
                // small integer grid so that equal coordinates and values occur
                const std::array<double, 3> p{static_cast<double>(rng() % 30), static_cast<double>(rng() % 30),
                                              static_cast<double>(rng() % 10)};
                idx.insert(p[0], p[1], p[2], next);
                pts[next++] = p;
            } else {
                auto it = pts.begin();
                std::advance(it, static_cast<long>(rng() % pts.size()));
                idx.erase(it->first);
                pts.erase(it);
            }
            CHECK(idx.size() == pts.size());
            for (int k = 0; k < 4; ++k) {
                const double qx = static_cast<double>(rng() % 32) - 1, qy = static_cast<double>(rng() % 32) - 1;
                CHECK(idx.query(qx, qy) == brute_dominance(pts, qx, qy));
            }
        }
        CHECK_THROWS_AS(idx.erase(-5), Error);
        CHECK_THROWS_AS(idx.insert(0, 0, 0, pts.empty() ? 0 : pts.begin()->first), Error);
    }
}

TEST_CASE("small examples") {
    EuclidAnnIndex idx(0.5);
    CHECK_FALSE(idx.query({1, 1}));
    idx.insert({0, 0}, 1);
    idx.insert({10, 0}, 2);
    auto r = idx.query({1, 0});
    REQUIRE(r);
    CHECK(r->id == 1);
    CHECK(r->distance == 1.0);
    idx.erase(1);
    CHECK(idx.query({1, 0})->id == 2);
    idx.erase(2);
    CHECK_FALSE(idx.query({1, 0}));
    CHECK_THROWS_AS(idx.erase(2), Error);

    // Same coordinates, distinct ids: both retrievable, ties to the smaller id.
    idx.insert({3, 3}, 7);
    idx.insert({3, 3}, 4);
    CHECK(idx.query({0, 0})->id == 4);
    CHECK(idx.query({3, 3})->distance == 0.0);
    idx.erase(4);
    CHECK(idx.query({0, 0})->id == 7);
    CHECK_THROWS_AS(idx.insert({1, 1}, 7), Error);
}

TEST_CASE("per-cone candidates are cone minima") {
    EuclidAnnIndex idx(1.0);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 200; ++i) idx.insert({u(rng), u(rng)}, i);
    const auto& f = idx.family();
    for (int i = 0; i < 50; ++i) {
        const Point q{u(rng), u(rng)};
        for (int k = 0; k < f.size(); ++k) {
            const auto qp = idx.project(k, q);
            std::optional<std::pair<double, int>> best;
            for (int s = 0; s < 200; ++s) {
                const auto sp = idx.project(k, idx.site(s));
                if (sp[0] < qp[0] || sp[1] < qp[1]) continue;
                // Cone membership agrees with the angular cone away from its boundary rays.
                const Point d = idx.site(s) - q;
                const double c1 = cross(f.boundary(k), d), c2 = cross(f.boundary((k + 1) % f.size()), d);
                if (c1 > 1e-9 && c2 < -1e-9) CHECK(f.index_of(d) == k);
                if (!best || sp[2] < best->first || (sp[2] == best->first && s < best->second)) best = {{sp[2], s}};
            }
            const auto c = idx.cone_candidate(k, q);
            REQUIRE(c.has_value() == best.has_value());
            if (c) CHECK(*c == best->second);
        }
    }
}

TEST_CASE("closeness against a linear scan") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 100);
    for (double eps : {0.5, 0.25}) {
        EuclidAnnIndex idx(eps);
        std::vector<Point> s;
        for (int i = 0; i < 300; ++i) {
            s.push_back({u(rng), u(rng)});
            idx.insert(s.back(), i);
        }
        for (int i = 0; i < 300; ++i) {
            const Point q{u(rng) * 1.2 - 10, u(rng) * 1.2 - 10};
            double exact = std::numeric_limits<double>::infinity();
            for (const Point p : s) exact = std::min(exact, distance(p, q));
            const auto r = idx.query(q);
            REQUIRE(r);
            CHECK(r->distance == distance(q, s[static_cast<std::size_t>(r->id)]));
            CHECK(r->distance <= (1 + eps) * exact * (1 + 1e-12));
        }
    }
}

TEST_CASE("updates agree with a rebuilt index") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0, 10);
    EuclidAnnIndex idx(0.5);
    std::map<int, Point> live;
    for (int op = 0; op < 400; ++op) {
        if (live.empty() || rng() % 3 != 0) {
            const int id = static_cast<int>(rng() % 1000);
            if (live.count(id)) continue;
            live[id] = {u(rng), u(rng)};
            idx.insert(live[id], id);
        } else {
            auto it = live.begin();
            std::advance(it, static_cast<long>(rng() % live.size()));
            idx.erase(it->first);
            live.erase(it);
        }
        if (op % 50 == 49) {
            EuclidAnnIndex fresh(0.5);
            for (const auto& [id, p] : live) fresh.insert(p, id);
            for (int i = 0; i < 50; ++i) {
                const Point q{u(rng), u(rng)};
                const auto a = idx.query(q);
                const auto b = fresh.query(q);
                REQUIRE(a.has_value() == b.has_value());
                if (a) {
                    CHECK(a->id == b->id);
                    CHECK(a->distance == b->distance);
                }
            }
        }
    }
}
