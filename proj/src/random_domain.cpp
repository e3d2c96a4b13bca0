#include "geodesic/random_domain.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace geodesic {

namespace {

double ring_gap(const std::vector<Point>& a, const std::vector<Point>& b) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Point p = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            best = std::min(best, segment_distance(p, b[j], b[(j + 1) % b.size()]));
        }
    }
    return best;
}

}  // namespace

PolygonDomain random_domain(std::uint64_t seed, int vertex_budget, int holes) {
    if (holes < 0 || vertex_budget < 3 + 3 * holes) throw Error("vertex budget too small for the hole count");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const int hole_size = vertex_budget - 3 >= 4 * holes ? 4 : 3;
    const int m = vertex_budget - hole_size * holes;

    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Point> outer;
        const double step = 2.0 * std::numbers::pi / m;
        for (int i = 0; i < m; ++i) {
            const double ang = step * (i + 0.35 * (unit(rng) - 0.5));
            const double r = 5.0 + 5.0 * unit(rng);
            outer.push_back({r * std::cos(ang), r * std::sin(ang)});
        }
        std::vector<std::vector<Point>> hs;
        int tries = 0;
        while (static_cast<int>(hs.size()) < holes && tries < 500) {
            ++tries;
            const double cx = -6.0 + 12.0 * unit(rng);
            const double cy = -6.0 + 12.0 * unit(rng);
            const double wx = 0.4 + 1.4 * unit(rng);
            const double wy = 0.4 + 1.4 * unit(rng);
            std::vector<Point> h;
            if (hole_size == 4) {
                h = {{cx - wx, cy - wy}, {cx - wx, cy + wy}, {cx + wx, cy + wy}, {cx + wx, cy - wy}};
            } else {
                h = {{cx - wx, cy - wy}, {cx - wx, cy + wy}, {cx + wx, cy - wy}};
            }
            bool ok = true;
            try {
                PolygonDomain::create(outer, {h});
            } catch (const Error&) {
                ok = false;
            }
            if (!ok || ring_gap(h, outer) < 0.3 || ring_gap(outer, h) < 0.3) continue;
            for (const auto& g : hs) {
                if (ring_gap(h, g) < 0.3 || ring_gap(g, h) < 0.3) ok = false;
            }
            if (!ok) continue;
            hs.push_back(h);
        }
        if (static_cast<int>(hs.size()) < holes) continue;
        try {
            return PolygonDomain::create(outer, hs);
        } catch (const Error&) {
        }
    }
    throw Error("could not place holes after repeated attempts");
}

}  // namespace geodesic
