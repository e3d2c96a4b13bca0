// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Exact references come from ExactOracle (visibility graph + Dijkstra), a
// Floyd-Warshall oracle restricted to a subpolygon, and linear scans.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>

#include "geodesic/distance_oracle.hpp"
#include "geodesic/dynamic_nn.hpp"
#include "geodesic/euclid_ann.hpp"
#include "geodesic/random_domain.hpp"
#include "geodesic/voronoi1d.hpp"

using namespace geodesic;

namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
    long checks = 0;
    long violations = 0;
    double worst = 1.0;  // largest observed ratio against the reference
    std::string first_failure;

    void check(bool ok, double ratio, const std::string& what) {
        ++checks;
        if (!ok && violations++ == 0) first_failure = what;
        if (std::isfinite(ratio)) worst = std::max(worst, ratio);
    }
};

Point random_point(const PolygonDomain& d, std::mt19937_64& rng) {
    Point lo = d.outer().front(), hi = lo;
    for (Point p : d.outer()) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    std::uniform_real_distribution<double> ux(lo.x, hi.x), uy(lo.y, hi.y);
    Point p;
    do p = {ux(rng), uy(rng)};
    while (d.contains(p) == Containment::exterior);
    return p;
}

std::string where(const char* fmt, double a, double b, double c) {
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, a, b, c);
    return buf;
}

// Geodesic distances inside one region: Floyd-Warshall over its vertices.
// Points sampled on a boundary path are rounded off it, so visibility of
// free points is judged with a tolerance of 1e-9 times the region extent.
class RegionOracle {
public:
    explicit RegionOracle(const Region& r) : r_(r), tol_(1e-9 * r.extent()) {
        for (int v : r.vertex_ids()) pts_.push_back(r.point(v));
        n_ = pts_.size();
        d_.assign(n_ * n_, std::numeric_limits<double>::infinity());
        for (std::size_t i = 0; i < n_; ++i) {
            d_[i * n_ + i] = 0;
            for (std::size_t j = i + 1; j < n_; ++j)
                if (r.visible(pts_[i], pts_[j])) d_[i * n_ + j] = d_[j * n_ + i] = distance(pts_[i], pts_[j]);
        }
        for (std::size_t k = 0; k < n_; ++k)
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) d_[i * n_ + j] = std::min(d_[i * n_ + j], d_[i * n_ + k] + d_[k * n_ + j]);
    }

    std::vector<int> seen_by(Point p) const {
        std::vector<int> out;
        for (std::size_t v = 0; v < n_; ++v)
            if (r_.nearly_visible(p, pts_[v], tol_)) out.push_back(static_cast<int>(v));
        return out;
    }

    std::vector<double> from(Point s) const {
        std::vector<double> out(n_, std::numeric_limits<double>::infinity());
        for (int a : seen_by(s))
            for (std::size_t w = 0; w < n_; ++w)
                out[w] = std::min(out[w], distance(s, pts_[static_cast<std::size_t>(a)]) + d_[static_cast<std::size_t>(a) * n_ + w]);
        return out;
    }

    double value(Point s, const std::vector<double>& from_s, Point t, const std::vector<int>& seen_t) const {
        if (r_.nearly_visible(s, t, tol_)) return distance(s, t);
        double best = std::numeric_limits<double>::infinity();
        for (int w : seen_t) best = std::min(best, from_s[static_cast<std::size_t>(w)] + distance(pts_[static_cast<std::size_t>(w)], t));
        return best;
    }

private:
    const Region& r_;
    double tol_;
    std::vector<Point> pts_;
    std::size_t n_ = 0;
    std::vector<double> d_;
};

struct SuiteDomain {
    std::uint64_t seed;
    PolygonDomain domain;
};

// 20 domains, vertex budgets 12..60, 0-2 holes.
std::vector<SuiteDomain> make_suite() {
    std::vector<SuiteDomain> out;
    for (std::uint64_t seed = 9000; out.size() < 20; ++seed) {
        const int i = static_cast<int>(out.size());
        try {
            out.push_back({seed, random_domain(seed, 12 + 12 * (i % 5), i % 3)});
        } catch (const Error&) {
        }
    }
    return out;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(int id, const char* name, const Tally& t, const std::string& extra, double secs) {
    std::printf("%s criterion %d (%s): %ld checks, %ld violations, %s [%.1fs]\n", t.violations == 0 && t.checks > 0 ? "PASS" : "FAIL",
                id, name, t.checks, t.violations, extra.c_str(), secs);
    if (t.violations) std::printf("     first failure: %s\n", t.first_failure.c_str());
    std::fflush(stdout);
}

std::string ratio_text(const char* label, double worst) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%s %.6f", label, worst);
    return buf;
}

}  // namespace

int main() {
    const auto suite = make_suite();
    const std::vector<double> eps_list{0.5, 0.25, 0.1};
    std::printf("suite: %zu domains, n in [", suite.size());
    std::size_t nmin = 1000, nmax = 0;
    for (const auto& s : suite) nmin = std::min(nmin, s.domain.vertex_count()), nmax = std::max(nmax, s.domain.vertex_count());
    std::printf("%zu, %zu]\n", nmin, nmax);

    Tally sandwich, nn, spanner, anchors, cardinality, separators, envelope, ann;
    double t_sandwich = 0, t_nn = 0, t_anchors = 0, t_spanner = 0, t_sep = 0;
    std::map<double, double> worst_sandwich;

    for (const auto& sd : suite) {
        const PolygonDomain& d = sd.domain;
        const ExactOracle exact(d);
        const RegionOracle whole(d.region());

        // 3: cone graph spanner over all vertex pairs.
        auto t0 = Clock::now();
        for (double eps : {0.5, 0.1}) {
            const auto g = build_cone_graph(d, ConeFamily(eps));
            for (std::size_t u = 0; u < g.points.size(); ++u) {
                const auto sp = dijkstra(g.adj, static_cast<int>(u));
                for (std::size_t v = 0; v < g.points.size(); ++v) {
                    const double e = exact.vertex_distance(g.ids[u], g.ids[v]);
                    const double got = sp.dist[v];
                    spanner.check(got >= e * (1 - 1e-9) && got <= (1 + eps) * e * (1 + 1e-9), e > 0 ? got / e : 1.0,
                                  where("vertex pair stretch %.17g / %.17g (eps %.2f)", got, e, eps));
                }
            }
        }
        t_spanner += seconds_since(t0);

        for (double eps : eps_list) {
            std::mt19937_64 rng(sd.seed * 101 + static_cast<std::uint64_t>(eps * 1000));
            t0 = Clock::now();
            auto oracle = std::make_shared<const DistanceOracle>(d, eps);

            // 1: two-point sandwich.
            for (int i = 0; i < 50; ++i) {
                const Point s = random_point(d, rng), t = random_point(d, rng);
                const auto r = oracle->query(s, t);
                const double e = exact.distance_value(s, t);
                sandwich.check(r.estimate >= e * (1 - 1e-9) && r.estimate <= (1 + eps) * e * (1 + 1e-9),
                               e > 0 ? r.estimate / e : 1.0, where("estimate %.17g exact %.17g eps %.2f", r.estimate, e, eps));
                if (e > 0) worst_sandwich[eps] = std::max(worst_sandwich[eps], r.estimate / e);
            }
            t_sandwich += seconds_since(t0);

            // 4 and 5: anchors of vertices and query points on every separator path.
            t0 = Clock::now();
            const auto& tree = oracle->tree();
            for (const auto& nd : tree.nodes()) {
                const auto& list = oracle->structures(nd.id);
                if (list.empty()) continue;
                const Region& region = list.front().region();
                const RegionOracle local(region);
                for (const PathStructure& ps : list) {
                    for (int v = 0; v < static_cast<int>(ps.vertex_count()); ++v)
                        cardinality.check(ps.vertex_anchors(v).size() <= ps.anchor_bound(),
                                          static_cast<double>(ps.vertex_anchors(v).size()) / static_cast<double>(ps.anchor_bound()),
                                          "vertex anchor set too large");
                    std::vector<AnchorSet> owners;
                    const int nv = static_cast<int>(ps.vertex_count());
                    for (int k = 0; k < std::min(10, nv); ++k) owners.push_back(ps.vertex_anchors(k * nv / std::min(10, nv)));
                    for (int k = 0; k < 10; ++k) {
                        Point s;
                        do s = random_point(d, rng);
                        while (region.contains(s) == Containment::exterior);
                        owners.push_back(ps.query_anchor_set(s));
                        const auto& a = owners.back();
                        cardinality.check(a.size() <= ps.anchor_bound(), static_cast<double>(a.size()) / static_cast<double>(ps.anchor_bound()),
                                          "query anchor set too large");
                        const auto k_cones = static_cast<std::size_t>(ps.family().size());
                        cardinality.check(ps.candidate_count(s) <= k_cones + k_cones * ps.anchor_bound(), 1.0, "candidate pool too large");
                    }
                    struct Sample {
                        double arc;
                        Point at;
                        std::vector<int> seen_whole, seen_local;
                    };
                    std::vector<Sample> samples;
                    const ArcPath& q = ps.path();
                    for (int i = 0; i < 100; ++i) {
                        const double arc = q.total() * (i + 0.5) / 100;
                        int edge = 0;
                        while (edge + 1 < static_cast<int>(q.edge_count()) && q.prefix[static_cast<std::size_t>(edge) + 1] < arc) ++edge;
                        const Point qp = q.at(arc, edge);
                        if (region.contains(qp) == Containment::exterior) continue;  // path outside this subpolygon
                        samples.push_back({arc, qp, whole.seen_by(qp), local.seen_by(qp)});
                    }
                    for (const AnchorSet& a : owners) {
                        const auto from_whole = whole.from(a.owner);
                        const auto from_local = local.from(a.owner);
                        for (const Sample& x : samples) {
                            double est = std::numeric_limits<double>::infinity();
                            for (const auto& an : a.anchors) est = std::min(est, an.weight + std::abs(an.arc - x.arc));
                            const double lower = whole.value(a.owner, from_whole, x.at, x.seen_whole);
                            const double upper = local.value(a.owner, from_local, x.at, x.seen_local);
                            anchors.check(est >= lower - 1e-9 * (1 + lower) && est <= (1 + eps) * upper * (1 + 1e-9) + 1e-12,
                                          upper > 0 ? est / upper : 1.0,
                                          where("anchor estimate %.17g, domain distance %.17g, subpolygon distance %.17g", est, lower, upper));
                        }
                    }
                }
            }
            t_anchors += seconds_since(t0);

            // 2: dynamic nearest neighbor scripts.
            t0 = Clock::now();
            NNIndex index(oracle);
            std::map<int, Point> live;
            int next = 0;
            for (int op = 0; op < 200; ++op) {
                const auto kind = rng() % 3;
                if ((kind == 0 || live.empty()) && live.size() < 50) {
                    const Point p = random_point(d, rng);
                    index.insert(p, next);
                    live[next++] = p;
                } else if (kind == 1 && !live.empty()) {
                    auto it = live.begin();
                    std::advance(it, static_cast<long>(rng() % live.size()));
                    index.erase(it->first);
                    live.erase(it);
                } else {
                    const Point q = random_point(d, rng);
                    const auto r = index.query(q);
                    const auto from = exact.vertex_distances_from(q);
                    double best = std::numeric_limits<double>::infinity();
                    for (const auto& [id, p] : live) best = std::min(best, exact.distance_value(q, from, p));
                    if (!r) {
                        nn.check(live.empty(), 1.0, "no answer with live sites");
                        continue;
                    }
                    const double got = exact.distance_value(q, from, live.at(r->site));
                    nn.check(got <= (1 + eps) * best * (1 + 1e-9) + 1e-12 && r->estimate >= got - 1e-9 * (1 + got) &&
                                 r->estimate <= (1 + eps) * best * (1 + 1e-9) + 1e-12,
                             best > 0 ? got / best : 1.0, where("answer %.17g, nearest %.17g, eps %.2f", got, best, eps));
                }
                if (op % 50 == 49) {
                    NNIndex fresh(oracle);
                    for (const auto& [id, p] : live) fresh.insert(p, id);
                    for (int i = 0; i < 20; ++i) {
                        const Point q = random_point(d, rng);
                        const auto a = index.query(q);
                        const auto b = fresh.query(q);
                        const bool same = a.has_value() == b.has_value() && (!a || (a->site == b->site && a->estimate == b->estimate));
                        nn.check(same, 1.0, "rebuilt index disagrees");
                    }
                    for (const auto& nd : tree.nodes())
                        for (std::size_t j = 0; j < nd.paths.size(); ++j)
                            for (const auto& [id, p] : live)
                                if (index.path_index(nd.id, static_cast<int>(j)).contains(id)) {
                                    const auto& a = index.path_index(nd.id, static_cast<int>(j)).site_anchors(id);
                                    const auto bound = index.path_index(nd.id, static_cast<int>(j)).structure().anchor_bound();
                                    cardinality.check(a.size() <= bound, static_cast<double>(a.size()) / static_cast<double>(bound), "site anchor set too large");
                                }
                }
            }
            t_nn += seconds_since(t0);
        }

        // 6: separator balance, height, geodesic paths.
        t0 = Clock::now();
        const SeparatorTree st = build_separator_tree(exact);
        const auto total = static_cast<double>(st.triangulation().triangles.size());
        const int height_bound = static_cast<int>(std::ceil(std::log(total) / std::log(1.5))) + 2;
        separators.check(st.height() <= height_bound, static_cast<double>(st.height()) / height_bound,
                         where("height %.0f > bound %.0f (N = %.0f)", st.height(), height_bound, total));
        for (const auto& nd : st.nodes()) {
            const auto w = static_cast<double>(nd.triangles.size());
            for (int c : nd.children) {
                const auto wc = static_cast<double>(st.node(c).triangles.size());
                separators.check(wc <= std::ceil(2 * w / 3), wc / std::ceil(2 * w / 3), where("child %.0f of %.0f triangles (node %.0f)", wc, w, nd.id));
            }
            for (const auto& p : nd.paths) {
                double len = 0;
                for (std::size_t i = 0; i + 1 < p.size(); ++i) len += distance(d.vertex(p[i]), d.vertex(p[i + 1]));
                const double e = exact.vertex_distance(p.front(), p.back());
                separators.check(std::abs(len - e) <= 1e-9 * (1 + e), 1.0, where("path length %.17g, geodesic %.17g (node %.0f)", len, e, nd.id));
            }
        }
        t_sep += seconds_since(t0);
        std::fprintf(stderr, "domain seed %llu n=%zu h=%zu done\n", static_cast<unsigned long long>(sd.seed), d.vertex_count(), d.hole_count());
    }

    std::string worst;
    for (const auto& [e, w] : worst_sandwich) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%seps %.2f: %.6f", worst.empty() ? "" : ", ", e, w);
        worst += buf;
    }
    report(1, "two-point oracle sandwich", sandwich, "max stretch " + worst, t_sandwich);
    report(2, "dynamic nn closeness and rebuild equivalence", nn, ratio_text("max answer/nearest", nn.worst), t_nn);
    report(3, "cone graph spanner", spanner, ratio_text("max stretch", spanner.worst), t_spanner);
    report(4, "anchor correctness", anchors, ratio_text("max estimate/subpolygon distance", anchors.worst), t_anchors);
    report(5, "anchor cardinality", cardinality, ratio_text("max size/bound", cardinality.worst), t_anchors);
    report(6, "separator balance and height", separators, ratio_text("max child share / height ratio", separators.worst), t_sep);

    // 7: 1D envelope against a linear scan, exact equality.
    auto t0 = Clock::now();
    {
        std::mt19937_64 rng(77);
        const double total = 25.0;
        Voronoi1D v(total);
        struct Item {
            double a0, a1;
            int owner;
        };
        std::map<int, Item> live;
        std::uniform_real_distribution<double> ua(0, total), uw(0, 10);
        for (int state = 0; state < 1000; ++state) {
            if (live.empty() || rng() % 3 != 0) {
                double a0 = ua(rng), a1 = uw(rng);
                if (state % 2) a0 = std::floor(a0 * 8) / 8, a1 = std::floor(a1 * 8) / 8;  // force ties
                const int owner = static_cast<int>(rng() % 200);
                live[v.insert(a0, a1, owner)] = {a0, a1, owner};
            } else {
                auto it = live.begin();
                std::advance(it, static_cast<long>(rng() % live.size()));
                v.erase(it->first);
                live.erase(it);
            }
            for (int k = 0; k < 1000; ++k) {
                double q = ua(rng);
                if (k % 4 == 0) q = std::floor(q * 8) / 8;
                double best = std::numeric_limits<double>::infinity();
                int owner = -1;
                for (const auto& [h, it] : live) {
                    const double val = it.a1 + std::abs(it.a0 - q);
                    if (val < best || (val == best && it.owner < owner)) best = val, owner = it.owner;
                }
                const auto r = v.query(q);
                envelope.check(live.empty() ? !r : (r && r->value == best && r->owner == owner), 1.0, where("q %.17g expected %.17g owner %.0f", q, best, owner));
            }
        }
    }
    report(7, "1D envelope exactness", envelope, "exact equality", seconds_since(t0));

    // 8: Euclidean approximate nearest neighbor.
    t0 = Clock::now();
    for (double eps : {0.5, 0.25}) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(eps * 100));
        std::uniform_real_distribution<double> u(0, 1000);
        EuclidAnnIndex idx(eps);
        std::vector<Point> sites;
        for (int i = 0; i < 500; ++i) {
            sites.push_back({u(rng), u(rng)});
            idx.insert(sites.back(), i);
        }
        for (int i = 0; i < 500; ++i) {
            const Point q{u(rng) * 1.2 - 100, u(rng) * 1.2 - 100};
            double best = std::numeric_limits<double>::infinity();
            for (Point s : sites) best = std::min(best, distance(q, s));
            const auto r = idx.query(q);
            ann.check(r && r->distance <= (1 + eps) * best * (1 + 1e-12), r ? r->distance / best : 0.0,
                      where("answer %.17g nearest %.17g eps %.2f", r ? r->distance : -1.0, best, eps));
        }
    }
    report(8, "Euclidean approximate nearest neighbor", ann, ratio_text("max answer/nearest", ann.worst), seconds_since(t0));

    const bool ok = sandwich.violations + nn.violations + spanner.violations + anchors.violations + cardinality.violations +
                        separators.violations + envelope.violations + ann.violations ==
                    0;
    std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return ok ? 0 : 1;
}
