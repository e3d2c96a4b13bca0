#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "geodesic/dynamic_nn.hpp"
#include "geodesic/random_domain.hpp"

namespace geodesic::tools {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

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

double percentile(std::vector<double> v, double q) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const auto i = static_cast<std::size_t>(q * static_cast<double>(v.size() - 1) + 0.5);
    return v[std::min(i, v.size() - 1)];
}

struct Cell {
    const PolygonDomain& d;
    const ExactOracle& exact;
    const BenchConfig& cfg;
    EpsSummary& sum;
    std::mt19937_64& rng;
};

void record(EpsSummary& s, bool ok, double stretch) {
    ++s.checks;
    if (!ok) ++s.violations;
    s.max_stretch = std::max(s.max_stretch, stretch);
}

void run_distance(Cell c) {
    auto t0 = Clock::now();
    const DistanceOracle o(c.d, c.sum.eps);
    c.sum.build_ms.push_back(ms_since(t0));
    for (int i = 0; i < c.cfg.queries; ++i) {
        const Point s = random_point(c.d, c.rng);
        const Point t = random_point(c.d, c.rng);
        t0 = Clock::now();
        const auto r = o.query(s, t);
        c.sum.query_us.push_back(ms_since(t0) * 1000);
        const double e = c.exact.distance_value(s, t);
        double len = 0;
        for (std::size_t k = 0; k + 1 < r.witness.size(); ++k) len += distance(r.witness[k], r.witness[k + 1]);
        const bool ok = r.estimate >= e * (1 - 1e-9) && r.estimate <= (1 + c.sum.eps) * e * (1 + 1e-9) &&
                        std::abs(len - r.estimate) <= 1e-9 * (1 + r.estimate);
        record(c.sum, ok, e > 0 ? r.estimate / e : 1.0);
    }
}

// Checks one answer against a linear scan of exact distances.
void check_nn(Cell c, const NNIndex& nn, const std::map<int, Point>& live, Point q) {
    const auto t0 = Clock::now();
    const auto r = nn.query(q);
    c.sum.query_us.push_back(ms_since(t0) * 1000);
    if (live.empty()) {
        record(c.sum, !r, 1.0);
        return;
    }
    const auto from_q = c.exact.vertex_distances_from(q);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [id, p] : live) best = std::min(best, c.exact.distance_value(q, from_q, p));
    if (!r) {
        record(c.sum, false, 1.0);
        return;
    }
    const double got = c.exact.distance_value(q, from_q, live.at(r->site));
    const bool ok = got <= (1 + c.sum.eps) * best + 1e-9 && r->estimate >= got - 1e-9 &&
                    r->estimate <= (1 + c.sum.eps) * best * (1 + 1e-9) + 1e-12;
    record(c.sum, ok, best > 0 ? got / best : 1.0);
}

void run_nn(Cell c, bool dynamic) {
    auto t0 = Clock::now();
    auto backbone = std::make_shared<const DistanceOracle>(c.d, c.sum.eps);
    c.sum.build_ms.push_back(ms_since(t0));
    NNIndex nn(backbone);
    std::map<int, Point> live;
    int next = 0;
    for (int i = 0; i < c.cfg.sites; ++i) {
        const Point p = random_point(c.d, c.rng);
        nn.insert(p, next);
        live[next++] = p;
    }
    if (!dynamic) {
        for (int i = 0; i < c.cfg.queries; ++i) check_nn(c, nn, live, random_point(c.d, c.rng));
        return;
    }
    for (int op = 0; op < c.cfg.ops; ++op) {
        const auto kind = c.rng() % 3;
        if (kind == 0 && static_cast<int>(live.size()) < c.cfg.sites) {
            const Point p = random_point(c.d, c.rng);
            nn.insert(p, next);
            live[next++] = p;
        } else if (kind == 1 && !live.empty()) {
            auto it = live.begin();
            std::advance(it, static_cast<long>(c.rng() % live.size()));
            nn.erase(it->first);
            live.erase(it);
        } else {
            check_nn(c, nn, live, random_point(c.d, c.rng));
        }
        if (op % 50 == 49) {
            NNIndex fresh(backbone);
            for (const auto& [id, p] : live) fresh.insert(p, id);
            bool same = true;
            for (int i = 0; i < 20; ++i) {
                const Point q = random_point(c.d, c.rng);
                const auto a = nn.query(q);
                const auto b = fresh.query(q);
                same &= a.has_value() == b.has_value() && (!a || (a->site == b->site && a->estimate == b->estimate));
            }
            record(c.sum, same, 1.0);
        }
    }
}

}  // namespace

void BenchConfig::validate() const {
    if (domains <= 0 || queries <= 0 || sites <= 0 || ops <= 0) throw ConfigError("counts must be positive");
    if (budget < 3 + 3 * holes) throw ConfigError("vertex budget too small for the hole count");
    if (holes < 0) throw ConfigError("hole count must be non-negative");
    if (eps.empty()) throw ConfigError("at least one eps is required");
    for (double e : eps)
        if (!(e > 0.0 && e <= 1.0)) throw ConfigError("eps must lie in (0, 1]");
    if (mode != "distance" && mode != "nn" && mode != "dynamic") throw ConfigError("mode must be distance, nn or dynamic");
}

long VerifyReport::violations() const {
    long v = 0;
    for (const auto& s : per_eps) v += s.violations;
    return v;
}

nlohmann::json VerifyReport::json() const {
    nlohmann::json j;
    j["schema"] = "geodesic-verify-report";
    j["version"] = 1;
    j["config"] = {{"seed", config.seed},       {"domains", config.domains}, {"budget", config.budget},
                   {"holes", config.holes},     {"sites", config.sites},     {"queries", config.queries},
                   {"ops", config.ops},         {"eps", config.eps},         {"mode", config.mode}};
    j["domains_built"] = domains_built;
    j["domains_skipped"] = domains_skipped;
    j["skipped"] = skipped;
    j["results"] = nlohmann::json::array();
    for (const auto& s : per_eps) {
        nlohmann::json r = {{"eps", s.eps}, {"checks", s.checks}, {"violations", s.violations}, {"max_stretch", s.max_stretch}};
        if (config.timings) {
            r["build_ms"] = {{"p50", percentile(s.build_ms, 0.5)}, {"max", percentile(s.build_ms, 1.0)}};
            r["query_us"] = {{"p50", percentile(s.query_us, 0.5)},
                             {"p90", percentile(s.query_us, 0.9)},
                             {"p99", percentile(s.query_us, 0.99)}};
        }
        j["results"].push_back(r);
    }
    j["violations"] = violations();
    j["passed"] = passed();
    return j;
}

std::string VerifyReport::table() const {
    std::ostringstream out;
    char buf[200];
    std::snprintf(buf, sizeof buf, "mode %s, seed %llu, %d domains built, %d skipped\n", config.mode.c_str(),
                  static_cast<unsigned long long>(config.seed), domains_built, domains_skipped);
    out << buf;
    out << "  eps     checks  violations  max_stretch  build_ms_p50  query_us_p50  query_us_p99\n";
    for (const auto& s : per_eps) {
        std::snprintf(buf, sizeof buf, "  %-6.3g  %6ld  %10ld  %11.6f  %12.1f  %12.1f  %12.1f\n", s.eps, s.checks, s.violations,
                      s.max_stretch, percentile(s.build_ms, 0.5), percentile(s.query_us, 0.5), percentile(s.query_us, 0.99));
        out << buf;
    }
    out << (passed() ? "PASS\n" : "FAIL\n");
    return out.str();
}

VerifyReport run_verify(const BenchConfig& config, std::ostream* log) {
    config.validate();
    VerifyReport rep;
    rep.config = config;
    for (double e : config.eps) {
        EpsSummary s;
        s.eps = e;
        rep.per_eps.push_back(s);
    }
    for (int i = 0; i < config.domains; ++i) {
        const std::uint64_t dseed = config.seed * 1000003ULL + static_cast<std::uint64_t>(i);
        const int holes = i % (config.holes + 1);
        PolygonDomain d;
        try {
            d = random_domain(dseed, config.budget, holes);
        } catch (const Error& e) {
            ++rep.domains_skipped;
            rep.skipped.push_back("domain " + std::to_string(i) + ": " + e.what());
            if (log) *log << "skip domain " << i << ": " << e.what() << "\n";
            continue;
        }
        ++rep.domains_built;
        const ExactOracle exact(d);
        for (std::size_t k = 0; k < config.eps.size(); ++k) {
            std::mt19937_64 rng(dseed * 31 + k);
            const Cell c{d, exact, config, rep.per_eps[k], rng};
            if (config.mode == "distance") run_distance(c);
            else run_nn(c, config.mode == "dynamic");
            if (log) *log << "domain " << i << " (n=" << d.vertex_count() << ", h=" << holes << ") eps " << config.eps[k]
                          << ": " << rep.per_eps[k].violations << " violations so far\n";
        }
    }
    return rep;
}

}  // namespace geodesic::tools
