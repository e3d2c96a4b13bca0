// geodesic: command-line front end for the distance oracle and the dynamic
// nearest-neighbor index. Exit codes: 0 ok, 1 verification violation,
// 2 usage, configuration or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "geodesic/dynamic_nn.hpp"
#include "geodesic/random_domain.hpp"
#include "index_io.hpp"
#include "json.hpp"
#include "render.hpp"
#include "verify.hpp"

using namespace geodesic;
using namespace geodesic::tools;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

Point parse_point(const std::string& s) {
    std::istringstream in(s);
    Point p;
    char comma = 0;
    if (!(in >> p.x >> comma >> p.y) || comma != ',') throw Error("expected a point as x,y: " + s);
    std::string rest;
    if (in >> rest) throw Error("trailing characters in point: " + s);
    return p;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

NNIndex make_nn(const IndexFile& f) {
    NNIndex nn(f.domain, f.eps);
    for (const auto& [id, p] : f.sites) nn.insert(p, id);
    return nn;
}

json points_json(const std::vector<Point>& pts) {
    json a = json::array();
    for (Point p : pts) a.push_back({p.x, p.y});
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"approximate geodesic distances and nearest neighbors in polygonal domains"};
    app.require_subcommand(1);

    std::string domain_path, index_path, out_path, svg_path, from_s, to_s, at_s, site_s, point_s, what, report_path, ops_path;
    double eps = 0.25;
    int id = 0, node = 0, path = 0;
    bool exact = false, quiet = false;
    std::uint64_t seed = 1;
    int budget = 12, holes = 0;

    auto* rnd = app.add_subcommand("random-domain", "generate a random domain in .poly format");
    rnd->add_option("--seed", seed)->required();
    rnd->add_option("--budget", budget, "vertex budget")->capture_default_str();
    rnd->add_option("--holes", holes)->capture_default_str();
    rnd->add_option("--out", out_path, "output file (default stdout)");

    auto* build = app.add_subcommand("build", "build a distance index");
    build->add_option("--domain", domain_path)->required()->check(CLI::ExistingFile);
    build->add_option("--eps", eps)->capture_default_str();
    build->add_option("--out", out_path)->required();

    auto* dist = app.add_subcommand("dist", "approximate geodesic distance between two points");
    dist->add_option("--index", index_path)->required()->check(CLI::ExistingFile);
    dist->add_option("--from", from_s)->required();
    dist->add_option("--to", to_s)->required();
    dist->add_flag("--exact", exact, "also compute the exact distance and check the bound");
    dist->add_option("--svg", svg_path, "render the witness path");

    auto* nn = app.add_subcommand("nn", "dynamic nearest-neighbor index");
    nn->require_subcommand(1);
    auto* nn_build = nn->add_subcommand("build", "create an empty index");
    nn_build->add_option("--domain", domain_path)->required()->check(CLI::ExistingFile);
    nn_build->add_option("--eps", eps)->capture_default_str();
    nn_build->add_option("--out", out_path)->required();
    auto* nn_insert = nn->add_subcommand("insert", "add a site");
    nn_insert->add_option("--index", index_path)->required()->check(CLI::ExistingFile);
    nn_insert->add_option("--site", site_s)->required();
    nn_insert->add_option("--id", id)->required();
    auto* nn_delete = nn->add_subcommand("delete", "remove a site");
    nn_delete->add_option("--index", index_path)->required()->check(CLI::ExistingFile);
    nn_delete->add_option("--id", id)->required();
    auto* nn_query = nn->add_subcommand("query", "approximate nearest site");
    nn_query->add_option("--index", index_path)->required()->check(CLI::ExistingFile);
    nn_query->add_option("--at", at_s)->required();
    nn_query->add_flag("--exact", exact, "also report the exact nearest site and check the bound");
    nn_query->add_option("--svg", svg_path, "render sites, query and answer");
    auto* nn_script = nn->add_subcommand("script", "replay an op log (I id x y / D id / Q x y)");
    nn_script->add_option("ops", ops_path)->required()->check(CLI::ExistingFile);
    nn_script->add_option("--index", index_path, "start from this index")->check(CLI::ExistingFile);
    nn_script->add_option("--domain", domain_path, "or from an empty index on this domain")->check(CLI::ExistingFile);
    nn_script->add_option("--eps", eps)->capture_default_str();
    nn_script->add_flag("--exact", exact, "check every answer against the exact oracle");

    auto* tree = app.add_subcommand("tree", "separator hierarchy");
    tree->require_subcommand(1);
    auto* tree_dump = tree->add_subcommand("dump", "nodes as JSON lines");
    tree_dump->add_option("--domain", domain_path)->required()->check(CLI::ExistingFile);
    auto* tree_svg = tree->add_subcommand("svg", "render triangles and separators");
    tree_svg->add_option("--domain", domain_path)->required()->check(CLI::ExistingFile);
    tree_svg->add_option("--out", out_path)->required();

    auto* graph = app.add_subcommand("graph", "cone graph");
    graph->require_subcommand(1);
    auto* graph_dump = graph->add_subcommand("dump", "edges as JSON");
    graph_dump->add_option("--domain", domain_path)->required()->check(CLI::ExistingFile);
    graph_dump->add_option("--eps", eps)->capture_default_str();

    auto* anchors = app.add_subcommand("anchors", "anchor set of a point on one separator path, as CSV");
    anchors->add_option("--index", index_path)->required()->check(CLI::ExistingFile);
    anchors->add_option("--point", point_s)->required();
    anchors->add_option("--node", node)->required();
    anchors->add_option("--path", path)->capture_default_str();
    anchors->add_option("--svg", svg_path);

    BenchConfig cfg;
    std::string eps_list = "0.5";
    auto* verify = app.add_subcommand("verify", "randomized check against the exact oracle");
    verify->add_option("--seed", cfg.seed)->capture_default_str();
    verify->add_option("--domains", cfg.domains)->capture_default_str();
    verify->add_option("--budget", cfg.budget)->capture_default_str();
    verify->add_option("--holes", cfg.holes, "maximum holes; domain i gets i % (holes+1)")->capture_default_str();
    verify->add_option("--sites", cfg.sites)->capture_default_str();
    verify->add_option("--queries", cfg.queries)->capture_default_str();
    verify->add_option("--ops", cfg.ops)->capture_default_str();
    verify->add_option("--eps", eps_list, "comma separated")->capture_default_str();
    verify->add_option("--mode", cfg.mode, "distance | nn | dynamic")->capture_default_str();
    verify->add_flag("--timings", cfg.timings, "include timing percentiles in the JSON report");
    verify->add_option("--report", report_path, "write the JSON report here (default stdout)");
    verify->add_flag("--quiet", quiet, "no progress log");

    auto* render = app.add_subcommand("render", "SVG rendering");
    render->add_option("--what", what, "domain | tree | anchors | path | nn")->required();
    render->add_option("--domain", domain_path)->check(CLI::ExistingFile);
    render->add_option("--index", index_path)->check(CLI::ExistingFile);
    render->add_option("--out", out_path)->required();
    render->add_option("--from", from_s);
    render->add_option("--to", to_s);
    render->add_option("--point", point_s);
    render->add_option("--node", node);
    render->add_option("--path", path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;  // --help exits 0
    }

    try {
        if (*rnd) {
            const auto text = format_domain(random_domain(seed, budget, holes));
            if (out_path.empty()) std::cout << text;
            else write_file(out_path, text);
            return kOk;
        }
        if (*build || *nn_build) {
            IndexFile f;
            f.kind = *build ? "distance" : "nn";
            f.eps = eps;
            f.domain = load_domain(domain_path);
            const DistanceOracle o(f.domain, eps);
            save_index(out_path, f, &o);
            std::cout << "index written to " << out_path << " (" << o.structure_count() << " path structures, height "
                      << o.tree().height() << ")\n";
            return kOk;
        }
        if (*dist) {
            const IndexFile f = load_index(index_path);
            const DistanceOracle o(f.domain, f.eps);
            const Point s = parse_point(from_s), t = parse_point(to_s);
            const auto r = o.query(s, t);
            std::cout << "estimate " << fmt(r.estimate) << "\n";
            std::cout << "witness " << points_json(r.witness).dump() << "\n";
            int code = kOk;
            std::optional<ExactPath> ex;
            if (exact) {
                ex = ExactOracle(f.domain).distance(s, t);
                const bool ok = r.estimate >= ex->length * (1 - 1e-9) && r.estimate <= (1 + f.eps) * ex->length * (1 + 1e-9);
                std::cout << "exact " << fmt(ex->length) << "\nstretch " << fmt(ex->length > 0 ? r.estimate / ex->length : 1.0)
                          << "\n" << (ok ? "within bound" : "BOUND VIOLATED") << "\n";
                if (!ok) code = kViolation;
            }
            if (!svg_path.empty()) write_file(svg_path, render_path(f.domain, r, ex ? &ex->path : nullptr));
            return code;
        }
        if (*nn_insert || *nn_delete) {
            IndexFile f = load_index(index_path);
            if (f.kind != "nn") throw Error("not an nn index");
            if (*nn_insert) {
                const Point p = parse_point(site_s);
                if (f.sites.count(id)) throw Error("site id already registered");
                if (f.domain.contains(p) == Containment::exterior) throw Error("site lies outside the domain");
                f.sites[id] = p;
            } else if (!f.sites.erase(id)) {
                throw Error("unknown site id");
            }
            save_index(index_path, f);
            std::cout << f.sites.size() << " sites\n";
            return kOk;
        }
        if (*nn_query) {
            const IndexFile f = load_index(index_path);
            const NNIndex idx = make_nn(f);
            const Point q = parse_point(at_s);
            const auto r = idx.query(q, true);
            if (!r) {
                std::cout << "no sites\n";
                return kOk;
            }
            std::cout << "site " << r->site << " estimate " << fmt(r->estimate) << "\n";
            int code = kOk;
            if (exact) {
                const ExactOracle ex(f.domain);
                const auto from_q = ex.vertex_distances_from(q);
                int best = -1;
                double bd = std::numeric_limits<double>::infinity();
                for (const auto& [sid, p] : f.sites) {
                    const double d = ex.distance_value(q, from_q, p);
                    if (d < bd) bd = d, best = sid;
                }
                const double got = ex.distance_value(q, from_q, f.sites.at(r->site));
                const bool ok = got <= (1 + f.eps) * bd + 1e-9 && r->estimate <= (1 + f.eps) * bd * (1 + 1e-9) + 1e-12;
                std::cout << "exact nearest " << best << " distance " << fmt(bd) << "; answer distance " << fmt(got) << "\n"
                          << (ok ? "within bound" : "BOUND VIOLATED") << "\n";
                if (!ok) code = kViolation;
            }
            if (!svg_path.empty()) write_file(svg_path, render_nn(idx, q, r));
            return code;
        }
        if (*nn_script) {
            IndexFile f;
            if (!index_path.empty()) f = load_index(index_path);
            else if (!domain_path.empty()) f.domain = load_domain(domain_path), f.eps = eps, f.kind = "nn";
            else throw Error("nn script needs --index or --domain");
            NNIndex idx = make_nn(f);
            std::optional<ExactOracle> ex;
            if (exact) ex.emplace(f.domain);
            std::ifstream in(ops_path);
            std::string line;
            int lineno = 0, code = kOk;
            while (std::getline(in, line)) {
                ++lineno;
                if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
                std::istringstream ls(line);
                std::string op;
                if (!(ls >> op)) continue;
                auto bad = [&] { return Error(ops_path + ":" + std::to_string(lineno) + ": malformed op"); };
                if (op == "I") {
                    int sid;
                    Point p;
                    if (!(ls >> sid >> p.x >> p.y)) throw bad();
                    idx.insert(p, sid);
                } else if (op == "D") {
                    int sid;
                    if (!(ls >> sid)) throw bad();
                    idx.erase(sid);
                } else if (op == "Q") {
                    Point q;
                    if (!(ls >> q.x >> q.y)) throw bad();
                    const auto r = idx.query(q);
                    std::cout << "Q " << fmt(q.x) << " " << fmt(q.y) << " -> ";
                    if (!r) {
                        std::cout << "none\n";
                        continue;
                    }
                    std::cout << r->site << " " << fmt(r->estimate);
                    if (ex) {
                        const auto from_q = ex->vertex_distances_from(q);
                        double bd = std::numeric_limits<double>::infinity();
                        for (const auto& [sid, rec] : idx.sites()) bd = std::min(bd, ex->distance_value(q, from_q, rec.position));
                        const double got = ex->distance_value(q, from_q, idx.sites().at(r->site).position);
                        const bool ok = got <= (1 + f.eps) * bd + 1e-9;
                        std::cout << " exact " << fmt(bd) << (ok ? "" : " VIOLATION");
                        if (!ok) code = kViolation;
                    }
                    std::cout << "\n";
                } else {
                    throw bad();
                }
            }
            return code;
        }
        if (*tree_dump || *tree_svg) {
            const auto d = load_domain(domain_path);
            const auto st = build_separator_tree(d);
            if (*tree_svg) {
                write_file(out_path, render_tree(st));
                return kOk;
            }
            // One JSON object per line, parents before children.
            for (const auto& nd : st.nodes()) {
                json ends = json::array();
                for (const auto& p : nd.paths) ends.push_back({p.front(), p.back()});
                json line = {{"id", nd.id},          {"parent", nd.parent},   {"level", nd.level},
                             {"triangle_count", nd.triangles.size()}, {"children", nd.children},
                             {"separator_endpoints", ends}, {"paths", nd.paths}};
                std::cout << line.dump() << "\n";
            }
            return kOk;
        }
        if (*graph_dump) {
            const auto d = load_domain(domain_path);
            const auto g = build_cone_graph(d, ConeFamily(eps));
            json j;
            j["cones"] = g.cones;
            j["vertices"] = points_json(g.points);
            j["edges"] = g.edges;
            std::cout << j.dump(2) << "\n";
            return kOk;
        }
        if (*anchors) {
            const IndexFile f = load_index(index_path);
            const DistanceOracle o(f.domain, f.eps);
            if (node < 0 || node >= static_cast<int>(o.tree().nodes().size())) throw Error("unknown node id");
            const auto& list = o.structures(node);
            if (path < 0 || path >= static_cast<int>(list.size())) throw Error("unknown path id for this node");
            const PathStructure& ps = list[static_cast<std::size_t>(path)];
            const Point p = parse_point(point_s);
            if (ps.region().contains(p) == Containment::exterior) throw Error("point lies outside the node's subpolygon");
            const auto set = ps.query_anchor_set(p);
            std::cout << "arc,weight\n";
            for (const auto& a : set.anchors) std::cout << fmt(a.arc) << "," << fmt(a.weight) << "\n";
            if (!svg_path.empty()) write_file(svg_path, render_anchors(ps, f.domain, set));
            return kOk;
        }
        if (*verify) {
            cfg.eps.clear();
            std::istringstream es(eps_list);
            std::string tok;
            while (std::getline(es, tok, ',')) {
                try {
                    cfg.eps.push_back(std::stod(tok));
                } catch (const std::exception&) {
                    throw ConfigError("bad eps value: " + tok);
                }
            }
            cfg.validate();
            const auto rep = run_verify(cfg, quiet ? nullptr : &std::cerr);
            const std::string text = rep.json().dump(2) + "\n";
            if (report_path.empty()) std::cout << text;
            else write_file(report_path, text);
            std::cerr << rep.table();
            return rep.passed() ? kOk : kViolation;
        }
        if (*render) {
            std::optional<IndexFile> f;
            if (!index_path.empty()) f = load_index(index_path);
            else if (!domain_path.empty()) f = IndexFile{"distance", 0.25, load_domain(domain_path), {}};
            else throw Error("render needs --domain or --index");
            if (what == "domain") {
                write_file(out_path, render_domain(f->domain));
            } else if (what == "tree") {
                write_file(out_path, render_tree(build_separator_tree(f->domain)));
            } else if (what == "path") {
                const DistanceOracle o(f->domain, f->eps);
                const Point s = parse_point(from_s), t = parse_point(to_s);
                const auto ex = ExactOracle(f->domain).distance(s, t);
                write_file(out_path, render_path(f->domain, o.query(s, t), &ex.path));
            } else if (what == "anchors") {
                const DistanceOracle o(f->domain, f->eps);
                if (node < 0 || node >= static_cast<int>(o.tree().nodes().size())) throw Error("unknown node id");
                const auto& list = o.structures(node);
                if (path < 0 || path >= static_cast<int>(list.size())) throw Error("unknown path id for this node");
                const auto& ps = list[static_cast<std::size_t>(path)];
                write_file(out_path, render_anchors(ps, f->domain, ps.query_anchor_set(parse_point(point_s))));
            } else if (what == "nn") {
                const NNIndex idx = make_nn(*f);
                std::optional<Point> q;
                std::optional<NNResult> r;
                if (!point_s.empty()) q = parse_point(point_s), r = idx.query(*q, true);
                write_file(out_path, render_nn(idx, q, r));
            } else {
                throw Error("unknown render target: " + what);
            }
            return kOk;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}
