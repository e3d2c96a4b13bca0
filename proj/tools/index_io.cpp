#include "index_io.hpp"

#include <fstream>

namespace geodesic::tools {

using nlohmann::json;

namespace {

json ring_json(const std::vector<Point>& ring) {
    json a = json::array();
    for (Point p : ring) a.push_back({p.x, p.y});
    return a;
}

std::vector<Point> ring_from(const json& a) {
    std::vector<Point> out;
    for (const auto& p : a) out.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    return out;
}

}  // namespace

json index_to_json(const IndexFile& f, const DistanceOracle* built) {
    json j;
    j["format"] = "geodesic-index";
    j["version"] = kIndexVersion;
    j["kind"] = f.kind;
    j["eps"] = f.eps;
    j["domain"]["outer"] = ring_json(f.domain.outer());
    j["domain"]["holes"] = json::array();
    for (const auto& h : f.domain.holes()) j["domain"]["holes"].push_back(ring_json(h));
    j["sites"] = json::array();
    for (const auto& [id, p] : f.sites) j["sites"].push_back({{"id", id}, {"x", p.x}, {"y", p.y}});
    if (built) {
        const auto& t = built->tree();
        j["summary"] = {{"vertices", f.domain.vertex_count()},
                        {"holes", f.domain.hole_count()},
                        {"triangles", t.triangulation().triangles.size()},
                        {"tree_nodes", t.nodes().size()},
                        {"height", t.height()},
                        {"path_structures", built->structure_count()},
                        {"stored_anchors", built->stored_anchor_count()}};
    }
    return j;
}

IndexFile index_from_json(const json& j) {
    if (j.value("format", "") != "geodesic-index") throw Error("not a geodesic index file");
    if (j.value("version", -1) != kIndexVersion) throw Error("unsupported index version");
    IndexFile f;
    f.kind = j.at("kind").get<std::string>();
    if (f.kind != "distance" && f.kind != "nn") throw Error("unknown index kind: " + f.kind);
    f.eps = j.at("eps").get<double>();
    std::vector<std::vector<Point>> holes;
    for (const auto& h : j.at("domain").at("holes")) holes.push_back(ring_from(h));
    f.domain = PolygonDomain::create(ring_from(j.at("domain").at("outer")), holes);
    for (const auto& s : j.at("sites")) f.sites[s.at("id").get<int>()] = {s.at("x").get<double>(), s.at("y").get<double>()};
    return f;
}

void save_index(const std::string& path, const IndexFile& f, const DistanceOracle* built) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << index_to_json(f, built).dump(2) << "\n";
}

IndexFile load_index(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    }
    return index_from_json(j);
}

}  // namespace geodesic::tools
