#pragma once

#include <map>
#include <string>

#include "geodesic/distance_oracle.hpp"
#include "json.hpp"

namespace geodesic::tools {

inline constexpr int kIndexVersion = 1;

/// Persisted index: the inputs that determine the structure. Everything else
/// is rebuilt deterministically on load.
struct IndexFile {
    std::string kind = "distance";  // "distance" or "nn"
    double eps = 0.25;
    PolygonDomain domain;
    std::map<int, Point> sites;  // nn only
};

nlohmann::json index_to_json(const IndexFile& f, const DistanceOracle* built = nullptr);
IndexFile index_from_json(const nlohmann::json& j);
void save_index(const std::string& path, const IndexFile& f, const DistanceOracle* built = nullptr);
IndexFile load_index(const std::string& path);

}  // namespace geodesic::tools
