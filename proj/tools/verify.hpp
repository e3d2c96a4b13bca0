#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace geodesic::tools {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BenchConfig {
    std::uint64_t seed = 42;
    int domains = 5;
    int budget = 20;   // vertex budget per domain
    int holes = 1;     // domain i gets i % (holes + 1) holes
    int sites = 20;    // nn / dynamic
    int queries = 50;  // per domain and eps
    int ops = 200;     // dynamic script length
    std::vector<double> eps{0.5};
    std::string mode = "distance";  // distance | nn | dynamic
    bool timings = false;           // add timing percentiles to the JSON report

    /// Throws ConfigError.
    void validate() const;
};

struct EpsSummary {
    double eps = 0;
    long checks = 0;
    long violations = 0;
    double max_stretch = 1.0;
    std::vector<double> build_ms;
    std::vector<double> query_us;
};

struct VerifyReport {
    BenchConfig config;
    int domains_built = 0;
    int domains_skipped = 0;
    std::vector<std::string> skipped;  // generator failures
    std::vector<EpsSummary> per_eps;

    long violations() const;
    bool passed() const { return violations() == 0; }
    nlohmann::json json() const;
    std::string table() const;
};

VerifyReport run_verify(const BenchConfig& config, std::ostream* log = nullptr);

}  // namespace geodesic::tools
