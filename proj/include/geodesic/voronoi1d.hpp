#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "geodesic/path_structure.hpp"

namespace geodesic {

/// Treap keyed by (coordinate, handle) with subtree-minimum augmentation.
class MinTreap {
public:
    explicit MinTreap(std::uint64_t seed = 0x9e3779b97f4a7c15ULL) : rng_(seed) {}

    void insert(double key, int handle, double value);
    /// Returns false when (key, handle) is absent.
    bool erase(double key, int handle);
    std::size_t size() const { return size_; }

    /// Minimum value over keys <= x (prefix) or >= x (suffix); +inf when none.
    double min_prefix(double x) const;
    double min_suffix(double x) const;
    /// Handles with key in the prefix / suffix and value <= bound.
    void report_prefix(double x, double bound, std::vector<int>& out) const;
    void report_suffix(double x, double bound, std::vector<int>& out) const;

private:
    struct Node {
        double key;
        int handle;
        double value;
        double min;
        std::uint64_t prio;
        int left = -1;
        int right = -1;
    };
    bool less(int a, double key, int handle) const;
    void pull(int t);
    void split(int t, double key, int handle, int& l, int& r);  // l: < (key, handle)
    int merge(int a, int b);
    double min_of(int t) const;
    void report_all(int t, double bound, std::vector<int>& out) const;

    std::vector<Node> pool_;
    std::vector<int> free_;
    int root_ = -1;
    std::size_t size_ = 0;
    std::uint64_t rng_;  // splitmix64 state
    std::uint64_t next_priority();
};

struct V1DHit {
    int owner;
    double value;
    int handle;
};

/// Dynamic lower envelope of x -> a1 + |a0 - x| over [0, total].
class Voronoi1D {
public:
    explicit Voronoi1D(double total = 0.0) : total_(total) {}

    double total() const { return total_; }
    int insert(double a0, double a1, int owner);
    void erase(int handle);
    std::size_t size() const { return right_.size(); }

    /// Exact minimum of a1 + |a0 - q| over stored points, ties to the smallest
    /// owner id. Agrees bit for bit with a linear scan evaluating the same expression.
    std::optional<V1DHit> query(double q) const;

private:
    struct Item {
        double a0;
        double a1;
        int owner;
        bool live;
    };
    double total_;
    std::vector<Item> items_;
    MinTreap right_;  // (a0, a1 + (total - a0)), queried over a0 <= q
    MinTreap left_;   // (a0, a1 + a0), queried over a0 >= q
};

struct PsiHit {
    int site;
    double value;
    int query_anchor;  // index into the query point's anchor set
    int site_anchor;   // index into the site's anchor set
};

/// Sites registered on one separator path, queried through the 1D envelope.
class PathSiteIndex {
public:
    explicit PathSiteIndex(const PathStructure& ps);

    const PathStructure& structure() const { return *ps_; }
    void insert(Point site, int id);
    void erase(int id);
    bool contains(int id) const { return sites_.count(id) != 0; }
    std::size_t site_count() const { return sites_.size(); }
    std::size_t anchor_count() const { return v1d_.size(); }
    const AnchorSet& site_anchors(int id) const { return sites_.at(id).anchors; }

    /// min over sites of the via-path distance from q, with the realizing site.
    std::optional<PsiHit> query(Point q) const;
    std::optional<PsiHit> query(const AnchorSet& q) const;

private:
    struct Site {
        AnchorSet anchors;
        std::vector<int> handles;
    };
    const PathStructure* ps_;
    Voronoi1D v1d_;
    std::map<int, Site> sites_;
    std::vector<int> anchor_of_handle_;
};

}  // namespace geodesic
