#include "geodesic/euclid_ann.hpp"

#include <algorithm>
#include <cmath>

namespace geodesic {

namespace {
constexpr double kAlpha = 0.7;
}

struct DominanceIndex::Node {
    double x = 0, y = 0, value = 0;
    int id = -1;
    bool live = true;
    int size = 1;  // subtree nodes including deleted
    Node* left = nullptr;
    Node* right = nullptr;
    MinTreap sec;  // live points of the subtree keyed by y

    bool before(double ox, int oid) const { return x < ox || (x == ox && id < oid); }
};

DominanceIndex::~DominanceIndex() { destroy(root_); }

void DominanceIndex::destroy(Node* t) {
    if (!t) return;
    destroy(t->left);
    destroy(t->right);
    delete t;
}

void DominanceIndex::collect(Node* t, std::vector<Node*>& out, bool live_only) {
    if (!t) return;
    collect(t->left, out, live_only);
    if (t->live || !live_only) out.push_back(t);
    collect(t->right, out, live_only);
}

DominanceIndex::Node* DominanceIndex::build(std::vector<Node*>& items, int lo, int hi) {
    if (lo >= hi) return nullptr;
    const int mid = (lo + hi) / 2;
    Node* t = items[static_cast<std::size_t>(mid)];
    t->left = build(items, lo, mid);
    t->right = build(items, mid + 1, hi);
    t->size = hi - lo;
    t->sec = MinTreap(static_cast<std::uint64_t>(t->id) * 0x9e3779b97f4a7c15ULL + 1);
    for (int i = lo; i < hi; ++i) {
        const Node* p = items[static_cast<std::size_t>(i)];
        t->sec.insert(p->y, p->id, p->value);
    }
    return t;
}

void DominanceIndex::rebuild(Node*& slot) {
    std::vector<Node*> all;
    collect(slot, all, false);
    std::vector<Node*> live;
    for (Node* p : all) {
        if (p->live) {
            live.push_back(p);
        } else {
            delete p;
            --total_;
        }
    }
    slot = build(live, 0, static_cast<int>(live.size()));
}

void DominanceIndex::insert(double x, double y, double value, int id) {
    if (entries_.count(id)) throw Error("id already present");
    entries_[id] = {x, y, value};
    Node* fresh = new Node;
    fresh->x = x;
    fresh->y = y;
    fresh->value = value;
    fresh->id = id;
    fresh->sec.insert(y, id, value);
    ++total_;

    std::vector<Node**> path;
    Node** slot = &root_;
    while (*slot) {
        Node* t = *slot;
        path.push_back(slot);
        t->sec.insert(y, id, value);
        ++t->size;
        slot = fresh->before(t->x, t->id) ? &t->left : &t->right;
    }
    *slot = fresh;
    const double limit = std::log(static_cast<double>(total_)) / std::log(1.0 / kAlpha) + 1.0;
    if (static_cast<double>(path.size()) <= limit) return;
    // Highest unbalanced ancestor on the insertion path.
    for (Node** s : path) {
        Node* t = *s;
        const int l = t->left ? t->left->size : 0;
        const int r = t->right ? t->right->size : 0;
        if (std::max(l, r) > kAlpha * t->size) {
            rebuild(*s);
            return;
        }
    }
}

void DominanceIndex::erase(int id) {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw Error("unknown id");
    const Entry e = it->second;
    entries_.erase(it);
    for (Node* t = root_; t;) {
        t->sec.erase(e.y, id);
        if (t->id == id && t->live) {
            t->live = false;
            break;
        }
        t = (e.x < t->x || (e.x == t->x && id < t->id)) ? t->left : t->right;
    }
    if (entries_.size() * 2 < total_) rebuild(root_);
}

void DominanceIndex::consider(const MinTreap& sec, double qy, std::optional<std::pair<double, int>>& best) const {
    const double m = sec.min_suffix(qy);
    if (!std::isfinite(m) || (best && m > best->first)) return;
    std::vector<int> ids;
    sec.report_suffix(qy, m, ids);
    for (int id : ids) {
        if (!best || m < best->first || (m == best->first && id < best->second)) best = {{m, id}};
    }
}

std::optional<std::pair<double, int>> DominanceIndex::query(double qx, double qy) const {
    std::optional<std::pair<double, int>> best;
    for (const Node* t = root_; t;) {
        if (t->x >= qx) {
            if (t->live && t->y >= qy && (!best || t->value < best->first || (t->value == best->first && t->id < best->second)))
                best = {{t->value, t->id}};
            if (t->right) consider(t->right->sec, qy, best);
            t = t->left;
        } else {
            t = t->right;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------

EuclidAnnIndex::EuclidAnnIndex(double eps) : family_(eps), cones_(static_cast<std::size_t>(family_.size())) {}

std::array<double, 3> EuclidAnnIndex::project(int k, Point p) const {
    const Point lo = family_.boundary(k);
    const Point hi = family_.boundary((k + 1) % family_.size());
    return {cross(lo, p), -cross(hi, p), dot(family_.axis(k), p)};
}

void EuclidAnnIndex::insert(Point site, int id) {
    if (sites_.count(id)) throw Error("site id already registered");
    sites_[id] = site;
    for (int k = 0; k < family_.size(); ++k) {
        const auto p = project(k, site);
        cones_[static_cast<std::size_t>(k)].insert(p[0], p[1], p[2], id);
    }
}

void EuclidAnnIndex::erase(int id) {
    if (!sites_.erase(id)) throw Error("unknown site id");
    for (auto& c : cones_) c.erase(id);
}

std::optional<int> EuclidAnnIndex::cone_candidate(int k, Point q) const {
    const auto p = project(k, q);
    const auto r = cones_[static_cast<std::size_t>(k)].query(p[0], p[1]);
    if (!r) return std::nullopt;
    return r->second;
}

std::optional<EannHit> EuclidAnnIndex::query(Point q) const {
    std::optional<EannHit> best;
    for (int k = 0; k < family_.size(); ++k) {
        const auto id = cone_candidate(k, q);
        if (!id) continue;
        const double d = distance(q, sites_.at(*id));
        if (!best || d < best->distance || (d == best->distance && *id < best->id)) best = EannHit{*id, d};
    }
    return best;
}

}  // namespace geodesic
