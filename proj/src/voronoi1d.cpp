#include "geodesic/voronoi1d.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace geodesic {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

// ---------------------------------------------------------------------------
// MinTreap

bool MinTreap::less(int a, double key, int handle) const {
    const Node& n = pool_[static_cast<std::size_t>(a)];
    return n.key < key || (n.key == key && n.handle < handle);
}

std::uint64_t MinTreap::next_priority() {
    std::uint64_t z = (rng_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double MinTreap::min_of(int t) const { return t < 0 ? kInf : pool_[static_cast<std::size_t>(t)].min; }

void MinTreap::pull(int t) {
    Node& n = pool_[static_cast<std::size_t>(t)];
    n.min = std::min({n.value, min_of(n.left), min_of(n.right)});
}

void MinTreap::split(int t, double key, int handle, int& l, int& r) {
    if (t < 0) {
        l = r = -1;
        return;
    }
    if (less(t, key, handle)) {
        int a, b;
        split(pool_[static_cast<std::size_t>(t)].right, key, handle, a, b);
        pool_[static_cast<std::size_t>(t)].right = a;
        pull(t);
        l = t;
        r = b;
    } else {
        int a, b;
        split(pool_[static_cast<std::size_t>(t)].left, key, handle, a, b);
        pool_[static_cast<std::size_t>(t)].left = b;
        pull(t);
        l = a;
        r = t;
    }
}

int MinTreap::merge(int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    if (pool_[static_cast<std::size_t>(a)].prio > pool_[static_cast<std::size_t>(b)].prio) {
        const int m = merge(pool_[static_cast<std::size_t>(a)].right, b);
        pool_[static_cast<std::size_t>(a)].right = m;
        pull(a);
        return a;
    }
    const int m = merge(a, pool_[static_cast<std::size_t>(b)].left);
    pool_[static_cast<std::size_t>(b)].left = m;
    pull(b);
    return b;
}

void MinTreap::insert(double key, int handle, double value) {
    int id;
    if (!free_.empty()) {
        id = free_.back();
        free_.pop_back();
    } else {
        id = static_cast<int>(pool_.size());
        pool_.emplace_back();
    }
    pool_[static_cast<std::size_t>(id)] = Node{key, handle, value, value, next_priority(), -1, -1};
    int l, r;
    split(root_, key, handle, l, r);
    root_ = merge(merge(l, id), r);
    ++size_;
}

bool MinTreap::erase(double key, int handle) {
    bool found = false;
    std::function<int(int)> rec = [&](int t) -> int {
        if (t < 0) return -1;
        Node& n = pool_[static_cast<std::size_t>(t)];
        if (n.key == key && n.handle == handle) {
            found = true;
            free_.push_back(t);
            return merge(n.left, n.right);
        }
        if (less(t, key, handle)) {
            const int c = rec(n.right);
            pool_[static_cast<std::size_t>(t)].right = c;
        } else {
            const int c = rec(n.left);
            pool_[static_cast<std::size_t>(t)].left = c;
        }
        pull(t);
        return t;
    };
    root_ = rec(root_);
    if (found) --size_;
    return found;
}

double MinTreap::min_prefix(double x) const {
    double best = kInf;
    for (int t = root_; t >= 0;) {
        const Node& n = pool_[static_cast<std::size_t>(t)];
        if (n.key <= x) {
            best = std::min({best, n.value, min_of(n.left)});
            t = n.right;
        } else {
            t = n.left;
        }
    }
    return best;
}

double MinTreap::min_suffix(double x) const {
    double best = kInf;
    for (int t = root_; t >= 0;) {
        const Node& n = pool_[static_cast<std::size_t>(t)];
        if (n.key >= x) {
            best = std::min({best, n.value, min_of(n.right)});
            t = n.left;
        } else {
            t = n.right;
        }
    }
    return best;
}

void MinTreap::report_all(int t, double bound, std::vector<int>& out) const {
    if (t < 0 || min_of(t) > bound) return;
    const Node& n = pool_[static_cast<std::size_t>(t)];
    if (n.value <= bound) out.push_back(n.handle);
    report_all(n.left, bound, out);
    report_all(n.right, bound, out);
}

void MinTreap::report_prefix(double x, double bound, std::vector<int>& out) const {
    for (int t = root_; t >= 0;) {
        const Node& n = pool_[static_cast<std::size_t>(t)];
        if (n.key <= x) {
            report_all(n.left, bound, out);
            if (n.value <= bound) out.push_back(n.handle);
            t = n.right;
        } else {
            t = n.left;
        }
    }
}

void MinTreap::report_suffix(double x, double bound, std::vector<int>& out) const {
    for (int t = root_; t >= 0;) {
        const Node& n = pool_[static_cast<std::size_t>(t)];
        if (n.key >= x) {
            report_all(n.right, bound, out);
            if (n.value <= bound) out.push_back(n.handle);
            t = n.left;
        } else {
            t = n.right;
        }
    }
}

// ---------------------------------------------------------------------------
// Voronoi1D

int Voronoi1D::insert(double a0, double a1, int owner) {
    if (!(a0 >= 0.0 && a0 <= total_)) throw Error("coordinate outside the path");
    if (!(a1 >= 0.0) || !std::isfinite(a1)) throw Error("weight must be finite and non-negative");
    const int h = static_cast<int>(items_.size());
    items_.push_back({a0, a1, owner, true});
    right_.insert(a0, h, a1 + (total_ - a0));
    left_.insert(a0, h, a1 + a0);
    return h;
}

void Voronoi1D::erase(int handle) {
    if (handle < 0 || static_cast<std::size_t>(handle) >= items_.size() || !items_[static_cast<std::size_t>(handle)].live)
        throw Error("handle is not live");
    Item& it = items_[static_cast<std::size_t>(handle)];
    it.live = false;
    right_.erase(it.a0, handle);
    left_.erase(it.a0, handle);
}

std::optional<V1DHit> Voronoi1D::query(double q) const {
    if (size() == 0) return std::nullopt;
    // The shifted half-line values differ from a1 + |a0 - q| by rounding only,
    // so everything within a few ulps of either structural minimum is
    // re-evaluated exactly.
    std::vector<int> cand;
    const double mr = right_.min_prefix(q);
    if (std::isfinite(mr)) right_.report_prefix(q, mr + 1e-12 * (1.0 + std::abs(mr) + total_), cand);
    const double ml = left_.min_suffix(q);
    if (std::isfinite(ml)) left_.report_suffix(q, ml + 1e-12 * (1.0 + std::abs(ml) + total_), cand);
    std::optional<V1DHit> best;
    for (int h : cand) {
        const Item& it = items_[static_cast<std::size_t>(h)];
        const double v = it.a1 + std::abs(it.a0 - q);
        if (!best || v < best->value || (v == best->value && it.owner < best->owner)) best = V1DHit{it.owner, v, h};
    }
    return best;
}

// ---------------------------------------------------------------------------
// PathSiteIndex

PathSiteIndex::PathSiteIndex(const PathStructure& ps) : ps_(&ps), v1d_(ps.path().total()) {}

void PathSiteIndex::insert(Point site, int id) {
    if (sites_.count(id)) throw Error("site id already registered");
    Site s;
    s.anchors = ps_->query_anchor_set(site);
    for (std::size_t i = 0; i < s.anchors.anchors.size(); ++i) {
        const Anchor& a = s.anchors.anchors[i];
        const int h = v1d_.insert(std::clamp(a.arc, 0.0, v1d_.total()), a.weight, id);
        if (static_cast<std::size_t>(h) >= anchor_of_handle_.size()) anchor_of_handle_.resize(static_cast<std::size_t>(h) + 1);
        anchor_of_handle_[static_cast<std::size_t>(h)] = static_cast<int>(i);
        s.handles.push_back(h);
    }
    sites_.emplace(id, std::move(s));
}

void PathSiteIndex::erase(int id) {
    auto it = sites_.find(id);
    if (it == sites_.end()) throw Error("unknown site id");
    for (int h : it->second.handles) v1d_.erase(h);
    sites_.erase(it);
}

std::optional<PsiHit> PathSiteIndex::query(Point q) const { return query(ps_->query_anchor_set(q)); }

std::optional<PsiHit> PathSiteIndex::query(const AnchorSet& q) const {
    std::optional<PsiHit> best;
    for (std::size_t i = 0; i < q.anchors.size(); ++i) {
        const Anchor& a = q.anchors[i];
        const auto h = v1d_.query(a.arc);
        if (!h) return std::nullopt;
        const double v = a.weight + h->value;
        if (!best || v < best->value || (v == best->value && h->owner < best->site))
            best = PsiHit{h->owner, v, static_cast<int>(i), anchor_of_handle_[static_cast<std::size_t>(h->handle)]};
    }
    return best;
}

}  // namespace geodesic
