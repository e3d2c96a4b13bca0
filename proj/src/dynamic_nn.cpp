#include "geodesic/dynamic_nn.hpp"

namespace geodesic {

NNIndex::NNIndex(const PolygonDomain& domain, double eps)
    : NNIndex(std::make_shared<const DistanceOracle>(domain, eps)) {}

NNIndex::NNIndex(std::shared_ptr<const DistanceOracle> backbone) : oracle_(std::move(backbone)) {
    const auto& nodes = oracle_->tree().nodes();
    paths_.resize(nodes.size());
    for (const auto& nd : nodes) {
        for (const PathStructure& ps : oracle_->structures(nd.id)) paths_[static_cast<std::size_t>(nd.id)].emplace_back(ps);
    }
}

void NNIndex::insert(Point site, int id) {
    if (sites_.count(id)) throw Error("site id already registered");
    if (oracle_->domain().contains(site) == Containment::exterior) throw Error("site lies outside the domain");
    const TreePath tp = oracle_->tree().root_to_leaf(site);
    SiteRecord rec;
    rec.id = id;
    rec.position = site;
    // Separator sites live at the pointer node and its ancestors only.
    for (int v : tp.effective()) {
        auto& list = paths_[static_cast<std::size_t>(v)];
        for (std::size_t j = 0; j < list.size(); ++j) {
            list[j].insert(site, id);
            rec.paths.emplace_back(v, static_cast<int>(j));
        }
    }
    if (tp.pointer < 0) {
        rec.leaf = tp.nodes.back();
        leaves_.try_emplace(rec.leaf, eps()).first->second.insert(site, id);
    }
    sites_.emplace(id, std::move(rec));
}

void NNIndex::erase(int id) {
    auto it = sites_.find(id);
    if (it == sites_.end()) throw Error("unknown site id");
    for (auto [v, j] : it->second.paths) paths_[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)].erase(id);
    if (it->second.leaf >= 0) leaves_.at(it->second.leaf).erase(id);
    sites_.erase(it);
}

std::optional<NNResult> NNIndex::query(Point q, bool with_witness) const {
    if (oracle_->domain().contains(q) == Containment::exterior) throw Error("query point lies outside the domain");
    if (sites_.empty()) return std::nullopt;
    const TreePath tp = oracle_->tree().root_to_leaf(q);
    std::optional<NNResult> best;
    const PathSiteIndex* best_index = nullptr;
    PsiHit best_hit{};
    AnchorSet best_anchors;
    auto better = [&](double v, int site) { return !best || v < best->estimate || (v == best->estimate && site < best->site); };

    if (auto it = leaves_.find(tp.nodes.back()); it != leaves_.end()) {
        if (const auto h = it->second.query(q); h && better(h->distance, h->id)) best = NNResult{h->id, h->distance, {}};
    }
    for (int v : tp.nodes) {
        for (const PathSiteIndex& idx : paths_[static_cast<std::size_t>(v)]) {
            if (idx.site_count() == 0) continue;
            AnchorSet aq = idx.structure().query_anchor_set(q);
            const auto h = idx.query(aq);
            if (h && better(h->value, h->site)) {
                best = NNResult{h->site, h->value, {}};
                best_index = &idx;
                best_hit = *h;
                best_anchors = std::move(aq);
            }
        }
    }
    if (best && with_witness) {
        if (best_index && best_hit.site == best->site && best_hit.value == best->estimate) {
            const ViaResult r{best_hit.value, best_hit.query_anchor, best_hit.site_anchor};
            best->witness = best_index->structure().witness(best_anchors, best_index->site_anchors(best->site), r);
        } else {
            best->witness = {q, sites_.at(best->site).position};
        }
    }
    return best;
}

const PathSiteIndex& NNIndex::path_index(int node, int path) const {
    return paths_.at(static_cast<std::size_t>(node)).at(static_cast<std::size_t>(path));
}

const EuclidAnnIndex* NNIndex::leaf_index(int leaf) const {
    auto it = leaves_.find(leaf);
    return it == leaves_.end() ? nullptr : &it->second;
}

}  // namespace geodesic
