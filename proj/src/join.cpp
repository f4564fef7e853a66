#include "treecompat/join.hpp"

#include <algorithm>
#include <map>

#include "treecompat/restriction.hpp"

namespace treecompat {

namespace {

bool cluster_order(const Cluster& a, const Cluster& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

// Nodes grouped by cluster; each group is a downward chain, listed deepest
// node first.
std::map<Cluster, std::vector<NodeId>> cluster_chains(const ATree& t) {
    std::map<Cluster, std::vector<NodeId>> chains;
    std::vector<NodeId> bottom_up(t.nodes());
    std::sort(bottom_up.begin(), bottom_up.end(),
              [&](NodeId a, NodeId b) { return t.depth(a) > t.depth(b); });
    std::vector<Cluster> cluster(t.slot_bound());
    for (NodeId v : bottom_up) {
        Cluster& c = cluster[v];
        if (t.label(v)) {
            c.insert(*t.label(v));
        }
        for (NodeId w : t.children(v)) {
            c.insert(cluster[w].begin(), cluster[w].end());
        }
        chains[c].push_back(v);
    }
    return chains;
}

std::vector<ATree::NodeSpec> to_specs(const ATree& t) {
    std::vector<ATree::NodeSpec> slots(t.slot_bound());
    for (NodeId v : t.nodes()) {
        slots[v].present = true;
        slots[v].parent = t.parent(v);
        slots[v].label = t.label(v);
    }
    return slots;
}

}  // namespace

JoinResult join_same_labels(const ATree& t1, const ATree& t2) {
    if (t1.labels() != t2.labels()) {
        throw TreeError(ErrorCode::LabelSetMismatch,
                        "join_same_labels requires identical label sets");
    }
    if (t1.labels().empty()) {
        throw TreeError(ErrorCode::EmptyTree, "join_same_labels requires non-empty trees");
    }
    Verdict verdict = cluster_compatibility(t1, t2);
    if (!verdict.compatible) {
        throw IncompatibleError(std::move(verdict.certificates));
    }

    std::map<Cluster, std::vector<NodeId>> chains1 = cluster_chains(t1);
    std::map<Cluster, std::vector<NodeId>> chains2 = cluster_chains(t2);

    std::vector<Cluster> clusters;
    for (const auto& [c, chain] : chains1) {
        clusters.push_back(c);
    }
    for (const auto& [c, chain] : chains2) {
        if (chains1.count(c) == 0) {
            clusters.push_back(c);
        }
    }
    std::sort(clusters.begin(), clusters.end(), cluster_order);

    // One chain of length max(multiplicity in t1, multiplicity in t2) per
    // cluster; w(Y, j) = base[Y] + j - 1, with j = 1 the deepest node.
    std::size_t total = 0;
    std::map<Cluster, NodeId> base;
    std::map<Cluster, std::size_t> length;
    for (const Cluster& c : clusters) {
        std::size_t m1 = chains1.count(c) ? chains1[c].size() : 0;
        std::size_t m2 = chains2.count(c) ? chains2[c].size() : 0;
        base[c] = static_cast<NodeId>(total);
        length[c] = std::max(m1, m2);
        total += length[c];
    }

    // Within the sorted cluster list the parent of a cluster is the first
    // strict superset: supersets are totally ordered by inclusion here, so
    // the smallest one is the nesting parent.
    std::vector<ATree::NodeSpec> slots(total);
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        const Cluster& c = clusters[i];
        NodeId b = base[c];
        std::size_t n = length[c];
        for (std::size_t j = 0; j < n; ++j) {
            slots[b + j].present = true;
            if (j + 1 < n) {
                slots[b + j].parent = b + j + 1;
            }
        }
        Cluster covered;
        for (std::size_t k = 0; k < i; ++k) {
            const Cluster& sub = clusters[k];
            if (!std::includes(c.begin(), c.end(), sub.begin(), sub.end())) {
                continue;
            }
            covered.insert(sub.begin(), sub.end());
        }
        for (std::size_t k = i + 1; k < clusters.size(); ++k) {
            const Cluster& super = clusters[k];
            if (std::includes(super.begin(), super.end(), c.begin(), c.end())) {
                slots[b + n - 1].parent = base[super];
                break;
            }
        }
        Cluster extra;
        std::set_difference(c.begin(), c.end(), covered.begin(), covered.end(),
                            std::inserter(extra, extra.end()));
        if (extra.size() == 1) {
            slots[b].label = *extra.begin();
        }
    }

    JoinResult out;
    out.supertree = ATree::assemble(std::move(slots));
    for (const auto& [c, chain] : chains1) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            out.f1[chain[i]] = base[c] + static_cast<NodeId>(i);
        }
    }
    for (const auto& [c, chain] : chains2) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            out.f2[chain[i]] = base[c] + static_cast<NodeId>(i);
        }
    }
    return out;
}

std::pair<ATree, NodeId> blow_out(const ATree& t, NodeId v) {
    if (!t.contains(v)) {
        throw TreeError(ErrorCode::UnknownNode, "cannot blow out absent node " + std::to_string(v));
    }
    std::vector<ATree::NodeSpec> slots = to_specs(t);
    NodeId fresh = static_cast<NodeId>(slots.size());
    ATree::NodeSpec spec;
    spec.present = true;
    spec.parent = t.parent(v);
    slots.push_back(std::move(spec));
    slots[v].parent = fresh;
    return {ATree::assemble(std::move(slots)), fresh};
}

namespace {

// Copies t's nodes into slots at a fixed id offset, remembering the node map.
void graft_copy(const ATree& t, NodeId offset, std::vector<ATree::NodeSpec>& slots,
                EmbeddingMap& where) {
    for (NodeId v : t.nodes()) {
        ATree::NodeSpec& spec = slots[offset + v];
        spec.present = true;
        spec.label = t.label(v);
        spec.parent = t.parent(v) == kNoNode ? kNoNode : offset + t.parent(v);
        where[v] = offset + v;
    }
}

JoinResult join_disjoint(const ATree& t1, const ATree& t2) {
    JoinResult out;
    out.disjoint_label_sets = true;
    NodeId offset2 = static_cast<NodeId>(t1.slot_bound());
    NodeId fresh_root = offset2 + static_cast<NodeId>(t2.slot_bound());
    std::vector<ATree::NodeSpec> slots(fresh_root + 1);
    graft_copy(t1, 0, slots, out.f1);
    graft_copy(t2, offset2, slots, out.f2);
    slots[out.f1[t1.root()]].parent = fresh_root;
    slots[out.f2[t2.root()]].parent = fresh_root;
    slots[fresh_root].present = true;
    out.supertree = ATree::assemble(std::move(slots));
    return out;
}

}  // namespace

JoinResult join(const ATree& t1, const ATree& t2) {
    Verdict verdict = cluster_compatibility(t1, t2);
    if (!verdict.compatible) {
        throw IncompatibleError(std::move(verdict.certificates));
    }
    if (t1.empty() || t2.empty()) {
        JoinResult out;
        const ATree& rest = t1.empty() ? t2 : t1;
        EmbeddingMap& f = t1.empty() ? out.f2 : out.f1;
        out.supertree = rest;
        for (NodeId v : rest.nodes()) {
            f[v] = v;
        }
        return out;
    }

    RestrictedPair pair = common_restriction_pair(t1, t2);
    if (pair.common.empty()) {
        return join_disjoint(t1, t2);
    }
    if (t1.labels() == t2.labels()) {
        return join_same_labels(t1, t2);
    }

    JoinResult core = join_same_labels(pair.bar1, pair.bar2);
    ATree joined = std::move(core.supertree);
    EmbeddingMap f1 = std::move(core.f1);
    EmbeddingMap f2 = std::move(core.f2);

    // A chain node may be the image of a t1 node and a t2 node that each lost
    // a private label to the restriction; pull the t1 side up onto a fresh
    // node so both labels find a place.
    std::map<NodeId, NodeId> pre2;
    for (const auto& [b, w] : f2) {
        pre2[w] = b;
    }
    std::vector<std::pair<Label, NodeId>> conflicts;
    for (const auto& [a, w] : f1) {
        if (!t1.label(a) || pair.common.count(*t1.label(a))) {
            continue;
        }
        auto hit = pre2.find(w);
        if (hit == pre2.end()) {
            continue;
        }
        NodeId b = hit->second;
        if (t2.label(b) && !pair.common.count(*t2.label(b))) {
            conflicts.emplace_back(*t1.label(a), a);
        }
    }
    std::sort(conflicts.begin(), conflicts.end());
    for (const auto& [label, a] : conflicts) {
        auto [rewritten, fresh] = blow_out(joined, f1[a]);
        joined = std::move(rewritten);
        f1[a] = fresh;
    }

    // Graft the parts of t1 and t2 that the restriction dropped, and put the
    // private labels of surviving nodes onto their images.
    std::vector<ATree::NodeSpec> slots = to_specs(joined);
    NodeId next = static_cast<NodeId>(slots.size());
    for (const ATree* t : {&t1, &t2}) {
        const ATree& bar = t == &t1 ? pair.bar1 : pair.bar2;
        EmbeddingMap& f = t == &t1 ? f1 : f2;
        for (NodeId v : t->nodes()) {
            if (!bar.contains(v)) {
                f[v] = next++;
                slots.emplace_back();
            }
        }
        for (NodeId v : t->nodes()) {
            if (bar.contains(v)) {
                const std::optional<Label>& label = t->label(v);
                if (label && pair.common.count(*label) == 0) {
                    slots[f[v]].label = *label;
                }
                continue;
            }
            ATree::NodeSpec& spec = slots[f[v]];
            spec.present = true;
            spec.label = t->label(v);
            spec.parent = f[t->parent(v)];
        }
    }

    JoinResult out;
    out.supertree = ATree::assemble(std::move(slots));
    out.f1 = std::move(f1);
    out.f2 = std::move(f2);
    return out;
}

}  // namespace treecompat
