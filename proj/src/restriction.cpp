#include "treecompat/restriction.hpp"

#include <algorithm>

namespace treecompat {

ATree restrict_to(const ATree& t, const LabelSet& x) {
    if (t.empty()) {
        return ATree();
    }
    // keep(v) holds iff some node in v's subtree (v included) is labeled in x;
    // visiting nodes by falling depth puts children before their parents.
    std::vector<NodeId> bottom_up(t.nodes());
    std::sort(bottom_up.begin(), bottom_up.end(),
              [&](NodeId a, NodeId b) { return t.depth(a) > t.depth(b); });
    std::vector<ATree::NodeSpec> slots(t.slot_bound());
    for (NodeId v : bottom_up) {
        bool keep = t.label(v) && x.count(*t.label(v)) > 0;
        if (!keep) {
            for (NodeId c : t.children(v)) {
                if (slots[c].present) {
                    keep = true;
                    break;
                }
            }
        }
        if (!keep) {
            continue;
        }
        slots[v].present = true;
        slots[v].parent = t.parent(v);
        if (t.label(v) && x.count(*t.label(v)) > 0) {
            slots[v].label = *t.label(v);
        }
    }
    return ATree::assemble(std::move(slots));
}

RestrictedPair common_restriction_pair(const ATree& t1, const ATree& t2) {
    RestrictedPair out;
    std::set_intersection(t1.labels().begin(), t1.labels().end(), t2.labels().begin(),
                          t2.labels().end(), std::inserter(out.common, out.common.end()));
    out.bar1 = restrict_to(t1, out.common);
    out.bar2 = restrict_to(t2, out.common);
    return out;
}

ATree normalize_semilabeled(const ATree& t) {
    if (t.empty()) {
        return ATree();
    }
    std::vector<ATree::NodeSpec> slots(t.slot_bound());
    for (NodeId v : t.nodes()) {
        if (t.is_elementary(v) && !t.label(v)) {
            continue;
        }
        slots[v].present = true;
        slots[v].label = t.label(v);
        NodeId p = t.parent(v);
        while (p != kNoNode && t.is_elementary(p) && !t.label(p)) {
            p = t.parent(p);
        }
        slots[v].parent = p;
    }
    return ATree::assemble(std::move(slots));
}

}  // namespace treecompat
