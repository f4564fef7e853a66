#include "treecompat/tree.hpp"

#include <algorithm>
#include <cctype>

namespace treecompat {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::MultipleRoots: return "MultipleRoots";
        case ErrorCode::MultipleParents: return "MultipleParents";
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
        case ErrorCode::UnlabeledLeaf: return "UnlabeledLeaf";
        case ErrorCode::InvalidLabel: return "InvalidLabel";
        case ErrorCode::UnknownNode: return "UnknownNode";
        case ErrorCode::LabelNotPresent: return "LabelNotPresent";
        case ErrorCode::EmptyLabelSet: return "EmptyLabelSet";
        case ErrorCode::EmptyTree: return "EmptyTree";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::LabelSetMismatch: return "LabelSetMismatch";
        case ErrorCode::Incompatible: return "Incompatible";
        case ErrorCode::DomainMismatch: return "DomainMismatch";
    }
    return "UnknownError";
}

bool is_valid_label(std::string_view token) {
    if (token.empty()) {
        return false;
    }
    for (char c : token) {
        bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
                  c == '|' || c == '-';
        if (!ok) {
            return false;
        }
    }
    return true;
}

const ATree::Node& ATree::slot(NodeId v) const {
    if (!contains(v)) {
        throw TreeError(ErrorCode::UnknownNode, "node " + std::to_string(v) + " is not in the tree");
    }
    return slots_[v];
}

ATree ATree::build(const std::vector<Edge>& edges, const std::map<NodeId, Label>& labeling) {
    NodeId max_id = 0;
    bool any = false;
    for (const Edge& e : edges) {
        max_id = std::max({max_id, e.parent, e.child});
        any = true;
    }
    for (const auto& [v, label] : labeling) {
        max_id = std::max(max_id, v);
        any = true;
    }
    std::vector<NodeSpec> slots(any ? max_id + 1 : 0);
    for (const Edge& e : edges) {
        if (e.parent == e.child) {
            throw TreeError(ErrorCode::CycleDetected,
                            "self arc on node " + std::to_string(e.child));
        }
        slots[e.parent].present = true;
        NodeSpec& child = slots[e.child];
        if (child.present && child.parent != kNoNode) {
            throw TreeError(ErrorCode::MultipleParents,
                            "node " + std::to_string(e.child) + " has more than one parent");
        }
        child.present = true;
        child.parent = e.parent;
    }
    for (const auto& [v, label] : labeling) {
        slots[v].present = true;
        slots[v].label = label;
    }
    return assemble(std::move(slots));
}

ATree ATree::assemble(std::vector<NodeSpec> specs) {
    ATree t;
    t.slots_.resize(specs.size());
    for (NodeId v = 0; v < specs.size(); ++v) {
        Node& node = t.slots_[v];
        node.present = specs[v].present;
        node.parent = specs[v].parent;
        node.label = std::move(specs[v].label);
        if (node.present) {
            t.order_.push_back(v);
        }
    }
    if (t.order_.empty()) {
        return t;
    }

    for (NodeId v : t.order_) {
        Node& node = t.slots_[v];
        if (node.parent == kNoNode) {
            if (t.root_ != kNoNode) {
                throw TreeError(ErrorCode::MultipleRoots,
                                "nodes " + std::to_string(t.root_) + " and " + std::to_string(v) +
                                    " both lack a parent");
            }
            t.root_ = v;
        } else {
            if (node.parent >= t.slots_.size() || !t.slots_[node.parent].present) {
                throw TreeError(ErrorCode::UnknownNode,
                                "node " + std::to_string(v) + " has absent parent " +
                                    std::to_string(node.parent));
            }
            t.slots_[node.parent].children.push_back(v);
        }
    }
    if (t.root_ == kNoNode) {
        throw TreeError(ErrorCode::CycleDetected, "every node has a parent");
    }

    // Iterative preorder walk; assigns depth and the tin/tout intervals that
    // back the O(1) ancestor test.
    std::uint32_t clock = 0;
    std::size_t seen = 0;
    std::vector<std::pair<NodeId, std::size_t>> stack;
    stack.emplace_back(t.root_, 0);
    while (!stack.empty()) {
        auto& [v, next_child] = stack.back();
        Node& node = t.slots_[v];
        if (next_child == 0) {
            node.tin = clock++;
            node.depth = node.parent == kNoNode ? 0 : t.slots_[node.parent].depth + 1;
            ++seen;
        }
        if (next_child < node.children.size()) {
            NodeId c = node.children[next_child++];
            stack.emplace_back(c, 0);
        } else {
            node.tout = clock++;
            stack.pop_back();
        }
    }
    if (seen != t.order_.size()) {
        throw TreeError(ErrorCode::CycleDetected,
                        "tree contains nodes not reachable from the root");
    }

    for (NodeId v : t.order_) {
        const Node& node = t.slots_[v];
        if (node.label) {
            if (!is_valid_label(*node.label)) {
                throw TreeError(ErrorCode::InvalidLabel, "label '" + *node.label +
                                                             "' is not a Newick-safe token");
            }
            auto [it, inserted] = t.label_index_.emplace(*node.label, v);
            if (!inserted) {
                throw TreeError(ErrorCode::DuplicateLabel,
                                "label '" + *node.label + "' appears on two nodes");
            }
            t.labels_.insert(*node.label);
        } else if (node.children.empty()) {
            throw TreeError(ErrorCode::UnlabeledLeaf,
                            "leaf node " + std::to_string(v) + " has no label");
        }
    }
    return t;
}

LabelSet ATree::leaf_labels() const {
    LabelSet out;
    for (NodeId v : order_) {
        if (is_leaf(v)) {
            out.insert(*label(v));
        }
    }
    return out;
}

NodeId ATree::node_with_label(const Label& a) const {
    auto it = label_index_.find(a);
    return it == label_index_.end() ? kNoNode : it->second;
}

bool ATree::has_path(NodeId u, NodeId v) const {
    const Node& a = slot(u);
    const Node& b = slot(v);
    return a.tin <= b.tin && b.tout <= a.tout;
}

Cluster ATree::cluster_of(NodeId v) const {
    slot(v);
    Cluster out;
    std::vector<NodeId> stack{v};
    while (!stack.empty()) {
        NodeId w = stack.back();
        stack.pop_back();
        const Node& node = slots_[w];
        if (node.label) {
            out.insert(*node.label);
        }
        stack.insert(stack.end(), node.children.begin(), node.children.end());
    }
    return out;
}

ClusterRepresentation ATree::cluster_representation() const {
    ClusterRepresentation rep;
    if (empty()) {
        return rep;
    }
    std::vector<NodeId> preorder(order_);
    std::sort(preorder.begin(), preorder.end(),
              [&](NodeId a, NodeId b) { return slots_[a].tin < slots_[b].tin; });
    std::vector<Cluster> cluster(slots_.size());
    for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
        NodeId v = *it;
        const Node& node = slots_[v];
        Cluster& c = cluster[v];
        if (node.label) {
            c.insert(*node.label);
        }
        for (NodeId w : node.children) {
            c.insert(cluster[w].begin(), cluster[w].end());
        }
        rep.clusters.insert(c);
        rep.multiplicity[c] += 1;
        auto [it2, inserted] = rep.anchor.emplace(c, v);
        if (!inserted && node.depth > slots_[it2->second].depth) {
            it2->second = v;
        }
    }
    return rep;
}

NodeId ATree::mrca(const LabelSet& x) const {
    if (x.empty()) {
        throw TreeError(ErrorCode::EmptyLabelSet, "mrca of an empty label set");
    }
    NodeId m = kNoNode;
    for (const Label& a : x) {
        NodeId v = node_with_label(a);
        if (v == kNoNode) {
            throw TreeError(ErrorCode::LabelNotPresent, "label '" + a + "' is not in the tree");
        }
        if (m == kNoNode) {
            m = v;
            continue;
        }
        while (slots_[m].depth > slots_[v].depth) {
            m = slots_[m].parent;
        }
        while (slots_[v].depth > slots_[m].depth) {
            v = slots_[v].parent;
        }
        while (m != v) {
            m = slots_[m].parent;
            v = slots_[v].parent;
        }
    }
    return m;
}

bool ATree::is_semilabeled() const {
    for (NodeId v : order_) {
        if (is_elementary(v) && !label(v)) {
            return false;
        }
    }
    return true;
}

namespace {

std::string signature(const ATree& t, NodeId v) {
    std::vector<std::string> parts;
    for (NodeId c : t.children(v)) {
        parts.push_back(signature(t, c));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const std::string& p : parts) {
        out += p;
    }
    out += ")";
    if (t.label(v)) {
        out += *t.label(v);
    }
    return out;
}

}  // namespace

bool isomorphic(const ATree& a, const ATree& b) {
    if (a.empty() || b.empty()) {
        return a.empty() && b.empty();
    }
    if (a.node_count() != b.node_count() || a.labels() != b.labels()) {
        return false;
    }
    return signature(a, a.root()) == signature(b, b.root());
}

std::vector<NodeId> canonical_child_order(const ATree& t, NodeId v) {
    std::vector<NodeId> order = t.children(v);
    std::vector<std::pair<Label, NodeId>> keyed;
    keyed.reserve(order.size());
    for (NodeId c : order) {
        Cluster cl = t.cluster_of(c);
        keyed.emplace_back(*cl.begin(), c);
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        order[i] = keyed[i].second;
    }
    return order;
}

}  // namespace treecompat
