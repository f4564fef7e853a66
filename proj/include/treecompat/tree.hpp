#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "treecompat/errors.hpp"

namespace treecompat {

// A taxon name. Restricted to Newick-safe tokens ([A-Za-z0-9_.|-]+) so that
// every label survives a serialization round trip unchanged.
using Label = std::string;

bool is_valid_label(std::string_view token);

// Identifies a node within one ATree. Ids are stable: operations that derive a
// tree from another (restriction, normalization) keep the ids of surviving
// nodes, and ids are never reused after construction.
using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

using LabelSet = std::set<Label>;
using Cluster = std::set<Label>;

// All clusters of a tree, with how many nodes realize each one and the deepest
// such node (the most recent common ancestor of the cluster's labels). Nodes
// sharing a cluster always form a chain of unlabeled elementary nodes ending
// at the anchor, so multiplicity > 1 only happens in non-semi-labeled trees.
struct ClusterRepresentation {
    std::set<Cluster> clusters;
    std::map<Cluster, int> multiplicity;
    std::map<Cluster, NodeId> anchor;
};

// A rooted tree with injectively labeled nodes where every leaf carries a
// label. Internal nodes may be unlabeled. Immutable after construction; all
// derived trees are fresh values.
class ATree {
public:
    struct Edge {
        NodeId parent;
        NodeId child;
    };

    // Raw material for assemble(). Slots are indexed by NodeId; absent slots
    // model trees whose id space has holes (e.g. restrictions).
    struct NodeSpec {
        bool present = false;
        NodeId parent = kNoNode;
        std::optional<Label> label;
    };

    ATree() = default;  // the empty tree

    // Builds a tree from an explicit arc list. Nodes are every id mentioned
    // as an endpoint or as a labeling key.
    static ATree build(const std::vector<Edge>& edges, const std::map<NodeId, Label>& labeling);

    // Validates the slot array (single root, acyclic, injective valid labels,
    // labeled leaves) and computes the traversal caches.
    static ATree assemble(std::vector<NodeSpec> slots);

    bool empty() const { return order_.empty(); }
    std::size_t node_count() const { return order_.size(); }

    // Present node ids in ascending order.
    const std::vector<NodeId>& nodes() const { return order_; }

    // One past the largest id ever used; fresh ids start here.
    std::size_t slot_bound() const { return slots_.size(); }

    bool contains(NodeId v) const { return v < slots_.size() && slots_[v].present; }
    NodeId root() const { return root_; }
    NodeId parent(NodeId v) const { return slot(v).parent; }
    const std::vector<NodeId>& children(NodeId v) const { return slot(v).children; }
    const std::optional<Label>& label(NodeId v) const { return slot(v).label; }
    bool is_leaf(NodeId v) const { return slot(v).children.empty(); }
    bool is_elementary(NodeId v) const { return slot(v).children.size() == 1; }
    int depth(NodeId v) const { return slot(v).depth; }

    const LabelSet& labels() const { return labels_; }
    LabelSet leaf_labels() const;
    NodeId node_with_label(const Label& a) const;

    // True iff v lies on the directed path from u downward, i.e. u is an
    // ancestor of v or u == v.
    bool has_path(NodeId u, NodeId v) const;

    Cluster cluster_of(NodeId v) const;
    ClusterRepresentation cluster_representation() const;

    // The deepest node that is an ancestor of every node labeled in x.
    NodeId mrca(const LabelSet& x) const;

    // True iff every elementary node is labeled (leaves always are).
    bool is_semilabeled() const;

private:
    struct Node {
        bool present = false;
        NodeId parent = kNoNode;
        std::vector<NodeId> children;
        std::optional<Label> label;
        int depth = 0;
        std::uint32_t tin = 0;
        std::uint32_t tout = 0;
    };

    const Node& slot(NodeId v) const;

    std::vector<Node> slots_;
    std::vector<NodeId> order_;
    NodeId root_ = kNoNode;
    LabelSet labels_;
    std::map<Label, NodeId> label_index_;
};

// Label-preserving, arc-preserving bijection test; child order is ignored.
bool isomorphic(const ATree& a, const ATree& b);

// Children of v ordered by the lexicographically smallest label in each
// child's cluster. This is the order used by the canonical serialization and
// by node paths in JSON output.
std::vector<NodeId> canonical_child_order(const ATree& t, NodeId v);

}  // namespace treecompat
