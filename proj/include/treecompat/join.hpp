#pragma once

#include <utility>

#include "treecompat/compatibility.hpp"
#include "treecompat/tree.hpp"

namespace treecompat {

struct JoinResult {
    ATree supertree;
    EmbeddingMap f1;  // nodes of t1 -> nodes of supertree
    EmbeddingMap f2;
    // Set when the inputs shared no label and were hung under a fresh root.
    bool disjoint_label_sets = false;
};

// The join of two compatible trees over the same non-empty label set: one
// chain of nodes per cluster of either tree, chains wired along the nesting
// order, the bottom node of a chain labeled when its cluster exceeds the
// union of its proper subclusters by exactly one label. f1 and f2 embed the
// inputs onto the chains, bottom first, and are jointly surjective. Throws
// LabelSetMismatch, EmptyTree or IncompatibleError when the preconditions
// fail.
JoinResult join_same_labels(const ATree& t1, const ATree& t2);

// The join of two arbitrary compatible trees: joins the restrictions to the
// shared labels, pulls apart chain nodes that would have to carry one private
// label from each input, then grafts the unshared parts of both inputs back
// on. Trees without any shared label are combined under a new unlabeled root
// (flagged in the result); an empty input yields a copy of the other tree.
JoinResult join(const ATree& t1, const ATree& t2);

// Splits the arc above v by a fresh unlabeled node (which becomes the root
// when v was the root). Returns the rewritten tree and the fresh node's id.
std::pair<ATree, NodeId> blow_out(const ATree& t, NodeId v);

}  // namespace treecompat
