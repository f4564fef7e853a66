#pragma once

#include "treecompat/tree.hpp"

namespace treecompat {

// The restriction of t to the labels in x: keeps exactly the nodes whose
// cluster meets x, keeps a node's label only when it lies in x. Surviving
// nodes keep their NodeIds, so results can be traced back into t. Returns the
// empty tree when no label of t lies in x.
ATree restrict_to(const ATree& t, const LabelSet& x);

struct RestrictedPair {
    LabelSet common;
    ATree bar1;
    ATree bar2;
};

// Both inputs restricted to their shared labels.
RestrictedPair common_restriction_pair(const ATree& t1, const ATree& t2);

// Contracts every maximal chain of unlabeled elementary nodes onto its lowest
// node, which keeps its id and label. The result is semi-labeled and has the
// same cluster set as t; on semi-labeled input this is the identity.
ATree normalize_semilabeled(const ATree& t);

}  // namespace treecompat
