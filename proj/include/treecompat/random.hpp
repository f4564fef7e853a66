#pragma once

#include <random>
#include <vector>

#include "treecompat/tree.hpp"

namespace treecompat {

struct RandomTreeOptions {
    std::vector<Label> alphabet;       // labels drawn from here, injectively
    std::size_t max_leaves = 6;        // capped by the alphabet size
    double internal_label_prob = 0.4;  // chance an inner node takes a spare label
    double elementary_prob = 0.2;      // chance to stack an elementary node over a node
    bool semilabeled = false;          // label every inserted elementary node
};

// A random tree over a subset of the alphabet. Leaves always take labels;
// inner nodes and inserted elementary nodes consume further labels while any
// remain. With semilabeled = false, inserted elementary nodes stay unlabeled,
// which produces clusters of multiplicity > 1.
ATree random_tree(std::mt19937_64& rng, const RandomTreeOptions& options);

// A random semi-labeled tree whose labeled nodes are exactly the given
// labels: leaves first, then inner nodes, then labeled elementary nodes once
// the topology is saturated.
ATree random_semilabeled_exact(std::mt19937_64& rng, const std::vector<Label>& labels);

// Numbered labels "L0000".."Lnnnn".
std::vector<Label> numbered_labels(std::size_t count);

}  // namespace treecompat
