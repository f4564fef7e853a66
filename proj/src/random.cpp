#include "treecompat/random.hpp"

#include <algorithm>
#include <cstdio>

namespace treecompat {

namespace {

using Specs = std::vector<ATree::NodeSpec>;

NodeId add_leaf(Specs& specs, Label label) {
    ATree::NodeSpec spec;
    spec.present = true;
    spec.label = std::move(label);
    specs.push_back(std::move(spec));
    return static_cast<NodeId>(specs.size() - 1);
}

// Repeatedly merges 2..4 pending subtrees under fresh inner nodes until one
// root remains.
void merge_topology(std::mt19937_64& rng, Specs& specs, std::vector<NodeId>& roots) {
    while (roots.size() > 1) {
        std::shuffle(roots.begin(), roots.end(), rng);
        std::uniform_int_distribution<std::size_t> arity(
            2, std::min<std::size_t>(4, roots.size()));
        std::size_t k = arity(rng);
        ATree::NodeSpec spec;
        spec.present = true;
        specs.push_back(std::move(spec));
        NodeId inner = static_cast<NodeId>(specs.size() - 1);
        for (std::size_t i = 0; i < k; ++i) {
            specs[roots.back()].parent = inner;
            roots.pop_back();
        }
        roots.push_back(inner);
    }
}

NodeId insert_elementary(Specs& specs, NodeId below) {
    ATree::NodeSpec spec;
    spec.present = true;
    spec.parent = specs[below].parent;
    specs.push_back(std::move(spec));
    NodeId fresh = static_cast<NodeId>(specs.size() - 1);
    specs[below].parent = fresh;
    return fresh;
}

}  // namespace

ATree random_tree(std::mt19937_64& rng, const RandomTreeOptions& options) {
    if (options.alphabet.empty()) {
        throw TreeError(ErrorCode::EmptyLabelSet, "random_tree needs a non-empty alphabet");
    }
    std::vector<Label> pool = options.alphabet;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t cap = std::min(options.max_leaves, pool.size());
    std::uniform_int_distribution<std::size_t> leaf_count(1, std::max<std::size_t>(1, cap));
    std::size_t leaves = leaf_count(rng);

    Specs specs;
    std::vector<NodeId> roots;
    for (std::size_t i = 0; i < leaves; ++i) {
        roots.push_back(add_leaf(specs, pool.back()));
        pool.pop_back();
    }
    std::size_t first_inner = specs.size();
    merge_topology(rng, specs, roots);

    std::bernoulli_distribution take_label(options.internal_label_prob);
    for (std::size_t v = first_inner; v < specs.size(); ++v) {
        if (!pool.empty() && take_label(rng)) {
            specs[v].label = pool.back();
            pool.pop_back();
        }
    }

    std::bernoulli_distribution stack_node(options.elementary_prob);
    std::size_t original = specs.size();
    for (NodeId v = 0; v < original; ++v) {
        if (!stack_node(rng)) {
            continue;
        }
        if (options.semilabeled) {
            if (pool.empty()) {
                break;
            }
            NodeId fresh = insert_elementary(specs, v);
            specs[fresh].label = pool.back();
            pool.pop_back();
        } else {
            insert_elementary(specs, v);
        }
    }
    return ATree::assemble(std::move(specs));
}

ATree random_semilabeled_exact(std::mt19937_64& rng, const std::vector<Label>& labels) {
    if (labels.empty()) {
        return ATree();
    }
    std::vector<Label> pool = labels;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t n = pool.size();
    std::uniform_int_distribution<std::size_t> leaf_count(std::max<std::size_t>(1, n / 3),
                                                          std::max<std::size_t>(1, 2 * n / 3));
    std::size_t leaves = std::min(n, leaf_count(rng));

    Specs specs;
    std::vector<NodeId> roots;
    for (std::size_t i = 0; i < leaves; ++i) {
        roots.push_back(add_leaf(specs, pool.back()));
        pool.pop_back();
    }
    std::size_t first_inner = specs.size();
    merge_topology(rng, specs, roots);

    std::vector<NodeId> inner;
    for (std::size_t v = first_inner; v < specs.size(); ++v) {
        inner.push_back(static_cast<NodeId>(v));
    }
    std::shuffle(inner.begin(), inner.end(), rng);
    while (!pool.empty() && !inner.empty()) {
        specs[inner.back()].label = pool.back();
        inner.pop_back();
        pool.pop_back();
    }
    while (!pool.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, specs.size() - 1);
        NodeId fresh = insert_elementary(specs, static_cast<NodeId>(pick(rng)));
        specs[fresh].label = pool.back();
        pool.pop_back();
    }
    return ATree::assemble(std::move(specs));
}

std::vector<Label> numbered_labels(std::size_t count) {
    std::vector<Label> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), "L%05lu", static_cast<unsigned long>(i));
        out.emplace_back(buffer);
    }
    return out;
}

}  // namespace treecompat
