#include <random>
#include <set>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "treecompat/compatibility.hpp"
#include "treecompat/join.hpp"
#include "treecompat/newick.hpp"
#include "treecompat/random.hpp"
#include "treecompat/restriction.hpp"
#include "treecompat/tree.hpp"

using namespace treecompat;

namespace {

// Every node of the supertree must be hit by f1 or f2; the disjoint case is
// allowed to add one fresh root.
void check_joint_surjectivity(const JoinResult& result) {
    std::set<NodeId> hit;
    for (const auto& [v, w] : result.f1) {
        hit.insert(w);
    }
    for (const auto& [v, w] : result.f2) {
        hit.insert(w);
    }
    std::size_t missing = 0;
    for (NodeId w : result.supertree.nodes()) {
        if (!hit.count(w)) {
            ++missing;
            CHECK(w == result.supertree.root());
        }
    }
    if (result.disjoint_label_sets) {
        CHECK(missing == 1);
    } else {
        CHECK(missing == 0);
    }
}

void check_join_laws(const JoinResult& result, const ATree& t1, const ATree& t2) {
    CHECK(verify_embedding(result.f1, t1, result.supertree).empty());
    CHECK(verify_embedding(result.f2, t2, result.supertree).empty());
    CHECK(ancestrally_displays(result.supertree, t1));
    CHECK(ancestrally_displays(result.supertree, t2));
    check_joint_surjectivity(result);
    // the image of a node keeps its cluster, up to the other tree's labels
    for (const auto* t : {&t1, &t2}) {
        const EmbeddingMap& f = t == &t1 ? result.f1 : result.f2;
        for (const auto& [v, w] : f) {
            Cluster image = result.supertree.cluster_of(w);
            Cluster back;
            for (const Label& a : t->labels()) {
                if (image.count(a)) {
                    back.insert(a);
                }
            }
            CHECK(back == t->cluster_of(v));
        }
    }
}

}  // namespace

TEST_CASE("join_same_labels merges a flat pair with a stacked one") {
    ATree t1 = fixtures::tree(fixtures::kRootedPair);
    ATree t2 = fixtures::tree(fixtures::kRootedStack);
    JoinResult result = join_same_labels(t1, t2);
    CHECK(serialize_newick(result.supertree) == fixtures::kRootedStack);
    CHECK(isomorphic(result.supertree, t2));
    check_join_laws(result, t1, t2);
}

TEST_CASE("join_same_labels builds chains for repeated clusters") {
    ATree t1 = fixtures::tree("((A))B;");
    ATree t2 = fixtures::tree("(A)B;");
    JoinResult result = join_same_labels(t1, t2);
    CHECK(serialize_newick(result.supertree) == "((A))B;");
    check_join_laws(result, t1, t2);
}

TEST_CASE("join_same_labels checks its preconditions") {
    ATree ab = fixtures::tree(fixtures::kTwoLeaves);
    try {
        (void)join_same_labels(ab, fixtures::tree(fixtures::kFlat3));
        FAIL("expected LabelSetMismatch");
    } catch (const TreeError& e) {
        CHECK(e.code() == ErrorCode::LabelSetMismatch);
    }
    try {
        (void)join_same_labels(ATree(), ATree());
        FAIL("expected EmptyTree");
    } catch (const TreeError& e) {
        CHECK(e.code() == ErrorCode::EmptyTree);
    }
    CHECK_THROWS_AS((void)join_same_labels(ab, fixtures::tree(fixtures::kStackedPair)),
                    IncompatibleError);
}

TEST_CASE("join refuses incompatible inputs and reports why") {
    try {
        (void)join(fixtures::tree(fixtures::kCherryAB), fixtures::tree(fixtures::kCherryAC));
        FAIL("expected IncompatibleError");
    } catch (const IncompatibleError& e) {
        REQUIRE(e.certificates().size() == 1);
        CHECK(e.certificates()[0].kind == CertificateKind::ProperClusterIntersection);
    }
}

TEST_CASE("join merges the nine-label pair into the expected supertree") {
    ATree t1 = fixtures::tree(fixtures::kWideLeft);
    ATree t2 = fixtures::tree(fixtures::kWideRight);
    JoinResult result = join(t1, t2);
    CHECK(result.supertree.is_semilabeled());
    CHECK(serialize_newick(result.supertree) == fixtures::kWideJoin);
    CHECK_FALSE(result.disjoint_label_sets);
    check_join_laws(result, t1, t2);
}

TEST_CASE("join pulls conflicting private labels apart") {
    // Both roots would land on the same chain node; the first tree's root
    // label ends up above the second one's.
    ATree t1 = fixtures::tree("(A,B)P;");
    ATree t2 = fixtures::tree("(A,B)Q;");
    JoinResult result = join(t1, t2);
    CHECK(serialize_newick(result.supertree) == "((A,B)Q)P;");
    check_join_laws(result, t1, t2);

    JoinResult swapped = join(t2, t1);
    CHECK(serialize_newick(swapped.supertree) == "((A,B)P)Q;");
}

TEST_CASE("join hangs label-disjoint trees under a fresh root") {
    ATree t1 = fixtures::tree(fixtures::kTwoLeaves);
    ATree t2 = fixtures::tree("(C,D);");
    JoinResult result = join(t1, t2);
    CHECK(result.disjoint_label_sets);
    CHECK(serialize_newick(result.supertree) == "((A,B),(C,D));");
    CHECK_FALSE(result.supertree.label(result.supertree.root()));
    check_join_laws(result, t1, t2);
}

TEST_CASE("join with an empty tree copies the other input") {
    ATree t = fixtures::tree(fixtures::kCherryAB);
    JoinResult left = join(ATree(), t);
    CHECK(isomorphic(left.supertree, t));
    CHECK(left.f1.empty());
    CHECK(verify_embedding(left.f2, t, left.supertree).empty());
    JoinResult right = join(t, ATree());
    CHECK(isomorphic(right.supertree, t));
    CHECK(right.f2.empty());
    JoinResult both = join(ATree(), ATree());
    CHECK(both.supertree.empty());
}

TEST_CASE("blow_out splits the arc above a node") {
    ATree t = fixtures::tree(fixtures::kTwoLeaves);
    auto [above_leaf, fresh] = blow_out(t, t.node_with_label("A"));
    CHECK(serialize_newick(above_leaf) == "((A),B);");
    CHECK(above_leaf.parent(t.node_with_label("A")) == fresh);
    CHECK_FALSE(above_leaf.label(fresh));

    auto [above_root, new_root] = blow_out(t, t.root());
    CHECK(above_root.root() == new_root);
    CHECK(above_root.children(new_root) == std::vector<NodeId>{t.root()});
    CHECK(serialize_newick(above_root) == "((A,B));");

    CHECK_THROWS_AS((void)blow_out(t, static_cast<NodeId>(t.slot_bound())), TreeError);
}

TEST_CASE("joining a tree with itself returns the tree") {
    std::mt19937_64 rng(41);
    RandomTreeOptions opt;
    opt.alphabet = {"A", "B", "C", "D", "E", "F", "G"};
    for (int round = 0; round < 200; ++round) {
        opt.semilabeled = round % 2 == 0;
        ATree t = random_tree(rng, opt);
        JoinResult result = join(t, t);
        CHECK(isomorphic(result.supertree, t));
        check_join_laws(result, t, t);
    }
}

TEST_CASE("join satisfies its laws on random compatible pairs") {
    std::mt19937_64 rng(43);
    RandomTreeOptions opt;
    opt.alphabet = {"A", "B", "C", "D", "E", "F", "G", "H", "I"};
    opt.max_leaves = 7;
    std::bernoulli_distribution keep(0.6);
    int joined = 0;
    for (int round = 0; round < 300; ++round) {
        opt.semilabeled = round % 2 == 0;
        ATree base = random_tree(rng, opt);
        LabelSet x1, x2;
        for (const Label& a : base.labels()) {
            if (keep(rng)) {
                x1.insert(a);
            }
            if (keep(rng)) {
                x2.insert(a);
            }
        }
        ATree t1 = restrict_to(base, x1);
        ATree t2 = restrict_to(base, x2);
        if (t1.empty() || t2.empty()) {
            continue;
        }
        JoinResult result = join(t1, t2);
        check_join_laws(result, t1, t2);
        ++joined;
    }
    CHECK(joined > 100);
}

TEST_CASE("join output for semi-labeled inputs stays semi-labeled after normalization") {
    std::mt19937_64 rng(47);
    std::vector<Label> alphabet = {"A", "B", "C", "D", "E", "F", "G", "H"};
    std::bernoulli_distribution keep(0.7);
    for (int round = 0; round < 200; ++round) {
        ATree base = random_semilabeled_exact(rng, alphabet);
        LabelSet x1, x2;
        for (const Label& a : alphabet) {
            if (keep(rng)) {
                x1.insert(a);
            }
            if (keep(rng)) {
                x2.insert(a);
            }
        }
        ATree t1 = normalize_semilabeled(restrict_to(base, x1));
        ATree t2 = normalize_semilabeled(restrict_to(base, x2));
        if (t1.empty() || t2.empty()) {
            continue;
        }
        REQUIRE(t1.is_semilabeled());
        REQUIRE(t2.is_semilabeled());
        JoinResult result = join(t1, t2);
        check_join_laws(result, t1, t2);
        ATree norm = normalize_semilabeled(result.supertree);
        CHECK(norm.is_semilabeled());
        CHECK(ancestrally_displays(norm, t1));
        CHECK(ancestrally_displays(norm, t2));
    }
}
