#include <random>
#include <string>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "treecompat/newick.hpp"
#include "treecompat/random.hpp"
#include "treecompat/tree.hpp"

using namespace treecompat;

namespace {

ErrorCode code_of(const std::string& text) {
    try {
        (void)parse_newick(text);
    } catch (const TreeError& e) {
        return e.code();
    }
    FAIL(("expected a TreeError for " + text));
    return ErrorCode::SyntaxError;
}

}  // namespace

TEST_CASE("parse reads labels, nesting and inner labels") {
    ATree t = parse_newick_tree("((A,B)H,E,(J,(K)G)I);");
    CHECK(t.labels() == LabelSet{"A", "B", "E", "G", "H", "I", "J", "K"});
    CHECK_FALSE(t.label(t.root()));
    CHECK(t.parent(t.node_with_label("A")) == t.node_with_label("H"));
    CHECK(t.parent(t.node_with_label("K")) == t.node_with_label("G"));
    CHECK(t.cluster_of(t.node_with_label("I")) == Cluster{"G", "I", "J", "K"});
    CHECK(t.is_semilabeled());
}

TEST_CASE("parse accepts a bare leaf and a labeled root") {
    ATree leaf = parse_newick_tree("A;");
    CHECK(leaf.node_count() == 1);
    CHECK(*leaf.label(leaf.root()) == "A");
    ATree rooted = parse_newick_tree("(A,B)C;");
    CHECK(*rooted.label(rooted.root()) == "C");
}

TEST_CASE("parse tolerates whitespace") {
    ATree t = parse_newick_tree(" ( (A , B) C ,\n D ) ;\n");
    CHECK(isomorphic(t, fixtures::tree("((A,B)C,D);")));
}

TEST_CASE("parse reads several trees from one text") {
    std::vector<ATree> trees = parse_newick("(A,B);\n(C,D)E;\n");
    REQUIRE(trees.size() == 2);
    CHECK(trees[0].labels() == LabelSet{"A", "B"});
    CHECK(trees[1].labels() == LabelSet{"C", "D", "E"});
    CHECK(parse_newick("  \n ").empty());
}

TEST_CASE("parse_newick_tree wants exactly one tree") {
    CHECK_THROWS_AS((void)parse_newick_tree(""), SyntaxError);
    CHECK_THROWS_AS((void)parse_newick_tree("(A,B); (C,D);"), SyntaxError);
}

TEST_CASE("parse rejects branch lengths, comments and quotes") {
    CHECK(code_of("(A:1.0,B);") == ErrorCode::SyntaxError);
    CHECK(code_of("(A,B):3;") == ErrorCode::SyntaxError);
    CHECK(code_of("(A,B)[note];") == ErrorCode::SyntaxError);
    CHECK(code_of("('A',B);") == ErrorCode::SyntaxError);
    CHECK(code_of("(\"A\",B);") == ErrorCode::SyntaxError);
}

TEST_CASE("parse rejects structural garbage") {
    CHECK(code_of("(A,B)") == ErrorCode::SyntaxError);
    CHECK(code_of("(A,B;") == ErrorCode::SyntaxError);
    CHECK(code_of("A,B;") == ErrorCode::SyntaxError);
    CHECK(code_of(");") == ErrorCode::UnlabeledLeaf);
    CHECK(code_of("(A,);") == ErrorCode::UnlabeledLeaf);
    CHECK(code_of("(,B);") == ErrorCode::UnlabeledLeaf);
    CHECK(code_of("();") == ErrorCode::UnlabeledLeaf);
    CHECK(code_of("(A,B);x") == ErrorCode::SyntaxError);
    CHECK(code_of("(A,A);") == ErrorCode::DuplicateLabel);
}

TEST_CASE("syntax errors carry the offending position") {
    try {
        (void)parse_newick("(A:1.0,B);");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 2);
        CHECK(e.code() == ErrorCode::SyntaxError);
    }
}

TEST_CASE("serialize orders children by their smallest cluster label") {
    CHECK(serialize_newick(fixtures::tree("(C,(B,A));")) == "((A,B),C);");
    CHECK(serialize_newick(fixtures::tree("((Z)B,(A)Y);")) == "((A)Y,(Z)B);");
    CHECK(serialize_newick(fixtures::tree(fixtures::kWideLeft)) == fixtures::kWideLeft);
    CHECK_THROWS_AS((void)serialize_newick(ATree()), TreeError);
}

TEST_CASE("serialize then parse preserves the tree") {
    std::mt19937_64 rng(23);
    RandomTreeOptions opt;
    opt.alphabet = {"A", "B", "C", "D", "E", "F", "G", "H", "I", "J"};
    for (int round = 0; round < 1000; ++round) {
        opt.semilabeled = round % 2 == 0;
        ATree t = random_tree(rng, opt);
        std::string text = serialize_newick(t);
        ATree back = parse_newick_tree(text);
        CHECK(isomorphic(t, back));
        CHECK(serialize_newick(back) == text);
    }
}
