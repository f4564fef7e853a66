#pragma once

#include "treecompat/newick.hpp"
#include "treecompat/tree.hpp"

namespace fixtures {

// Small trees used across the tests, named by their shape.
inline constexpr const char* kCherryAB = "((A,B),C);";  // cherry {A,B} beside C
inline constexpr const char* kFlat3 = "(A,B,C);";
inline constexpr const char* kCherryAC = "((A,C),B);";
inline constexpr const char* kCherryBC = "(A,(B,C));";
inline constexpr const char* kRootedPair = "(A,B)C;";     // root labeled C
inline constexpr const char* kRootedStack = "((A,B))C;";  // root C over an unlabeled node
inline constexpr const char* kNestedSide = "((A)B,C);";   // B above A, C apart
inline constexpr const char* kNestedChain = "((A)B)C;";   // chain C > B > A
inline constexpr const char* kTwoLeaves = "(A,B);";
inline constexpr const char* kStackedPair = "((B)A);";  // unlabeled root, A above B

// A nine-label pair sharing {A, B, E, G}, and their join.
inline constexpr const char* kWideLeft = "(((A,B)C,D),(E,F,G));";
inline constexpr const char* kWideRight = "((A,B)H,E,((K)G,J)I);";
inline constexpr const char* kWideJoin = "((((A,B)H)C,D),(E,F,((K)G,J)I));";

inline treecompat::ATree tree(const char* newick) {
    return treecompat::parse_newick_tree(newick);
}

}  // namespace fixtures
