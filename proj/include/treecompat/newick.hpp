#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "treecompat/tree.hpp"

namespace treecompat {

// Parses a document of ;-terminated Newick expressions, one tree each.
// Supported dialect: labels are bare tokens matching [A-Za-z0-9_.|-]+, inner
// nodes may carry a label after the closing parenthesis, whitespace between
// tokens (including LF/CRLF line breaks) is ignored. Branch lengths, quoted
// labels and comments are rejected with a SyntaxError naming the feature.
std::vector<ATree> parse_newick(std::string_view text);

// Parses a document that must contain exactly one tree.
ATree parse_newick_tree(std::string_view text);

// Canonical serialization: children are emitted in canonical_child_order, so
// isomorphic trees serialize identically. Throws EmptyTree for empty input.
std::string serialize_newick(const ATree& t);

}  // namespace treecompat
