#pragma once

#include <string>

#include "json.hpp"
#include "treecompat/compatibility.hpp"
#include "treecompat/join.hpp"

namespace treecompat {

// Root-to-node path in canonical child order: "" is the root, "1/0" is the
// first child of the root's second child. Matches the child order used by
// serialize_newick.
std::string node_path(const ATree& t, NodeId v);

nlohmann::ordered_json certificate_to_json(const Certificate& cert);

// Schema: {"compatible": bool, "method": str, "certificates": [...]} with
// each certificate as {"kind", "labels", "clusters", "sides"}.
nlohmann::ordered_json verdict_to_json(const Verdict& verdict);

// Combined output for method "both": certificates of the local run followed
// by those of the cluster run.
nlohmann::ordered_json both_verdicts_to_json(const Verdict& local, const Verdict& clusters);

// {source node path -> target node path}, keys sorted.
nlohmann::ordered_json embedding_to_json(const EmbeddingMap& f, const ATree& s, const ATree& t);

nlohmann::ordered_json join_result_to_json(const JoinResult& result, const ATree& t1,
                                           const ATree& t2);

}  // namespace treecompat
