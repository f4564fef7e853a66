#include "treecompat/reporting.hpp"

#include <algorithm>

namespace treecompat {

using nlohmann::ordered_json;

std::string node_path(const ATree& t, NodeId v) {
    std::vector<NodeId> ancestry;
    for (NodeId w = v; w != kNoNode; w = t.parent(w)) {
        ancestry.push_back(w);
    }
    std::reverse(ancestry.begin(), ancestry.end());
    std::string path;
    for (std::size_t i = 0; i + 1 < ancestry.size(); ++i) {
        std::vector<NodeId> order = canonical_child_order(t, ancestry[i]);
        std::size_t pos = std::find(order.begin(), order.end(), ancestry[i + 1]) - order.begin();
        if (!path.empty()) {
            path += '/';
        }
        path += std::to_string(pos);
    }
    return path;
}

ordered_json certificate_to_json(const Certificate& cert) {
    ordered_json out;
    out["kind"] = certificate_kind_name(cert.kind);
    out["labels"] = cert.labels;
    ordered_json clusters = ordered_json::array();
    for (const Cluster& c : cert.clusters) {
        clusters.push_back(std::vector<Label>(c.begin(), c.end()));
    }
    out["clusters"] = std::move(clusters);
    out["sides"] = cert.sides;
    return out;
}

ordered_json verdict_to_json(const Verdict& verdict) {
    ordered_json out;
    out["compatible"] = verdict.compatible;
    out["method"] = method_name(verdict.method);
    ordered_json certs = ordered_json::array();
    for (const Certificate& cert : verdict.certificates) {
        certs.push_back(certificate_to_json(cert));
    }
    out["certificates"] = std::move(certs);
    return out;
}

ordered_json both_verdicts_to_json(const Verdict& local, const Verdict& clusters) {
    ordered_json out;
    out["compatible"] = local.compatible && clusters.compatible;
    out["method"] = "both";
    ordered_json certs = ordered_json::array();
    for (const Verdict* v : {&local, &clusters}) {
        for (const Certificate& cert : v->certificates) {
            certs.push_back(certificate_to_json(cert));
        }
    }
    out["certificates"] = std::move(certs);
    return out;
}

ordered_json embedding_to_json(const EmbeddingMap& f, const ATree& s, const ATree& t) {
    std::vector<std::pair<std::string, std::string>> entries;
    entries.reserve(f.size());
    for (const auto& [v, w] : f) {
        entries.emplace_back(node_path(s, v), node_path(t, w));
    }
    std::sort(entries.begin(), entries.end());
    ordered_json out = ordered_json::object();
    for (auto& [from, to] : entries) {
        out[from] = to;
    }
    return out;
}

ordered_json join_result_to_json(const JoinResult& result, const ATree& t1, const ATree& t2) {
    ordered_json out;
    out["disjoint_label_sets"] = result.disjoint_label_sets;
    out["f1"] = embedding_to_json(result.f1, t1, result.supertree);
    out["f2"] = embedding_to_json(result.f2, t2, result.supertree);
    return out;
}

}  // namespace treecompat
