#include "treecompat/compatibility.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "treecompat/restriction.hpp"

namespace treecompat {

const char* certificate_kind_name(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::IncompatiblePair: return "IncompatiblePair";
        case CertificateKind::IncompatibleTriple: return "IncompatibleTriple";
        case CertificateKind::SmallestClusterMismatch: return "SmallestClusterMismatch";
        case CertificateKind::ProperClusterIntersection: return "ProperClusterIntersection";
    }
    return "UnknownCertificate";
}

const char* method_name(Method method) {
    return method == Method::local ? "local" : "clusters";
}

const char* embedding_violation_name(EmbeddingViolation::Kind kind) {
    switch (kind) {
        case EmbeddingViolation::Kind::NotInjective: return "NotInjective";
        case EmbeddingViolation::Kind::LabelNotPreserved: return "LabelNotPreserved";
        case EmbeddingViolation::Kind::PathNotPreserved: return "PathNotPreserved";
        case EmbeddingViolation::Kind::PathNotReflected: return "PathNotReflected";
    }
    return "UnknownViolation";
}

namespace {

std::vector<Label> shared_labels(const ATree& t1, const ATree& t2) {
    std::vector<Label> out;
    std::set_intersection(t1.labels().begin(), t1.labels().end(), t2.labels().begin(),
                          t2.labels().end(), std::back_inserter(out));
    return out;
}

// v(X) strictly above v(Y), i.e. a non-trivial descending path between the
// most recent common ancestors of two label pairs.
bool strictly_above(const ATree& t, const LabelSet& x, const LabelSet& y) {
    NodeId vx = t.mrca(x);
    NodeId vy = t.mrca(y);
    return vx != vy && t.has_path(vx, vy);
}

}  // namespace

std::vector<Certificate> check_c1(const ATree& t1, const ATree& t2) {
    std::vector<Certificate> out;
    std::vector<Label> shared = shared_labels(t1, t2);
    for (const Label& a : shared) {
        for (const Label& b : shared) {
            if (a == b) {
                continue;
            }
            bool p1 = t1.has_path(t1.node_with_label(a), t1.node_with_label(b));
            bool p2 = t2.has_path(t2.node_with_label(a), t2.node_with_label(b));
            if (p1 == p2) {
                continue;
            }
            Certificate cert;
            cert.kind = CertificateKind::IncompatiblePair;
            cert.labels = {a, b};
            cert.sides["path"] = p1 ? "t1" : "t2";
            out.push_back(std::move(cert));
        }
    }
    return out;
}

std::vector<Certificate> check_c2(const ATree& t1, const ATree& t2) {
    std::vector<Certificate> out;
    std::vector<Label> shared = shared_labels(t1, t2);
    std::size_t n = shared.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                // Role assignments (A, B, C) of the sorted triple, tried in
                // lexicographic order; the first violation represents the
                // whole triple.
                std::array<std::array<std::size_t, 3>, 6> roles = {{{i, j, k},
                                                                    {i, k, j},
                                                                    {j, i, k},
                                                                    {j, k, i},
                                                                    {k, i, j},
                                                                    {k, j, i}}};
                for (const auto& r : roles) {
                    const Label& a = shared[r[0]];
                    const Label& b = shared[r[1]];
                    const Label& c = shared[r[2]];
                    if (strictly_above(t1, {b, c}, {a, b}) &&
                        strictly_above(t2, {a, b}, {b, c})) {
                        Certificate cert;
                        cert.kind = CertificateKind::IncompatibleTriple;
                        cert.labels = {a, b, c};
                        cert.sides["t1"] = "v(B,C) above v(A,B)";
                        cert.sides["t2"] = "v(A,B) above v(B,C)";
                        out.push_back(std::move(cert));
                        break;
                    }
                }
            }
        }
    }
    return out;
}

Verdict local_compatibility(const ATree& t1, const ATree& t2) {
    Verdict verdict;
    verdict.method = Method::local;
    verdict.certificates = check_c1(t1, t2);
    std::vector<Certificate> triples = check_c2(t1, t2);
    verdict.certificates.insert(verdict.certificates.end(),
                                std::make_move_iterator(triples.begin()),
                                std::make_move_iterator(triples.end()));
    verdict.compatible = verdict.certificates.empty();
    return verdict;
}

namespace {

// Clusters of the restricted trees are handled as bitsets over the shared
// label universe; labels are bit-indexed in sorted order, so comparing member
// index vectors lexicographically matches comparing sorted label lists.
struct ClusterUniverse {
    std::vector<Label> labels;
    std::size_t words = 0;

    std::size_t index_of(const Label& a) const {
        return std::lower_bound(labels.begin(), labels.end(), a) - labels.begin();
    }
};

using Bits = std::vector<std::uint64_t>;

bool bits_intersect(const Bits& a, const Bits& b) {
    for (std::size_t w = 0; w < a.size(); ++w) {
        if (a[w] & b[w]) {
            return true;
        }
    }
    return false;
}

bool bits_subset(const Bits& a, const Bits& b) {
    for (std::size_t w = 0; w < a.size(); ++w) {
        if (a[w] & ~b[w]) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> bits_members(const Bits& a) {
    std::vector<std::uint32_t> out;
    for (std::size_t w = 0; w < a.size(); ++w) {
        std::uint64_t word = a[w];
        while (word) {
            int bit = __builtin_ctzll(word);
            out.push_back(static_cast<std::uint32_t>(w * 64 + bit));
            word &= word - 1;
        }
    }
    return out;
}

Cluster bits_cluster(const Bits& a, const ClusterUniverse& universe) {
    Cluster out;
    for (std::uint32_t i : bits_members(a)) {
        out.insert(universe.labels[i]);
    }
    return out;
}

// Per-node cluster bitsets, indexed by slot id.
std::vector<Bits> node_clusters(const ATree& t, const ClusterUniverse& universe) {
    std::vector<Bits> bits(t.slot_bound(), Bits(universe.words, 0));
    std::vector<NodeId> bottom_up(t.nodes());
    std::sort(bottom_up.begin(), bottom_up.end(),
              [&](NodeId a, NodeId b) { return t.depth(a) > t.depth(b); });
    for (NodeId v : bottom_up) {
        Bits& c = bits[v];
        if (t.label(v)) {
            std::size_t i = universe.index_of(*t.label(v));
            c[i / 64] |= std::uint64_t(1) << (i % 64);
        }
        for (NodeId w : t.children(v)) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                c[i] |= bits[w][i];
            }
        }
    }
    return bits;
}

// Distinct clusters sorted by their member index vectors.
std::vector<Bits> distinct_sorted(const ATree& t, const std::vector<Bits>& bits) {
    std::vector<Bits> out;
    out.reserve(t.node_count());
    for (NodeId v : t.nodes()) {
        out.push_back(bits[v]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::vector<std::pair<std::vector<std::uint32_t>, Bits>> keyed;
    keyed.reserve(out.size());
    for (Bits& b : out) {
        keyed.emplace_back(bits_members(b), std::move(b));
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        out[i] = std::move(keyed[i].second);
    }
    return out;
}

}  // namespace

Verdict cluster_compatibility(const ATree& t1, const ATree& t2) {
    Verdict verdict;
    verdict.method = Method::clusters;
    RestrictedPair pair = common_restriction_pair(t1, t2);
    if (pair.common.empty()) {
        return verdict;
    }

    ClusterUniverse universe;
    universe.labels.assign(pair.common.begin(), pair.common.end());
    universe.words = (universe.labels.size() + 63) / 64;

    std::vector<Bits> bits1 = node_clusters(pair.bar1, universe);
    std::vector<Bits> bits2 = node_clusters(pair.bar2, universe);

    for (const Label& a : universe.labels) {
        const Bits& c1 = bits1[pair.bar1.node_with_label(a)];
        const Bits& c2 = bits2[pair.bar2.node_with_label(a)];
        if (c1 == c2) {
            continue;
        }
        Certificate cert;
        cert.kind = CertificateKind::SmallestClusterMismatch;
        cert.labels = {a};
        cert.clusters = {bits_cluster(c1, universe), bits_cluster(c2, universe)};
        cert.sides["cluster1"] = "t1";
        cert.sides["cluster2"] = "t2";
        verdict.certificates.push_back(std::move(cert));
    }

    std::vector<Bits> set1 = distinct_sorted(pair.bar1, bits1);
    std::vector<Bits> set2 = distinct_sorted(pair.bar2, bits2);
    for (const Bits& x1 : set1) {
        for (const Bits& x2 : set2) {
            if (!bits_intersect(x1, x2) || bits_subset(x1, x2) || bits_subset(x2, x1)) {
                continue;
            }
            Certificate cert;
            cert.kind = CertificateKind::ProperClusterIntersection;
            cert.clusters = {bits_cluster(x1, universe), bits_cluster(x2, universe)};
            cert.sides["cluster1"] = "t1";
            cert.sides["cluster2"] = "t2";
            verdict.certificates.push_back(std::move(cert));
        }
    }

    verdict.compatible = verdict.certificates.empty();
    return verdict;
}

std::vector<EmbeddingViolation> verify_embedding(const EmbeddingMap& f, const ATree& s,
                                                 const ATree& t) {
    if (f.size() != s.node_count()) {
        throw TreeError(ErrorCode::DomainMismatch,
                        "embedding is defined on " + std::to_string(f.size()) +
                            " nodes, source tree has " + std::to_string(s.node_count()));
    }
    for (const auto& [v, w] : f) {
        if (!s.contains(v)) {
            throw TreeError(ErrorCode::DomainMismatch,
                            "embedding domain contains foreign node " + std::to_string(v));
        }
        if (!t.contains(w)) {
            throw TreeError(ErrorCode::DomainMismatch,
                            "embedding image contains foreign node " + std::to_string(w));
        }
    }

    std::vector<EmbeddingViolation> out;
    std::map<NodeId, NodeId> seen_target;
    for (const auto& [v, w] : f) {
        auto [it, inserted] = seen_target.emplace(w, v);
        if (!inserted) {
            out.push_back({EmbeddingViolation::Kind::NotInjective, it->second, v});
        }
    }
    for (NodeId v : s.nodes()) {
        if (!s.label(v)) {
            continue;
        }
        if (f.at(v) != t.node_with_label(*s.label(v))) {
            out.push_back({EmbeddingViolation::Kind::LabelNotPreserved, v, f.at(v)});
        }
    }
    for (NodeId v : s.nodes()) {
        for (NodeId c : s.children(v)) {
            if (!t.has_path(f.at(v), f.at(c))) {
                out.push_back({EmbeddingViolation::Kind::PathNotPreserved, v, c});
            }
        }
    }
    for (NodeId u : s.nodes()) {
        for (NodeId v : s.nodes()) {
            if (u == v) {
                continue;
            }
            if (t.has_path(f.at(u), f.at(v)) && !s.has_path(u, v)) {
                out.push_back({EmbeddingViolation::Kind::PathNotReflected, u, v});
            }
        }
    }
    return out;
}

bool ancestrally_displays(const ATree& t, const ATree& s) {
    if (s.empty()) {
        return true;
    }
    if (!std::includes(t.labels().begin(), t.labels().end(), s.labels().begin(),
                       s.labels().end())) {
        return false;
    }
    for (const Label& a : s.labels()) {
        for (const Label& b : s.labels()) {
            if (a == b) {
                continue;
            }
            bool ps = s.has_path(s.node_with_label(a), s.node_with_label(b));
            bool pt = t.has_path(t.node_with_label(a), t.node_with_label(b));
            if (ps != pt) {
                return false;
            }
        }
    }
    ATree t_restricted = restrict_to(t, s.labels());
    std::set<Cluster> t_clusters = t_restricted.cluster_representation().clusters;
    for (const Cluster& c : s.cluster_representation().clusters) {
        if (t_clusters.count(c) == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace treecompat
