#pragma once

#include <map>
#include <string>
#include <vector>

#include "treecompat/tree.hpp"

namespace treecompat {

enum class CertificateKind {
    // Exactly one tree has a path from the node labeled A to the node
    // labeled B. labels = {A, B}; sides["path"] names the tree with the path.
    IncompatiblePair,
    // t1 has a proper ancestor chain v(B,C) above v(A,B) while t2 has the
    // reverse chain v(A,B) above v(B,C). labels = {A, B, C} in role order.
    IncompatibleTriple,
    // The smallest cluster containing label A differs between the two trees
    // restricted to their shared labels. labels = {A}; clusters = both.
    SmallestClusterMismatch,
    // Two clusters of the restricted trees overlap without nesting.
    // clusters = {from t1, from t2}.
    ProperClusterIntersection,
};

const char* certificate_kind_name(CertificateKind kind);

struct Certificate {
    CertificateKind kind;
    std::vector<Label> labels;
    std::vector<Cluster> clusters;
    std::map<std::string, std::string> sides;
};

enum class Method { local, clusters };

const char* method_name(Method method);

struct Verdict {
    bool compatible = true;
    std::vector<Certificate> certificates;
    Method method = Method::clusters;
};

// Path-equivalence condition on every ordered pair of shared labels, reported
// in lexicographic (A, B) order.
std::vector<Certificate> check_c1(const ATree& t1, const ATree& t2);

// Opposed proper ancestor chains over triples of shared labels. Each
// unordered triple is reported at most once, for its lexicographically first
// witnessing role assignment.
std::vector<Certificate> check_c2(const ATree& t1, const ATree& t2);

// Brute-force reference test: C1 and C2 violations concatenated.
Verdict local_compatibility(const ATree& t1, const ATree& t2);

// Cluster-based test on the trees restricted to their shared labels: per
// shared label, the smallest containing cluster must agree; no two clusters
// across the trees may properly intersect. Collects all violations.
Verdict cluster_compatibility(const ATree& t1, const ATree& t2);

using EmbeddingMap = std::map<NodeId, NodeId>;

struct EmbeddingViolation {
    enum class Kind { NotInjective, LabelNotPreserved, PathNotPreserved, PathNotReflected };
    Kind kind;
    NodeId a = kNoNode;  // witnessing nodes of the source tree
    NodeId b = kNoNode;
};

const char* embedding_violation_name(EmbeddingViolation::Kind kind);

// Checks that f is a weak topological embedding of s into t: injective,
// label-preserving, and both preserving and reflecting paths. Returns every
// violated condition with a witnessing node pair; empty means valid. Throws
// DomainMismatch unless f is defined exactly on the nodes of s with targets
// in t.
std::vector<EmbeddingViolation> verify_embedding(const EmbeddingMap& f, const ATree& s,
                                                 const ATree& t);

// True iff t ancestrally displays s: t covers the labels of s, agrees with s
// on the ancestor relation over them, and the clusters of s all appear in the
// restriction of t to the labels of s.
bool ancestrally_displays(const ATree& t, const ATree& s);

class IncompatibleError : public TreeError {
public:
    explicit IncompatibleError(std::vector<Certificate> certificates)
        : TreeError(ErrorCode::Incompatible,
                    "trees are not ancestrally compatible (" +
                        std::to_string(certificates.size()) + " certificates)"),
          certificates_(std::move(certificates)) {}

    const std::vector<Certificate>& certificates() const { return certificates_; }

private:
    std::vector<Certificate> certificates_;
};

}  // namespace treecompat
