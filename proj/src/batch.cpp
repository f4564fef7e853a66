#include "treecompat/batch.hpp"

#include <cstdio>
#include <ctime>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "treecompat/compatibility.hpp"

namespace treecompat {

const char* method_choice_name(MethodChoice method) {
    switch (method) {
        case MethodChoice::local: return "local";
        case MethodChoice::clusters: return "clusters";
        case MethodChoice::both: return "both";
    }
    return "unknown";
}

namespace {

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm parts{};
    gmtime_r(&now, &parts);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &parts);
    return buffer;
}

PairOutcome check_pair(const ATree& a, const ATree& b, MethodChoice method) {
    PairOutcome outcome;
    switch (method) {
        case MethodChoice::local: {
            Verdict v = local_compatibility(a, b);
            outcome.compatible = v.compatible;
            outcome.certificate_count = v.certificates.size();
            break;
        }
        case MethodChoice::clusters: {
            Verdict v = cluster_compatibility(a, b);
            outcome.compatible = v.compatible;
            outcome.certificate_count = v.certificates.size();
            break;
        }
        case MethodChoice::both: {
            Verdict l = local_compatibility(a, b);
            Verdict c = cluster_compatibility(a, b);
            outcome.compatible = c.compatible;
            outcome.certificate_count = c.certificates.size();
            outcome.disagreement = l.compatible != c.compatible;
            break;
        }
    }
    return outcome;
}

}  // namespace

BatchReport run_batch(const std::vector<ATree>& trees, const std::vector<std::string>& names,
                      const BatchOptions& options) {
    BatchReport report;
    report.method = options.method;
    report.tree_count = trees.size();
    report.tree_names = names;
    if (options.with_timestamp) {
        report.timestamp = utc_timestamp();
    }

    std::vector<std::pair<std::size_t, std::size_t>> index;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (std::size_t j = i + 1; j < trees.size(); ++j) {
            index.emplace_back(i, j);
        }
    }
    report.pair_count = index.size();
    report.pairs.resize(index.size());

#ifdef _OPENMP
    int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(index.size()); ++p) {
        auto [i, j] = index[p];
        PairOutcome outcome = check_pair(trees[i], trees[j], options.method);
        outcome.t1 = i;
        outcome.t2 = j;
        report.pairs[p] = outcome;
    }

    for (const PairOutcome& outcome : report.pairs) {
        if (!outcome.compatible) {
            ++report.incompatible_count;
        }
        if (outcome.disagreement) {
            report.any_disagreement = true;
        }
    }
    return report;
}

nlohmann::ordered_json batch_report_to_json(const BatchReport& report) {
    nlohmann::ordered_json out;
    out["tree_count"] = report.tree_count;
    out["pair_count"] = report.pair_count;
    out["incompatible_count"] = report.incompatible_count;
    out["incompatibility_ratio"] =
        report.pair_count == 0
            ? 0.0
            : static_cast<double>(report.incompatible_count) / report.pair_count;
    out["method"] = method_choice_name(report.method);
    if (!report.timestamp.empty()) {
        out["timestamp"] = report.timestamp;
    }
    out["trees"] = report.tree_names;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (const PairOutcome& outcome : report.pairs) {
        nlohmann::ordered_json entry;
        entry["t1"] = outcome.t1;
        entry["t2"] = outcome.t2;
        entry["compatible"] = outcome.compatible;
        entry["certificates"] = outcome.certificate_count;
        if (outcome.disagreement) {
            entry["disagreement"] = true;
        }
        pairs.push_back(std::move(entry));
    }
    out["pairs"] = std::move(pairs);
    return out;
}

std::string batch_report_summary(const BatchReport& report) {
    char ratio[32];
    double percent = report.pair_count == 0
                         ? 0.0
                         : 100.0 * static_cast<double>(report.incompatible_count) /
                               static_cast<double>(report.pair_count);
    std::snprintf(ratio, sizeof(ratio), "%.4f%%", percent);
    std::string out;
    out += "trees:        " + std::to_string(report.tree_count) + "\n";
    out += "pairs:        " + std::to_string(report.pair_count) + "\n";
    out += "incompatible: " + std::to_string(report.incompatible_count) + " (" + ratio + ")\n";
    out += "method:       " + std::string(method_choice_name(report.method)) + "\n";
    if (report.any_disagreement) {
        out += "WARNING: the two methods disagreed on at least one pair\n";
    }
    return out;
}

}  // namespace treecompat
