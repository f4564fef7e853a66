#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "treecompat/tree.hpp"

namespace treecompat {

enum class MethodChoice { local, clusters, both };

const char* method_choice_name(MethodChoice method);

struct BatchOptions {
    MethodChoice method = MethodChoice::clusters;
    int jobs = 0;  // 0 = one per core
    bool with_timestamp = true;
};

struct PairOutcome {
    std::size_t t1 = 0;
    std::size_t t2 = 0;
    bool compatible = true;
    std::size_t certificate_count = 0;
    // Only with MethodChoice::both: the two methods returned different
    // verdicts, which indicates an internal error.
    bool disagreement = false;
};

struct BatchReport {
    std::size_t tree_count = 0;
    std::size_t pair_count = 0;
    std::size_t incompatible_count = 0;
    MethodChoice method = MethodChoice::clusters;
    std::vector<std::string> tree_names;
    std::vector<PairOutcome> pairs;  // ordered by (t1, t2)
    std::string timestamp;           // empty when suppressed
    bool any_disagreement = false;
};

// Pairwise compatibility over every unordered pair of trees. Pairs are
// checked in parallel but reported in index order, so the report does not
// depend on the number of jobs.
BatchReport run_batch(const std::vector<ATree>& trees, const std::vector<std::string>& names,
                      const BatchOptions& options);

nlohmann::ordered_json batch_report_to_json(const BatchReport& report);

std::string batch_report_summary(const BatchReport& report);

}  // namespace treecompat
