// Timing harness: the cluster method against the brute-force local method,
// and the all-pairs batch with one worker against all cores.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "treecompat/batch.hpp"
#include "treecompat/compatibility.hpp"
#include "treecompat/random.hpp"
#include "treecompat/tree.hpp"

using namespace treecompat;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main() {
    std::mt19937_64 rng(2026);

    {
        std::vector<Label> labels = numbered_labels(2000);
        ATree t1 = random_semilabeled_exact(rng, labels);
        ATree t2 = random_semilabeled_exact(rng, labels);
        Clock::time_point start = Clock::now();
        Verdict v = cluster_compatibility(t1, t2);
        std::printf("clusters, 2000 labels:        %8.3f s (%s, %zu certificates)\n",
                    seconds_since(start), v.compatible ? "compatible" : "incompatible",
                    v.certificates.size());
    }

    {
        std::vector<Label> labels = numbered_labels(60);
        ATree t1 = random_semilabeled_exact(rng, labels);
        ATree t2 = random_semilabeled_exact(rng, labels);
        Clock::time_point start = Clock::now();
        Verdict local = local_compatibility(t1, t2);
        double local_time = seconds_since(start);
        start = Clock::now();
        Verdict clusters = cluster_compatibility(t1, t2);
        double cluster_time = seconds_since(start);
        std::printf("local,    60 labels:          %8.3f s\n", local_time);
        std::printf("clusters, 60 labels:          %8.3f s (verdicts %s)\n", cluster_time,
                    local.compatible == clusters.compatible ? "agree" : "DISAGREE");
    }

    {
        RandomTreeOptions opt;
        opt.alphabet = numbered_labels(40);
        opt.max_leaves = 20;
        opt.semilabeled = true;
        std::vector<ATree> corpus;
        std::vector<std::string> names;
        for (int i = 0; i < 120; ++i) {
            corpus.push_back(random_tree(rng, opt));
            names.push_back("tree" + std::to_string(i));
        }
        BatchOptions serial;
        serial.jobs = 1;
        serial.with_timestamp = false;
        BatchOptions parallel = serial;
        parallel.jobs = 0;

        Clock::time_point start = Clock::now();
        BatchReport a = run_batch(corpus, names, serial);
        double serial_time = seconds_since(start);
        start = Clock::now();
        BatchReport b = run_batch(corpus, names, parallel);
        double parallel_time = seconds_since(start);
        std::printf("batch %zu pairs, 1 job:       %8.3f s\n", a.pair_count, serial_time);
        std::printf("batch %zu pairs, all cores:   %8.3f s (%zu incompatible in both: %s)\n",
                    b.pair_count, parallel_time, b.incompatible_count,
                    a.incompatible_count == b.incompatible_count ? "match" : "MISMATCH");
    }
    return 0;
}
