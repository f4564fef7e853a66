#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "treecompat/batch.hpp"
#include "treecompat/compatibility.hpp"
#include "treecompat/join.hpp"
#include "treecompat/newick.hpp"
#include "treecompat/reporting.hpp"
#include "treecompat/restriction.hpp"
#include "treecompat/tree.hpp"

namespace {

namespace fs = std::filesystem;
using namespace treecompat;

constexpr int kExitCompatible = 0;
constexpr int kExitIncompatible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot write " + path);
    }
    out << content;
}

ATree read_single_tree(const std::string& path) {
    try {
        return parse_newick_tree(read_file(path));
    } catch (const TreeError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

MethodChoice parse_method(const std::string& name) {
    if (name == "local") {
        return MethodChoice::local;
    }
    if (name == "clusters") {
        return MethodChoice::clusters;
    }
    return MethodChoice::both;
}

int run_check(const std::string& file1, const std::string& file2, const std::string& method,
              const std::string& certificate_path) {
    ATree t1 = read_single_tree(file1);
    ATree t2 = read_single_tree(file2);

    nlohmann::ordered_json report;
    bool compatible = false;
    bool disagreement = false;
    switch (parse_method(method)) {
        case MethodChoice::local: {
            Verdict v = local_compatibility(t1, t2);
            compatible = v.compatible;
            report = verdict_to_json(v);
            break;
        }
        case MethodChoice::clusters: {
            Verdict v = cluster_compatibility(t1, t2);
            compatible = v.compatible;
            report = verdict_to_json(v);
            break;
        }
        case MethodChoice::both: {
            Verdict l = local_compatibility(t1, t2);
            Verdict c = cluster_compatibility(t1, t2);
            disagreement = l.compatible != c.compatible;
            compatible = c.compatible;
            report = both_verdicts_to_json(l, c);
            break;
        }
    }

    if (!certificate_path.empty()) {
        write_file(certificate_path, report.dump(2) + "\n");
    }
    if (disagreement) {
        std::cerr << "internal error: local and cluster methods disagree on " << file1 << " vs "
                  << file2 << "\n";
        return kExitInternal;
    }
    std::cout << (compatible ? "compatible" : "incompatible") << "\n";
    return compatible ? kExitCompatible : kExitIncompatible;
}

int run_join(const std::string& file1, const std::string& file2, const std::string& out_path) {
    ATree t1 = read_single_tree(file1);
    ATree t2 = read_single_tree(file2);

    JoinResult result;
    try {
        result = join(t1, t2);
    } catch (const IncompatibleError& e) {
        Verdict verdict;
        verdict.compatible = false;
        verdict.certificates = e.certificates();
        std::cout << verdict_to_json(verdict).dump(2) << "\n";
        return kExitIncompatible;
    }

    if (!verify_embedding(result.f1, t1, result.supertree).empty() ||
        !verify_embedding(result.f2, t2, result.supertree).empty()) {
        std::cerr << "internal error: join produced an invalid embedding\n";
        return kExitInternal;
    }

    std::string newick = serialize_newick(result.supertree);
    write_file(out_path, newick + "\n");
    write_file(out_path + ".embeddings.json",
               join_result_to_json(result, t1, t2).dump(2) + "\n");
    std::cout << newick << "\n";
    return kExitCompatible;
}

int run_clusters(const std::string& file) {
    ATree t = read_single_tree(file);
    ClusterRepresentation rep = t.cluster_representation();
    std::vector<Cluster> order(rep.clusters.begin(), rep.clusters.end());
    std::sort(order.begin(), order.end(), [](const Cluster& a, const Cluster& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    });
    for (const Cluster& c : order) {
        std::string line = "{";
        for (const Label& a : c) {
            if (line.size() > 1) {
                line += ',';
            }
            line += a;
        }
        line += "} " + std::to_string(rep.multiplicity.at(c));
        std::cout << line << "\n";
    }
    return kExitCompatible;
}

// Files are read as given; directories contribute their *.nwk entries in
// name order, without recursion.
std::vector<std::string> collect_corpus(const std::vector<std::string>& paths) {
    std::vector<std::string> files;
    for (const std::string& path : paths) {
        if (fs::is_directory(path)) {
            std::vector<std::string> entries;
            for (const auto& entry : fs::directory_iterator(path)) {
                if (entry.is_regular_file() && entry.path().extension() == ".nwk") {
                    entries.push_back(entry.path().string());
                }
            }
            std::sort(entries.begin(), entries.end());
            files.insert(files.end(), entries.begin(), entries.end());
        } else {
            files.push_back(path);
        }
    }
    return files;
}

int run_batch_command(const std::vector<std::string>& paths, const std::string& method,
                      const std::string& report_path, bool skip_bad, int jobs,
                      bool no_timestamp) {
    std::vector<ATree> trees;
    std::vector<std::string> names;
    for (const std::string& file : collect_corpus(paths)) {
        std::vector<ATree> parsed;
        try {
            parsed = parse_newick(read_file(file));
            if (parsed.empty()) {
                throw TreeError(ErrorCode::EmptyTree, "no tree found");
            }
        } catch (const TreeError& e) {
            if (skip_bad) {
                std::cerr << "warning: skipping " << file << ": " << e.what() << "\n";
                continue;
            }
            throw UsageError(file + ": " + e.what());
        }
        for (std::size_t i = 0; i < parsed.size(); ++i) {
            trees.push_back(std::move(parsed[i]));
            names.push_back(parsed.size() == 1 ? file : file + "#" + std::to_string(i));
        }
    }
    if (trees.size() < 2) {
        throw UsageError("batch needs at least two trees, found " +
                         std::to_string(trees.size()));
    }

    BatchOptions options;
    options.method = parse_method(method);
    options.jobs = jobs;
    options.with_timestamp = !no_timestamp;
    BatchReport report = run_batch(trees, names, options);

    if (!report_path.empty()) {
        write_file(report_path, batch_report_to_json(report).dump(2) + "\n");
    }
    std::cout << batch_report_summary(report);
    if (report.any_disagreement) {
        std::cerr << "internal error: local and cluster methods disagree on at least one pair\n";
        return kExitInternal;
    }
    return kExitCompatible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ancestral compatibility of rooted trees with nested taxa"};
    app.require_subcommand(1);

    std::string file1;
    std::string file2;
    std::string method = "clusters";
    std::string certificate_path;
    std::string out_path;
    std::string report_path;
    std::vector<std::string> batch_paths;
    bool skip_bad = false;
    bool no_timestamp = false;
    int jobs = 0;

    CLI::App* check = app.add_subcommand(
        "check", "Decide whether two trees are ancestrally compatible");
    check->add_option("t1", file1, "Newick file with one tree")->required();
    check->add_option("t2", file2, "Newick file with one tree")->required();
    check->add_option("--method", method, "local, clusters or both")
        ->check(CLI::IsMember({"local", "clusters", "both"}))
        ->capture_default_str();
    check->add_option("--certificate", certificate_path, "write the verdict JSON here");

    CLI::App* join_cmd =
        app.add_subcommand("join", "Build a common supertree of two compatible trees");
    join_cmd->add_option("t1", file1, "Newick file with one tree")->required();
    join_cmd->add_option("t2", file2, "Newick file with one tree")->required();
    join_cmd->add_option("--out", out_path, "output Newick file")->required();

    CLI::App* clusters_cmd =
        app.add_subcommand("clusters", "List the clusters of a tree with multiplicities");
    clusters_cmd->add_option("t", file1, "Newick file with one tree")->required();

    CLI::App* batch_cmd = app.add_subcommand(
        "batch", "Check all unordered pairs of a tree corpus");
    batch_cmd->add_option("paths", batch_paths, "Newick files or directories of .nwk files")
        ->required();
    batch_cmd->add_option("--method", method, "local, clusters or both")
        ->check(CLI::IsMember({"local", "clusters", "both"}))
        ->capture_default_str();
    batch_cmd->add_option("--report", report_path, "write the report JSON here");
    batch_cmd->add_flag("--skip-bad", skip_bad, "warn about unparseable files instead of failing");
    batch_cmd->add_option("--jobs", jobs, "number of worker threads (0 = one per core)");
    batch_cmd->add_flag("--no-timestamp", no_timestamp, "omit the timestamp from the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(check)) {
            return run_check(file1, file2, method, certificate_path);
        }
        if (app.got_subcommand(join_cmd)) {
            return run_join(file1, file2, out_path);
        }
        if (app.got_subcommand(clusters_cmd)) {
            return run_clusters(file1);
        }
        if (app.got_subcommand(batch_cmd)) {
            return run_batch_command(batch_paths, method, report_path, skip_bad, jobs,
                                     no_timestamp);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TreeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
