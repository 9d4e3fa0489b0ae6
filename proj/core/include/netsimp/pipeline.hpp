#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netsimp/assess.hpp"
#include "netsimp/graph.hpp"
#include "netsimp/netprops.hpp"
#include "netsimp/similarity.hpp"
#include "netsimp/simplify.hpp"

namespace netsimp {

struct DatasetSpec {
    std::string name;
    std::string path;
    bool directed = false;
    std::string type_tag;    // free-form, used for grouped variance tests
    std::string size_class;  // free-form, used for grouped variance tests
};

enum class BetweennessPolicy { Auto, Exact, Pivot };

struct RunConfig {
    std::vector<DatasetSpec> datasets;
    std::vector<Method> methods = {Method::RN, Method::RD, Method::RL,
                                   Method::BF, Method::CG, Method::BP};
    std::vector<double> s_grid = default_s_grid();
    std::vector<int> c_grid = {2, 3, 4, 5, 6};
    int repetitions = 10;
    std::uint64_t master_seed = 1;
    BetweennessPolicy betweenness_policy = BetweennessPolicy::Auto;
    std::uint32_t betweenness_pivots = 1000;
    std::size_t betweenness_exact_limit = 20000;
    double comparison_s = 0.1;
    int comparison_c = 2;
    std::string output_dir = "netsimp-out";

    static std::vector<double> default_s_grid();  // 0.01 and 0.05..0.50 step 0.05

    // canonical text of everything that shapes results (output dir excluded);
    // hashed into the manifest so stores can be traced to their config
    std::string canonical_text() const;
    std::string hash() const;
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

// Parse, default and validate a JSON config file. Unknown keys, out-of-range
// values and unreadable dataset paths are all collected into one ConfigError.
RunConfig validate_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

struct TaskKey {
    std::string network;
    Method method = Method::RN;
    double size = 0.0;  // s, box radius, or 0 for BP
    int repetition = 0;
};

// stable across runs, platforms and worker counts
std::uint64_t task_seed(std::uint64_t master_seed, const TaskKey& key);

struct TaskOutcome {
    TaskKey key;
    std::uint64_t seed = 0;
    bool failed = false;
    std::string error;
    std::size_t nodes = 0;
    std::size_t links = 0;
    RepetitionComparison comparison;
};

struct NetworkSummary {
    DatasetSpec dataset;
    std::size_t nodes = 0;
    std::size_t links = 0;
    PropertyReport original;
    std::map<GlobalProperty, std::optional<double>> original_globals;
    double original_lwcc = 0.0;
};

struct BestSizeRecord {
    std::string network;
    Method method = Method::RN;
    Assessment assessment;  // candidates are sizes, scores are mean D values
    BestSize best;
    std::string best_label;        // s value, or box radius for CG
    std::string global_min_label;
};

struct GlobalPropertyVerdict {
    GlobalProperty property = GlobalProperty::Density;
    // methods ordered by pooled correlation, best first
    std::vector<std::pair<std::string, std::optional<double>>> ordered;
};

struct ComparisonAssessments {
    double s = 0.1;
    int c = 2;
    std::vector<Assessment> per_network;         // methods ranked by local fit
    std::vector<Assessment> per_local_property;  // methods ranked across networks
    std::vector<GlobalPropertyVerdict> per_global_property;
};

struct AnovaRecord {
    std::string label;  // e.g. "best_size[RD] by type"
    std::vector<std::string> group_names;
    std::optional<AnovaResult> result;
    std::string note;  // why the test was skipped, when it was
};

struct ResultStore {
    RunConfig config;
    std::string config_hash;
    std::vector<NetworkSummary> networks;
    std::vector<TaskOutcome> tasks;
    std::vector<SimilarityRecord> similarity;
    std::vector<GlobalCorrelation> correlations;
    std::vector<BestSizeRecord> best_sizes;           // stage 1, local properties
    std::vector<Assessment> global_size_assessments;  // stage 1, pooled correlations
    std::optional<ComparisonAssessments> comparison;  // stage 2
    std::string comparison_error;
    std::vector<AnovaRecord> anova;
    bool partial_failure = false;
};

// Full grid: per network the original properties, then one simplification,
// property report and distance set per (method, size, repetition), then the
// aggregation and both assessment stages. Tasks run in parallel on `jobs`
// workers (0 = hardware concurrency); results are identical for any value.
ResultStore run_experiment(const RunConfig& config, unsigned jobs = 0);

// Stage-2 method comparison over aggregated records at one configuration:
// sampling methods enter at size s, cluster-growing at box radius c,
// community merging at its single configuration. Throws when a method has no
// record at the requested size.
ComparisonAssessments comparison_stage(std::span<const SimilarityRecord> records,
                                       std::span<const Method> methods, double s, int c);

// Write manifest.json, similarity.csv, correlations.csv, assessments.json,
// verdicts.csv, plotdata/*.csv and ranktables/*.csv under dir. Byte-stable
// for a given store.
void emit_reports(const ResultStore& store, const std::string& dir);

// Re-ingest an emitted similarity.csv (used by the assess subcommand).
std::vector<SimilarityRecord> load_similarity_csv(const std::string& path);

}  // namespace netsimp
