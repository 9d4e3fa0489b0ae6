#include "netsimp/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "netsimp/format.hpp"
#include "netsimp/graph_io.hpp"
#include "netsimp/rng.hpp"

namespace netsimp {

std::vector<double> RunConfig::default_s_grid() {
    std::vector<double> grid = {0.01};
    for (int i = 1; i <= 10; ++i) grid.push_back(0.05 * i);
    return grid;
}

std::string RunConfig::canonical_text() const {
    std::ostringstream out;
    out << "datasets:";
    for (const auto& d : datasets)
        out << '(' << d.name << '|' << d.path << '|' << (d.directed ? 'd' : 'u') << '|'
            << d.type_tag << '|' << d.size_class << ')';
    out << ";methods:";
    for (Method m : methods) out << method_name(m) << ',';
    out << ";s:";
    for (double s : s_grid) out << format_double(s) << ',';
    out << ";c:";
    for (int c : c_grid) out << c << ',';
    out << ";reps:" << repetitions << ";seed:" << master_seed;
    out << ";betweenness:" << static_cast<int>(betweenness_policy) << ',' << betweenness_pivots
        << ',' << betweenness_exact_limit;
    out << ";comparison:" << format_double(comparison_s) << ',' << comparison_c;
    return out.str();
}

std::string RunConfig::hash() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(stable_hash64(canonical_text())));
    return buf;
}

ConfigError::ConfigError(std::vector<std::string> issues)
    : std::runtime_error([&] {
          std::string out = "invalid config:";
          for (const auto& issue : issues) out += "\n  - " + issue;
          return out;
      }()),
      issues_(std::move(issues)) {}

namespace {

using nlohmann::json;

void check_known_keys(const json& object, std::initializer_list<const char*> known,
                      const std::string& where, std::vector<std::string>& issues) {
    for (const auto& [key, unused] : object.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) issues.push_back(where + ": unknown key '" + key + "'");
    }
}

RunConfig parse_config_json(const json& root) {
    std::vector<std::string> issues;
    if (!root.is_object()) throw ConfigError({"top level must be a JSON object"});
    check_known_keys(root,
                     {"datasets", "methods", "s_grid", "c_grid", "repetitions", "master_seed",
                      "betweenness", "comparison", "output_dir"},
                     "config", issues);

    RunConfig config;
    if (!root.contains("datasets") || !root["datasets"].is_array() || root["datasets"].empty()) {
        issues.push_back("datasets: at least one entry required");
    } else {
        for (const auto& entry : root["datasets"]) {
            if (!entry.is_object()) {
                issues.push_back("datasets: entries must be objects");
                continue;
            }
            check_known_keys(entry, {"name", "path", "directed", "type", "size_class"},
                             "dataset", issues);
            DatasetSpec spec;
            spec.name = entry.value("name", "");
            spec.path = entry.value("path", "");
            spec.directed = entry.value("directed", false);
            spec.type_tag = entry.value("type", "");
            spec.size_class = entry.value("size_class", "");
            if (spec.name.empty()) issues.push_back("dataset: name required");
            if (spec.path.empty())
                issues.push_back("dataset '" + spec.name + "': path required");
            config.datasets.push_back(std::move(spec));
        }
        for (std::size_t i = 0; i < config.datasets.size(); ++i)
            for (std::size_t j = i + 1; j < config.datasets.size(); ++j)
                if (config.datasets[i].name == config.datasets[j].name)
                    issues.push_back("duplicate dataset name '" + config.datasets[i].name + "'");
    }

    if (root.contains("methods")) {
        config.methods.clear();
        for (const auto& entry : root["methods"]) {
            auto method = entry.is_string() ? method_from_name(entry.get<std::string>())
                                            : std::nullopt;
            if (!method)
                issues.push_back("methods: unknown method '" + entry.dump() + "'");
            else
                config.methods.push_back(*method);
        }
        if (config.methods.empty()) issues.push_back("methods: list must not be empty");
    }

    if (root.contains("s_grid")) {
        config.s_grid.clear();
        for (const auto& entry : root["s_grid"]) {
            double s = entry.is_number() ? entry.get<double>() : -1.0;
            if (!(s > 0.0) || s > 1.0)
                issues.push_back("s_grid: values must be in (0,1], got " + entry.dump());
            else
                config.s_grid.push_back(s);
        }
        std::sort(config.s_grid.begin(), config.s_grid.end());
        config.s_grid.erase(std::unique(config.s_grid.begin(), config.s_grid.end()),
                            config.s_grid.end());
        if (config.s_grid.empty()) issues.push_back("s_grid: must not be empty");
    }

    if (root.contains("c_grid")) {
        config.c_grid.clear();
        for (const auto& entry : root["c_grid"]) {
            int c = entry.is_number_integer() ? entry.get<int>() : -1;
            if (c < 1)
                issues.push_back("c_grid: values must be integers >= 1, got " + entry.dump());
            else
                config.c_grid.push_back(c);
        }
        std::sort(config.c_grid.begin(), config.c_grid.end());
        config.c_grid.erase(std::unique(config.c_grid.begin(), config.c_grid.end()),
                            config.c_grid.end());
        if (config.c_grid.empty()) issues.push_back("c_grid: must not be empty");
    }

    if (root.contains("repetitions")) {
        config.repetitions = root["repetitions"].is_number_integer()
                                 ? root["repetitions"].get<int>()
                                 : 0;
        if (config.repetitions < 1) issues.push_back("repetitions: must be >= 1");
    }
    if (root.contains("master_seed")) {
        if (!root["master_seed"].is_number_unsigned() && !root["master_seed"].is_number_integer())
            issues.push_back("master_seed: must be an integer");
        else
            config.master_seed = root["master_seed"].get<std::uint64_t>();
    }

    if (root.contains("betweenness")) {
        const auto& b = root["betweenness"];
        check_known_keys(b, {"mode", "pivots", "exact_limit"}, "betweenness", issues);
        std::string mode = b.value("mode", "auto");
        if (mode == "auto")
            config.betweenness_policy = BetweennessPolicy::Auto;
        else if (mode == "exact")
            config.betweenness_policy = BetweennessPolicy::Exact;
        else if (mode == "pivot")
            config.betweenness_policy = BetweennessPolicy::Pivot;
        else
            issues.push_back("betweenness.mode: expected auto, exact or pivot");
        if (b.contains("pivots")) {
            int pivots = b["pivots"].is_number_integer() ? b["pivots"].get<int>() : 0;
            if (pivots < 1)
                issues.push_back("betweenness.pivots: must be >= 1");
            else
                config.betweenness_pivots = static_cast<std::uint32_t>(pivots);
        }
        if (b.contains("exact_limit")) {
            long long limit =
                b["exact_limit"].is_number_integer() ? b["exact_limit"].get<long long>() : -1;
            if (limit < 0)
                issues.push_back("betweenness.exact_limit: must be >= 0");
            else
                config.betweenness_exact_limit = static_cast<std::size_t>(limit);
        }
    }

    if (root.contains("comparison")) {
        const auto& c = root["comparison"];
        check_known_keys(c, {"s", "c"}, "comparison", issues);
        if (c.contains("s")) config.comparison_s = c["s"].is_number() ? c["s"].get<double>() : 0.0;
        if (c.contains("c"))
            config.comparison_c = c["c"].is_number_integer() ? c["c"].get<int>() : 0;
    }
    if (root.contains("output_dir")) config.output_dir = root["output_dir"].get<std::string>();

    bool has_sampling = false, has_cg = false;
    for (Method m : config.methods) {
        has_sampling = has_sampling || is_sampling(m);
        has_cg = has_cg || m == Method::CG;
    }
    if (has_sampling &&
        std::none_of(config.s_grid.begin(), config.s_grid.end(),
                     [&](double s) { return s == config.comparison_s; }))
        issues.push_back("comparison.s must be a member of s_grid");
    if (has_cg && std::none_of(config.c_grid.begin(), config.c_grid.end(),
                               [&](int c) { return c == config.comparison_c; }))
        issues.push_back("comparison.c must be a member of c_grid");

    for (const auto& dataset : config.datasets) {
        if (dataset.path.empty()) continue;
        std::ifstream probe(dataset.path);
        if (!probe) issues.push_back("dataset '" + dataset.name + "': cannot read " + dataset.path);
    }

    if (!issues.empty()) throw ConfigError(std::move(issues));
    return config;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError({std::string("JSON parse failure: ") + e.what()});
    }
    return parse_config_json(root);
}

RunConfig validate_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open config file: " + path});
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::uint64_t task_seed(std::uint64_t master_seed, const TaskKey& key) {
    std::string descriptor = std::string("net=") + key.network + "|method=" +
                             method_name(key.method) + "|size=" + format_double(key.size) +
                             "|rep=" + std::to_string(key.repetition);
    return hash_combine(master_seed, stable_hash64(descriptor));
}

namespace {

BetweennessOptions betweenness_options(const RunConfig& config, std::size_t n,
                                       std::uint64_t seed, unsigned threads) {
    BetweennessOptions options;
    options.threads = threads;
    options.seed = seed;
    const bool pivot = config.betweenness_policy == BetweennessPolicy::Pivot ||
                       (config.betweenness_policy == BetweennessPolicy::Auto &&
                        n > config.betweenness_exact_limit);
    if (pivot && config.betweenness_pivots < n) options.pivots = config.betweenness_pivots;
    return options;
}

std::map<GlobalProperty, std::optional<double>> global_map(const PropertyReport& report) {
    return {{GlobalProperty::Density, report.density},
            {GlobalProperty::DegreeMixing, report.degree_mixing},
            {GlobalProperty::Transitivity, report.transitivity}};
}

std::map<LocalProperty, const std::vector<double>*> local_map(const PropertyReport& report) {
    std::map<LocalProperty, const std::vector<double>*> out;
    out[LocalProperty::Degree] = &report.degree;
    if (report.in_degree) out[LocalProperty::InDegree] = &*report.in_degree;
    if (report.out_degree) out[LocalProperty::OutDegree] = &*report.out_degree;
    out[LocalProperty::Clustering] = &report.clustering;
    out[LocalProperty::Betweenness] = &report.betweenness;
    return out;
}

SimplifiedNetwork run_method(const Graph& g, Method method, double size, std::uint64_t seed) {
    if (is_sampling(method)) {
        SampleSpec spec;
        spec.method = method;
        spec.s = size;
        spec.seed = seed;
        switch (method) {
            case Method::RN: return sample_rn(g, spec);
            case Method::RD: return sample_rd(g, spec);
            case Method::RL: return sample_rl(g, spec);
            default: return sample_bf(g, spec);
        }
    }
    MergeSpec spec;
    spec.method = method;
    spec.seed = seed;
    if (method == Method::CG) {
        spec.box_radius = static_cast<int>(size);
        return merge_cg(g, spec);
    }
    return merge_bp(g, spec);
}

std::vector<double> method_sizes(const RunConfig& config, Method method) {
    if (is_sampling(method)) return config.s_grid;
    if (method == Method::CG) {
        std::vector<double> sizes;
        for (int c : config.c_grid) sizes.push_back(c);
        return sizes;
    }
    return {0.0};  // single configuration
}

double comparison_size_key(Method method, double s, int c) {
    if (is_sampling(method)) return s;
    if (method == Method::CG) return c;
    return 0.0;
}

bool size_matches(double a, double b) { return std::abs(a - b) <= 1e-12; }

// larger simplified networks sort later: s ascending, box radius descending
double size_axis(Method method, double size) {
    return method == Method::CG ? 1.0 / size : size;
}

std::string size_label(Method method, double size) {
    if (method == Method::CG) return std::to_string(static_cast<int>(size));
    return format_double(size);
}

struct GroupedValues {
    std::vector<std::string> names;
    std::vector<std::vector<double>> groups;
};

GroupedValues group_by_tag(std::span<const std::pair<std::string, double>> tagged) {
    GroupedValues out;
    for (const auto& [tag, value] : tagged) {
        auto it = std::find(out.names.begin(), out.names.end(), tag);
        if (it == out.names.end()) {
            out.names.push_back(tag);
            out.groups.emplace_back();
            it = out.names.end() - 1;
        }
        out.groups[static_cast<std::size_t>(it - out.names.begin())].push_back(value);
    }
    return out;
}

AnovaRecord grouped_anova(const std::string& label,
                          std::span<const std::pair<std::string, double>> tagged) {
    AnovaRecord record;
    record.label = label;
    auto grouped = group_by_tag(tagged);
    record.group_names = grouped.names;
    std::size_t total = 0;
    for (const auto& g : grouped.groups) total += g.size();
    if (grouped.groups.size() < 2) {
        record.note = "needs at least two groups";
        return record;
    }
    if (total <= grouped.groups.size()) {
        record.note = "needs more values than groups";
        return record;
    }
    record.result = one_way_anova(grouped.groups);
    if (!record.result) record.note = "zero within-group variance";
    return record;
}

}  // namespace

ComparisonAssessments comparison_stage(std::span<const SimilarityRecord> records,
                                       std::span<const Method> methods, double s, int c) {
    ComparisonAssessments out;
    out.s = s;
    out.c = c;

    std::vector<Method> unique_methods;
    for (Method m : methods)
        if (std::find(unique_methods.begin(), unique_methods.end(), m) == unique_methods.end())
            unique_methods.push_back(m);

    std::vector<std::string> networks;
    for (const auto& record : records)
        if (std::find(networks.begin(), networks.end(), record.network) == networks.end())
            networks.push_back(record.network);
    if (networks.empty()) throw std::invalid_argument("comparison_stage: no records");

    auto find_record = [&](const std::string& network, Method method) {
        const double key = comparison_size_key(method, s, c);
        for (const auto& record : records)
            if (record.network == network && record.method == method &&
                size_matches(record.size, key))
                return &record;
        throw std::runtime_error(std::string("comparison_stage: no record for method ") +
                                 method_name(method) + " at size " + format_double(key) +
                                 " (network " + network + ")");
    };

    // per network: rank methods over the local properties every method reports
    for (const auto& network : networks) {
        std::vector<const SimilarityRecord*> cells;
        for (Method m : unique_methods) cells.push_back(find_record(network, m));
        std::vector<LocalProperty> shared;
        for (LocalProperty p : kLocalProperties) {
            bool everywhere = true;
            for (const auto* cell : cells) everywhere = everywhere && cell->mean_d.count(p) > 0;
            if (everywhere) shared.push_back(p);
        }
        if (shared.empty() || unique_methods.size() < 2) continue;

        std::vector<std::string> candidates;
        for (Method m : unique_methods) candidates.push_back(method_name(m));
        std::vector<std::string> property_names;
        for (LocalProperty p : shared) property_names.push_back(property_name(p));
        std::vector<std::vector<std::optional<double>>> scores;
        for (const auto* cell : cells) {
            std::vector<std::optional<double>> row;
            for (LocalProperty p : shared) row.emplace_back(cell->mean_d.at(p));
            scores.push_back(std::move(row));
        }
        std::vector<Orientation> orientations(shared.size(), Orientation::LowerIsBetter);
        Assessment assessment =
            assess("methods local network=" + network, candidates, property_names, scores,
                   orientations);
        std::vector<std::pair<std::string, double>> method_scores;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            method_scores.emplace_back(candidates[i], assessment.a[i]);
        assessment.verdicts = rank_methods(method_scores);
        out.per_network.push_back(std::move(assessment));
    }

    // per local property: rank methods across networks
    for (LocalProperty property : kLocalProperties) {
        std::vector<Method> carriers;
        for (Method m : unique_methods) {
            bool everywhere = true;
            for (const auto& network : networks)
                everywhere = everywhere && find_record(network, m)->mean_d.count(property) > 0;
            if (everywhere) carriers.push_back(m);
        }
        if (carriers.size() < 2) continue;
        std::vector<std::string> candidates;
        for (Method m : carriers) candidates.push_back(method_name(m));
        std::vector<std::vector<std::optional<double>>> scores;
        for (Method m : carriers) {
            std::vector<std::optional<double>> row;
            for (const auto& network : networks)
                row.emplace_back(find_record(network, m)->mean_d.at(property));
            scores.push_back(std::move(row));
        }
        std::vector<Orientation> orientations(networks.size(), Orientation::LowerIsBetter);
        Assessment assessment = assess(std::string("methods ") + property_name(property),
                                       candidates, networks, scores, orientations);
        std::vector<std::pair<std::string, double>> method_scores;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            method_scores.emplace_back(candidates[i], assessment.a[i]);
        assessment.verdicts = rank_methods(method_scores);
        out.per_local_property.push_back(std::move(assessment));
    }

    // per global property: order methods by pooled rank correlation
    for (GlobalProperty property : kGlobalProperties) {
        GlobalPropertyVerdict verdict;
        verdict.property = property;
        for (Method m : unique_methods) {
            const double key = comparison_size_key(m, s, c);
            auto correlation = pooled_correlation(m, key, property, records);
            verdict.ordered.emplace_back(method_name(m), correlation.rho);
        }
        std::stable_sort(verdict.ordered.begin(), verdict.ordered.end(),
                         [](const auto& a, const auto& b) {
                             if (a.second.has_value() != b.second.has_value())
                                 return a.second.has_value();
                             if (!a.second) return false;
                             return *a.second > *b.second;
                         });
        out.per_global_property.push_back(std::move(verdict));
    }
    return out;
}

ResultStore run_experiment(const RunConfig& config, unsigned jobs) {
    ResultStore store;
    store.config = config;
    store.config_hash = config.hash();

    // fail fast: every dataset must load before any work starts
    std::vector<Graph> originals;
    originals.reserve(config.datasets.size());
    for (const auto& dataset : config.datasets)
        originals.push_back(load_edge_list_file(dataset.path, dataset.directed));

    for (std::size_t i = 0; i < config.datasets.size(); ++i) {
        const auto& dataset = config.datasets[i];
        NetworkSummary summary;
        summary.dataset = dataset;
        summary.nodes = originals[i].node_count();
        summary.links = originals[i].link_count();
        const auto seed = hash_combine(config.master_seed,
                                       stable_hash64("props|net=" + dataset.name));
        summary.original =
            full_report(originals[i],
                        betweenness_options(config, originals[i].node_count(), seed, jobs));
        summary.original_globals = global_map(summary.original);
        summary.original_lwcc = components(originals[i]).lwcc_fraction;
        store.networks.push_back(std::move(summary));
    }

    // build the task grid up front so slots are stable
    for (std::size_t i = 0; i < config.datasets.size(); ++i) {
        for (Method method : config.methods) {
            for (double size : method_sizes(config, method)) {
                for (int rep = 0; rep < config.repetitions; ++rep) {
                    TaskOutcome task;
                    task.key = {config.datasets[i].name, method, size, rep};
                    task.seed = task_seed(config.master_seed, task.key);
                    store.tasks.push_back(std::move(task));
                }
            }
        }
    }

    std::vector<std::size_t> task_network(store.tasks.size());
    {
        std::size_t t = 0;
        for (std::size_t i = 0; i < config.datasets.size(); ++i)
            for (Method method : config.methods)
                for (std::size_t s = 0; s < method_sizes(config, method).size(); ++s)
                    for (int rep = 0; rep < config.repetitions; ++rep) task_network[t++] = i;
    }

    auto run_task = [&](std::size_t index) {
        TaskOutcome& task = store.tasks[index];
        const Graph& original = originals[task_network[index]];
        const NetworkSummary& summary = store.networks[task_network[index]];
        try {
            SimplifiedNetwork simplified =
                run_method(original, task.key.method, task.key.size, task.seed);
            task.nodes = simplified.graph.node_count();
            task.links = simplified.graph.link_count();

            const auto bc_seed = hash_combine(task.seed, stable_hash64("betweenness"));
            PropertyReport report = full_report(
                simplified.graph,
                betweenness_options(config, simplified.graph.node_count(), bc_seed, 1));

            auto original_locals = local_map(summary.original);
            auto simplified_locals = local_map(report);
            for (const auto& [property, values] : original_locals) {
                auto it = simplified_locals.find(property);
                if (it == simplified_locals.end()) continue;
                task.comparison.d[property] = ks_d(*values, *it->second);
            }
            task.comparison.globals = global_map(report);
            task.comparison.lwcc_fraction = components(simplified.graph).lwcc_fraction;
            task.comparison.achieved_fraction = simplified.achieved_fraction();
        } catch (const std::exception& e) {
            task.failed = true;
            task.error = e.what();
        }
    };

    unsigned workers = jobs ? jobs : std::thread::hardware_concurrency();
    if (workers <= 1 || store.tasks.size() < 2) {
        for (std::size_t i = 0; i < store.tasks.size(); ++i) run_task(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t index = next.fetch_add(1);
                    if (index >= store.tasks.size()) return;
                    run_task(index);
                }
            });
        }
        for (auto& thread : pool) thread.join();
    }

    // aggregate repetitions into similarity records, in grid order
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < config.datasets.size(); ++i) {
        for (Method method : config.methods) {
            for (double size : method_sizes(config, method)) {
                std::vector<RepetitionComparison> reps;
                for (int rep = 0; rep < config.repetitions; ++rep, ++cursor) {
                    const TaskOutcome& task = store.tasks[cursor];
                    if (task.failed)
                        store.partial_failure = true;
                    else
                        reps.push_back(task.comparison);
                }
                if (reps.empty()) continue;
                store.similarity.push_back(average_over_repetitions(
                    config.datasets[i].name, method, size, store.networks[i].original_globals,
                    store.networks[i].original_lwcc, reps));
            }
        }
    }

    for (Method method : config.methods)
        for (double size : method_sizes(config, method))
            for (GlobalProperty property : kGlobalProperties)
                store.correlations.push_back(
                    pooled_correlation(method, size, property, store.similarity));

    // stage 1: per (network, method), rank sizes by local-property fit
    for (std::size_t i = 0; i < config.datasets.size(); ++i) {
        const auto& network = config.datasets[i].name;
        for (Method method : config.methods) {
            std::vector<const SimilarityRecord*> cells;
            for (const auto& record : store.similarity)
                if (record.network == network && record.method == method)
                    cells.push_back(&record);
            if (cells.size() < 2) continue;  // single configuration, nothing to rank
            std::sort(cells.begin(), cells.end(), [&](const auto* a, const auto* b) {
                return size_axis(method, a->size) < size_axis(method, b->size);
            });

            std::vector<std::string> candidates;
            for (const auto* cell : cells) candidates.push_back(size_label(method, cell->size));
            std::vector<std::string> property_names;
            std::vector<LocalProperty> properties;
            for (const auto& [property, unused] : cells.front()->mean_d) {
                properties.push_back(property);
                property_names.push_back(property_name(property));
            }
            std::vector<std::vector<std::optional<double>>> scores;
            for (const auto* cell : cells) {
                std::vector<std::optional<double>> row;
                for (LocalProperty p : properties) row.emplace_back(cell->mean_d.at(p));
                scores.push_back(std::move(row));
            }
            std::vector<Orientation> orientations(properties.size(), Orientation::LowerIsBetter);

            BestSizeRecord record;
            record.network = network;
            record.method = method;
            record.assessment = assess("sizes local network=" + network + " method=" +
                                           method_name(method),
                                       candidates, property_names, scores, orientations);
            std::vector<std::pair<double, double>> curve;
            for (std::size_t k = 0; k < cells.size(); ++k)
                curve.emplace_back(size_axis(method, cells[k]->size), record.assessment.a[k]);
            record.best = best_size(curve);
            record.assessment.best = record.best;
            for (std::size_t k = 0; k < cells.size(); ++k) {
                if (size_matches(curve[k].first, record.best.size))
                    record.best_label = candidates[k];
                if (size_matches(curve[k].first, record.best.global_min_size))
                    record.global_min_label = candidates[k];
            }
            store.best_sizes.push_back(std::move(record));
        }
    }

    // stage 1, global properties: rank sizes by pooled correlation per method
    for (Method method : config.methods) {
        auto sizes = method_sizes(config, method);
        if (sizes.size() < 2) continue;
        std::sort(sizes.begin(), sizes.end(), [&](double a, double b) {
            return size_axis(method, a) < size_axis(method, b);
        });
        std::vector<std::string> candidates;
        std::vector<std::vector<std::optional<double>>> scores;
        for (double size : sizes) {
            candidates.push_back(size_label(method, size));
            std::vector<std::optional<double>> row;
            for (GlobalProperty property : kGlobalProperties) {
                std::optional<double> rho;
                for (const auto& correlation : store.correlations)
                    if (correlation.method == method && size_matches(correlation.size, size) &&
                        correlation.property == property)
                        rho = correlation.rho;
                row.push_back(rho);
            }
            scores.push_back(std::move(row));
        }
        std::vector<std::string> property_names;
        for (GlobalProperty property : kGlobalProperties)
            property_names.push_back(property_name(property));
        std::vector<Orientation> orientations(property_names.size(),
                                              Orientation::HigherIsBetter);
        try {
            store.global_size_assessments.push_back(
                assess(std::string("sizes global method=") + method_name(method), candidates,
                       property_names, scores, orientations));
        } catch (const std::invalid_argument&) {
            // every column undefined (too few networks for correlations)
        }
    }

    try {
        store.comparison = comparison_stage(store.similarity, config.methods,
                                            config.comparison_s, config.comparison_c);
    } catch (const std::exception& e) {
        store.comparison_error = e.what();
        if (!store.partial_failure)
            throw;  // a complete run must support the comparison stage
    }

    // grouped variance tests over the stage-1 and stage-2 outcomes
    auto tag_of = [&](const std::string& network, bool by_type) -> std::string {
        for (const auto& summary : store.networks)
            if (summary.dataset.name == network)
                return by_type ? summary.dataset.type_tag : summary.dataset.size_class;
        return "";
    };
    for (Method method : config.methods) {
        for (bool by_type : {true, false}) {
            std::vector<std::pair<std::string, double>> tagged;
            for (const auto& record : store.best_sizes) {
                if (record.method != method) continue;
                std::string tag = tag_of(record.network, by_type);
                if (tag.empty()) continue;
                tagged.emplace_back(tag, std::strtod(record.best_label.c_str(), nullptr));
            }
            if (tagged.empty()) continue;
            store.anova.push_back(grouped_anova(std::string("best_size[") + method_name(method) +
                                                    "] by " + (by_type ? "type" : "size_class"),
                                                tagged));
        }
    }
    if (store.comparison) {
        for (Method method : config.methods) {
            for (bool by_type : {true, false}) {
                std::vector<std::pair<std::string, double>> tagged;
                for (const auto& assessment : store.comparison->per_network) {
                    const std::string prefix = "methods local network=";
                    std::string network = assessment.name.substr(prefix.size());
                    std::string tag = tag_of(network, by_type);
                    if (tag.empty()) continue;
                    for (std::size_t i = 0; i < assessment.table.candidates.size(); ++i)
                        if (assessment.table.candidates[i] == method_name(method))
                            tagged.emplace_back(tag, assessment.a[i]);
                }
                if (tagged.empty()) continue;
                store.anova.push_back(
                    grouped_anova(std::string("comparison_a[") + method_name(method) + "] by " +
                                      (by_type ? "type" : "size_class"),
                                  tagged));
            }
        }
    }
    return store;
}

}  // namespace netsimp
