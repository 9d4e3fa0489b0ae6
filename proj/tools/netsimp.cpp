// Command-line front end: run full experiment grids, apply a single
// simplification, report structural properties, or re-assess an existing
// result store at another comparison size.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "netsimp/format.hpp"
#include "netsimp/graph_io.hpp"
#include "netsimp/pipeline.hpp"

namespace {

using namespace netsimp;

int cmd_run(const std::string& config_path, const std::string& out_override, unsigned jobs) {
    RunConfig config = validate_config(config_path);
    if (!out_override.empty()) config.output_dir = out_override;
    ResultStore store = run_experiment(config, jobs);
    emit_reports(store, config.output_dir);

    std::size_t failed = 0;
    for (const auto& task : store.tasks)
        if (task.failed) ++failed;
    std::cout << "networks: " << store.networks.size() << ", tasks: " << store.tasks.size()
              << ", failed: " << failed << "\nreports written to " << config.output_dir
              << std::endl;
    if (store.partial_failure) {
        for (const auto& task : store.tasks)
            if (task.failed)
                std::cerr << "failed: " << task.key.network << ' '
                          << method_name(task.key.method) << ' ' << format_double(task.key.size)
                          << " rep " << task.key.repetition << ": " << task.error << '\n';
        return 3;
    }
    return 0;
}

int cmd_simplify(const std::string& input, bool directed, const std::string& method_string,
                 std::optional<double> s, std::optional<int> c, std::uint64_t seed,
                 const std::string& out, const std::string& mapping_path) {
    auto method = method_from_name(method_string);
    if (!method) {
        std::cerr << "unknown method: " << method_string << '\n';
        return 1;
    }
    Graph g = load_edge_list_file(input, directed);

    SimplifiedNetwork simplified;
    if (is_sampling(*method)) {
        if (!s) {
            std::cerr << "--s is required for sampling methods\n";
            return 1;
        }
        SampleSpec spec;
        spec.method = *method;
        spec.s = *s;
        spec.seed = seed;
        switch (*method) {
            case Method::RN: simplified = sample_rn(g, spec); break;
            case Method::RD: simplified = sample_rd(g, spec); break;
            case Method::RL: simplified = sample_rl(g, spec); break;
            default: simplified = sample_bf(g, spec); break;
        }
    } else {
        MergeSpec spec;
        spec.method = *method;
        spec.seed = seed;
        if (*method == Method::CG) {
            if (!c) {
                std::cerr << "--c is required for cluster growing\n";
                return 1;
            }
            spec.box_radius = *c;
            simplified = merge_cg(g, spec);
        } else {
            simplified = merge_bp(g, spec);
        }
    }

    write_edge_list_file(simplified.graph, out);
    if (!mapping_path.empty()) {
        std::ofstream mapping(mapping_path);
        if (!mapping) {
            std::cerr << "cannot write " << mapping_path << '\n';
            return 1;
        }
        write_mapping_csv(g, simplified, mapping);
    }
    std::cout << "nodes: " << simplified.graph.node_count()
              << ", links: " << simplified.graph.link_count()
              << ", fraction: " << format_double(simplified.achieved_fraction()) << '\n';
    if (simplified.undersized) std::cout << "note: link pool exhausted below node target\n";
    if (simplified.lost_connectivity) std::cout << "note: traversal restarted; result disconnected\n";
    if (simplified.zero_weight_fallback) std::cout << "note: zero-degree fallback drew uniformly\n";
    return 0;
}

int cmd_props(const std::string& input, bool directed, const std::string& out_dir,
              std::optional<int> pivots, std::uint64_t seed) {
    Graph g = load_edge_list_file(input, directed);
    BetweennessOptions options;
    options.seed = seed;
    if (pivots) options.pivots = static_cast<std::uint32_t>(*pivots);
    PropertyReport report = full_report(g, options);
    ComponentReport comps = components(g);

    nlohmann::ordered_json j;
    j["nodes"] = g.node_count();
    j["links"] = g.link_count();
    j["directed"] = g.directed();
    j["density"] = report.density;
    j["degree_mixing"] =
        report.degree_mixing ? nlohmann::ordered_json(*report.degree_mixing) : nullptr;
    j["transitivity"] =
        report.transitivity ? nlohmann::ordered_json(*report.transitivity) : nullptr;
    j["components"] = comps.component_count;
    j["lwcc_fraction"] = comps.lwcc_fraction;
    std::cout << j.dump(2) << std::endl;

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        auto dump = [&](const std::string& name, const std::vector<double>& values) {
            std::ofstream out(std::filesystem::path(out_dir) / (name + ".csv"));
            out << "node_label,value\n";
            for (NodeId v = 0; v < values.size(); ++v)
                out << g.label(v) << ',' << format_double(values[v]) << '\n';
        };
        dump("degree", report.degree);
        if (report.in_degree) dump("in_degree", *report.in_degree);
        if (report.out_degree) dump("out_degree", *report.out_degree);
        dump("clustering", report.clustering);
        dump("betweenness", report.betweenness);
    }
    return 0;
}

int cmd_assess(const std::string& store_dir, double at_size, int at_c) {
    namespace fs = std::filesystem;
    auto records = load_similarity_csv((fs::path(store_dir) / "similarity.csv").string());
    std::vector<Method> methods;
    for (const auto& record : records)
        if (std::find(methods.begin(), methods.end(), record.method) == methods.end())
            methods.push_back(record.method);

    ComparisonAssessments comparison = comparison_stage(records, methods, at_size, at_c);

    const std::string tag = "s" + format_double(at_size) + "_c" + std::to_string(at_c);
    {
        std::ofstream out(fs::path(store_dir) / ("verdicts_" + tag + ".csv"));
        out << "network,best,second_best,worst\n";
        for (const auto& assessment : comparison.per_network) {
            const std::string prefix = "methods local network=";
            const auto& v = *assessment.verdicts;
            auto join = [](const std::vector<std::string>& group) {
                std::string s;
                for (const auto& name : group) s += (s.empty() ? "" : "/") + name;
                return s;
            };
            out << assessment.name.substr(prefix.size()) << ',' << join(v.best) << ','
                << join(v.second_best) << ',' << join(v.worst) << '\n';
        }
    }
    for (const auto& assessment : comparison.per_network) {
        const std::string prefix = "methods local network=";
        const auto& v = *assessment.verdicts;
        std::cout << assessment.name.substr(prefix.size()) << ": best";
        for (const auto& name : v.best) std::cout << ' ' << name;
        std::cout << ", worst";
        for (const auto& name : v.worst) std::cout << ' ' << name;
        if (v.all_tied) std::cout << " (all tied)";
        std::cout << '\n';
    }
    std::cout << "verdicts written to " << (fs::path(store_dir) / ("verdicts_" + tag + ".csv"))
              << std::endl;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"network simplification toolkit"};
    app.require_subcommand(1);

    // run
    std::string config_path, out_override;
    unsigned jobs = 0;
    auto* run = app.add_subcommand("run", "execute a configured experiment grid");
    run->add_option("--config", config_path, "JSON run configuration")->required();
    run->add_option("--out", out_override, "output directory (overrides config)");
    run->add_option("--jobs", jobs, "worker threads (0 = all cores)");

    // simplify
    std::string input, method_string, out_path, mapping_path;
    bool directed = false;
    double s_value = 0.0;
    int c_value = 0;
    std::uint64_t seed = 0;
    auto* simplify = app.add_subcommand("simplify", "reduce one network");
    simplify->add_option("--input", input, "edge-list file")->required();
    simplify->add_option("--method", method_string, "rn|rd|rl|bf|cg|bp")->required();
    auto* s_opt = simplify->add_option("--s", s_value, "target node fraction (sampling)");
    auto* c_opt = simplify->add_option("--c", c_value, "box radius (cluster growing)");
    simplify->add_option("--seed", seed, "random seed")->required();
    simplify->add_option("--out", out_path, "output edge-list file")->required();
    simplify->add_option("--mapping", mapping_path, "node mapping CSV");
    simplify->add_flag("--directed", directed, "treat input as directed");

    // props
    std::string props_input, props_out;
    bool props_directed = false;
    int pivot_count = 0;
    std::uint64_t props_seed = 0;
    auto* props = app.add_subcommand("props", "structural property report");
    props->add_option("--input", props_input, "edge-list file")->required();
    props->add_flag("--directed", props_directed, "treat input as directed");
    props->add_option("--out", props_out, "directory for per-property CSVs");
    auto* pivots_opt =
        props->add_option("--betweenness-pivots", pivot_count, "approximate betweenness sources");
    props->add_option("--seed", props_seed, "seed for pivot selection");

    // assess
    std::string store_dir;
    double at_size = 0.1;
    int at_c = 2;
    auto* assess_cmd = app.add_subcommand("assess", "re-rank methods in an existing store");
    assess_cmd->add_option("--store", store_dir, "result store directory")->required();
    assess_cmd->add_option("--at-size", at_size, "sampling comparison size")->required();
    assess_cmd->add_option("--at-c", at_c, "cluster-growing comparison radius")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, out_override, jobs);
        if (simplify->parsed())
            return cmd_simplify(input, directed, method_string,
                                s_opt->count() ? std::optional(s_value) : std::nullopt,
                                c_opt->count() ? std::optional(c_value) : std::nullopt, seed,
                                out_path, mapping_path);
        if (props->parsed())
            return cmd_props(props_input, props_directed, props_out,
                             pivots_opt->count() ? std::optional(pivot_count) : std::nullopt,
                             props_seed);
        if (assess_cmd->parsed()) return cmd_assess(store_dir, at_size, at_c);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
