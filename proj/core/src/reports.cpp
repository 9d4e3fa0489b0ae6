#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "netsimp/format.hpp"
#include "netsimp/pipeline.hpp"

namespace netsimp {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string sanitize(const std::string& name) {
    std::string out = name;
    for (char& c : out) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '_';
        if (!ok) c = '_';
    }
    return out;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& part : parts) {
        if (!out.empty()) out += '/';
        out += part;
    }
    return out;
}

ordered_json verdicts_json(const MethodVerdicts& verdicts) {
    ordered_json j;
    j["ordered"] = ordered_json::array();
    for (const auto& [name, a] : verdicts.ordered) j["ordered"].push_back({name, a});
    j["best"] = verdicts.best;
    j["second_best"] = verdicts.second_best;
    j["worst"] = verdicts.worst;
    j["all_tied"] = verdicts.all_tied;
    return j;
}

ordered_json assessment_json(const Assessment& assessment) {
    ordered_json j;
    j["name"] = assessment.name;
    j["candidates"] = assessment.table.candidates;
    j["properties"] = assessment.table.properties;
    j["excluded_properties"] = assessment.table.excluded_properties;
    j["ranks"] = assessment.table.ranks;
    j["a"] = assessment.a;
    if (assessment.weights) j["weights"] = *assessment.weights;
    if (assessment.a_weighted) j["a_weighted"] = *assessment.a_weighted;
    if (assessment.verdicts) j["verdicts"] = verdicts_json(*assessment.verdicts);
    if (assessment.best) {
        j["best"] = {{"size", assessment.best->size},
                     {"a", assessment.best->a},
                     {"global_min_size", assessment.best->global_min_size},
                     {"global_min_a", assessment.best->global_min_a}};
    }
    return j;
}

const char* policy_name(BetweennessPolicy policy) {
    switch (policy) {
        case BetweennessPolicy::Auto: return "auto";
        case BetweennessPolicy::Exact: return "exact";
        case BetweennessPolicy::Pivot: return "pivot";
    }
    return "?";
}

void write_manifest(const ResultStore& store, const std::filesystem::path& path) {
    const RunConfig& config = store.config;
    ordered_json j;
    j["tool"] = "netsimp";
    j["version"] = "0.1.0";
    j["config_hash"] = store.config_hash;
    j["master_seed"] = config.master_seed;
    j["repetitions"] = config.repetitions;
    j["methods"] = ordered_json::array();
    for (Method m : config.methods) j["methods"].push_back(method_name(m));
    j["s_grid"] = config.s_grid;
    j["c_grid"] = config.c_grid;
    j["comparison"] = {{"s", config.comparison_s}, {"c", config.comparison_c}};
    j["betweenness"] = {{"mode", policy_name(config.betweenness_policy)},
                        {"pivots", config.betweenness_pivots},
                        {"exact_limit", config.betweenness_exact_limit}};
    j["datasets"] = ordered_json::array();
    for (const auto& summary : store.networks) {
        j["datasets"].push_back({{"name", summary.dataset.name},
                                 {"path", summary.dataset.path},
                                 {"directed", summary.dataset.directed},
                                 {"type", summary.dataset.type_tag},
                                 {"size_class", summary.dataset.size_class},
                                 {"nodes", summary.nodes},
                                 {"links", summary.links}});
    }
    std::size_t failed = 0;
    j["tasks"] = ordered_json::array();
    for (const auto& task : store.tasks) {
        ordered_json t = {{"network", task.key.network},
                          {"method", method_name(task.key.method)},
                          {"size", task.key.size},
                          {"rep", task.key.repetition},
                          {"seed", task.seed},
                          {"status", task.failed ? "failed" : "ok"},
                          {"nodes", task.nodes},
                          {"links", task.links}};
        if (task.failed) {
            t["error"] = task.error;
            ++failed;
        }
        j["tasks"].push_back(std::move(t));
    }
    j["failed_task_count"] = failed;
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

void write_verdicts_csv(const ResultStore& store, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "network,best,best_a,second_best,second_a,worst,worst_a,all_tied\n";
    if (!store.comparison) return;
    auto group_a = [](const MethodVerdicts& v, const std::vector<std::string>& group) {
        for (const auto& [name, a] : v.ordered)
            if (!group.empty() && name == group.front()) return format_double(a);
        return std::string();
    };
    for (const auto& assessment : store.comparison->per_network) {
        const std::string prefix = "methods local network=";
        if (!assessment.verdicts) continue;
        const auto& v = *assessment.verdicts;
        out << assessment.name.substr(prefix.size()) << ',' << join(v.best) << ','
            << group_a(v, v.best) << ',' << join(v.second_best) << ','
            << group_a(v, v.second_best) << ',' << join(v.worst) << ',' << group_a(v, v.worst)
            << ',' << (v.all_tied ? "true" : "false") << '\n';
    }
}

void write_plotdata(const ResultStore& store, const std::filesystem::path& dir) {
    {
        // mean stage-1 measure over networks, per method and size
        auto out = open_out(dir / "mean_a_local.csv");
        out << "method,size,mean_a,networks\n";
        for (Method method : store.config.methods) {
            std::vector<std::string> sizes;
            std::vector<double> sums;
            std::vector<std::size_t> counts;
            for (const auto& record : store.best_sizes) {
                if (record.method != method) continue;
                const auto& table = record.assessment.table;
                for (std::size_t i = 0; i < table.candidates.size(); ++i) {
                    auto it = std::find(sizes.begin(), sizes.end(), table.candidates[i]);
                    std::size_t at = static_cast<std::size_t>(it - sizes.begin());
                    if (it == sizes.end()) {
                        sizes.push_back(table.candidates[i]);
                        sums.push_back(0.0);
                        counts.push_back(0);
                    }
                    sums[at] += record.assessment.a[i];
                    ++counts[at];
                }
            }
            for (std::size_t i = 0; i < sizes.size(); ++i)
                out << method_name(method) << ',' << sizes[i] << ','
                    << format_double(sums[i] / static_cast<double>(counts[i])) << ',' << counts[i]
                    << '\n';
        }
    }
    {
        auto out = open_out(dir / "mean_a_global.csv");
        out << "method,size,a\n";
        for (const auto& assessment : store.global_size_assessments) {
            const std::string prefix = "sizes global method=";
            const std::string method = assessment.name.substr(prefix.size());
            for (std::size_t i = 0; i < assessment.table.candidates.size(); ++i)
                out << method << ',' << assessment.table.candidates[i] << ','
                    << format_double(assessment.a[i]) << '\n';
        }
    }
}

void write_assessments_json(const ResultStore& store, const std::filesystem::path& path) {
    ordered_json j;
    j["config_hash"] = store.config_hash;
    j["best_sizes"] = ordered_json::array();
    for (const auto& record : store.best_sizes) {
        j["best_sizes"].push_back({{"network", record.network},
                                   {"method", method_name(record.method)},
                                   {"best", record.best_label},
                                   {"best_a", record.best.a},
                                   {"global_min", record.global_min_label},
                                   {"global_min_a", record.best.global_min_a},
                                   {"assessment", assessment_json(record.assessment)}});
    }
    j["size_assessments_global"] = ordered_json::array();
    for (const auto& assessment : store.global_size_assessments)
        j["size_assessments_global"].push_back(assessment_json(assessment));
    if (store.comparison) {
        ordered_json c;
        c["s"] = store.comparison->s;
        c["c"] = store.comparison->c;
        c["per_network"] = ordered_json::array();
        for (const auto& assessment : store.comparison->per_network)
            c["per_network"].push_back(assessment_json(assessment));
        c["per_local_property"] = ordered_json::array();
        for (const auto& assessment : store.comparison->per_local_property)
            c["per_local_property"].push_back(assessment_json(assessment));
        c["per_global_property"] = ordered_json::array();
        for (const auto& verdict : store.comparison->per_global_property) {
            ordered_json entry;
            entry["property"] = property_name(verdict.property);
            entry["ordered"] = ordered_json::array();
            for (const auto& [name, rho] : verdict.ordered) {
                if (rho)
                    entry["ordered"].push_back({name, *rho});
                else
                    entry["ordered"].push_back({name, nullptr});
            }
            c["per_global_property"].push_back(std::move(entry));
        }
        j["comparison"] = std::move(c);
    } else {
        j["comparison_error"] = store.comparison_error;
    }
    j["anova"] = ordered_json::array();
    for (const auto& record : store.anova) {
        ordered_json entry;
        entry["label"] = record.label;
        entry["groups"] = record.group_names;
        if (record.result) {
            entry["f"] = record.result->f;
            entry["p"] = record.result->p;
            entry["df_between"] = record.result->df_between;
            entry["df_within"] = record.result->df_within;
        } else {
            entry["skipped"] = record.note;
        }
        j["anova"].push_back(std::move(entry));
    }
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

}  // namespace

void emit_reports(const ResultStore& store, const std::string& dir) {
    namespace fs = std::filesystem;
    const fs::path root(dir);
    fs::create_directories(root);
    fs::create_directories(root / "plotdata");
    fs::create_directories(root / "ranktables");

    write_manifest(store, root / "manifest.json");

    {
        auto out = open_out(root / "similarity.csv");
        write_similarity_header(out);
        for (const auto& record : store.similarity) write_similarity_rows(record, out);
    }
    {
        auto out = open_out(root / "correlations.csv");
        out << "method,size,property,rho,pairs\n";
        for (const auto& correlation : store.correlations) {
            out << method_name(correlation.method) << ',' << format_double(correlation.size)
                << ',' << property_name(correlation.property) << ','
                << (correlation.rho ? format_double(*correlation.rho) : std::string()) << ','
                << correlation.pair_count << '\n';
        }
    }

    write_assessments_json(store, root / "assessments.json");
    write_verdicts_csv(store, root / "verdicts.csv");
    write_plotdata(store, root / "plotdata");

    for (const auto& record : store.best_sizes) {
        auto out = open_out(root / "ranktables" /
                            ("stage1_local_" + sanitize(record.network) + "_" +
                             method_name(record.method) + ".csv"));
        write_assessment_csv(record.assessment, out);
    }
    for (const auto& assessment : store.global_size_assessments) {
        const std::string prefix = "sizes global method=";
        auto out = open_out(root / "ranktables" /
                            ("stage1_global_" + sanitize(assessment.name.substr(prefix.size())) +
                             ".csv"));
        write_assessment_csv(assessment, out);
    }
    if (store.comparison) {
        for (const auto& assessment : store.comparison->per_network) {
            const std::string prefix = "methods local network=";
            auto out = open_out(root / "ranktables" /
                                ("stage2_local_" + sanitize(assessment.name.substr(prefix.size())) +
                                 ".csv"));
            write_assessment_csv(assessment, out);
        }
        for (const auto& assessment : store.comparison->per_local_property) {
            const std::string prefix = "methods ";
            auto out = open_out(root / "ranktables" /
                                ("stage2_property_" +
                                 sanitize(assessment.name.substr(prefix.size())) + ".csv"));
            write_assessment_csv(assessment, out);
        }
    }
}

std::vector<SimilarityRecord> load_similarity_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);

    std::vector<SimilarityRecord> records;
    auto find_record = [&](const std::string& network, Method method,
                           double size) -> SimilarityRecord& {
        for (auto& record : records)
            if (record.network == network && record.method == method && record.size == size)
                return record;
        SimilarityRecord record;
        record.network = network;
        record.method = method;
        record.size = size;
        records.push_back(std::move(record));
        return records.back();
    };

    std::string line;
    std::getline(in, line);  // header
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 8)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 8 fields");
        auto method = method_from_name(fields[1]);
        if (!method)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": unknown method " + fields[1]);
        auto& record = find_record(fields[0], *method, std::strtod(fields[2].c_str(), nullptr));
        record.repetitions = static_cast<std::size_t>(std::strtoull(fields[7].c_str(), nullptr, 10));

        const std::string& property = fields[3];
        auto opt_value = [](const std::string& field) -> std::optional<double> {
            if (field.empty()) return std::nullopt;
            return std::strtod(field.c_str(), nullptr);
        };
        if (auto local = local_property_from_name(property)) {
            record.mean_d[*local] = std::strtod(fields[4].c_str(), nullptr);
        } else if (auto global = global_property_from_name(property)) {
            record.original_value[*global] = opt_value(fields[5]);
            record.mean_simplified_value[*global] = opt_value(fields[6]);
        } else if (property == "lwcc_fraction") {
            record.original_lwcc = std::strtod(fields[5].c_str(), nullptr);
            record.mean_lwcc = std::strtod(fields[6].c_str(), nullptr);
        } else if (property == "achieved_fraction") {
            record.mean_achieved_fraction = std::strtod(fields[6].c_str(), nullptr);
        } else {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": unknown property " + property);
        }
    }
    return records;
}

}  // namespace netsimp
