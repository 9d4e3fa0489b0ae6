// End-to-end acceptance suite. Each check prints one PASS/FAIL line; the
// process exits nonzero if any check fails. Expected values come from
// independent brute-force reference implementations (see support/oracles.hpp)
// or are frozen constants verified against external reference software.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "netsimp/assess.hpp"
#include "netsimp/generators.hpp"
#include "netsimp/graph_io.hpp"
#include "netsimp/netprops.hpp"
#include "netsimp/pipeline.hpp"
#include "netsimp/similarity.hpp"
#include "netsimp/simplify.hpp"
#include "support/oracles.hpp"

using namespace netsimp;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("[%s] %d. %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- 1: rank aggregation on the six-size correlation example ---------------

void criterion_rank_aggregation() {
    const std::vector<std::vector<std::optional<double>>> scores = {
        {0.84, 0.69, 0.75}, {0.88, 0.89, 0.87}, {0.90, 0.92, 0.89},
        {0.96, 0.95, 0.88}, {0.91, 0.94, 0.92}, {0.93, 0.96, 0.90},
    };
    RankTable table = rank_candidates({"S1", "S2", "S3", "S4", "S5", "S6"}, {"P1", "P2", "P3"},
                                      scores, std::vector<Orientation>(3, Orientation::HigherIsBetter));
    auto a = measure_a(table);
    const std::vector<double> expected_sums{15, 12, 8, 4, 4, 2};
    bool pass = true;
    for (std::size_t c = 0; c < 6; ++c) {
        pass = pass && table.rank_sum(c) == expected_sums[c];
        pass = pass && std::abs(a[c] - expected_sums[c] / 15.0) <= 1e-12;
        // three-decimal rendering of the normalized sums
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%.3f", a[c]);
        const char* printed[] = {"1.000", "0.800", "0.533", "0.267", "0.267", "0.133"};
        pass = pass && printed[c] == std::string(buf);
    }
    report(1, "rank sums and normalized measure on the 6x3 correlation table", pass);
}

// ---- 2: betweenness equals exhaustive path enumeration ---------------------

void criterion_betweenness_oracle() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(0xACCE01);
    bool pass = true;
    std::string detail;
    for (int trial = 0; trial < 200 && pass; ++trial) {
        Graph g = oracle::random_graph(rng, 3, 8);
        auto mine = betweenness(g);
        auto reference = oracle::brute_betweenness(g);
        for (std::size_t v = 0; v < mine.size(); ++v) {
            if (std::abs(mine[v] - reference[v]) > 1e-12) {
                pass = false;
                detail = "mismatch at trial " + std::to_string(trial);
                break;
            }
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 10.0) {
        pass = false;
        detail = "took " + std::to_string(elapsed) + "s";
    }
    char timing[64];
    std::snprintf(timing, sizeof(timing), "200 graphs in %.2fs", elapsed);
    report(2, "exact betweenness vs path enumeration (n <= 8)", pass,
           detail.empty() ? timing : detail);
}

// ---- 3: scalar properties equal brute-force enumeration --------------------

void criterion_scalar_oracles() {
    Rng rng(0xACCE02);
    bool pass = true;
    std::string detail;
    for (int trial = 0; trial < 200 && pass; ++trial) {
        Graph g = oracle::random_graph(rng, 2, 12);
        auto check = [&](const char* what, std::optional<double> mine,
                         std::optional<double> reference) {
            if (mine.has_value() != reference.has_value() ||
                (mine && std::abs(*mine - *reference) > 1e-12)) {
                pass = false;
                detail = std::string(what) + " mismatch at trial " + std::to_string(trial);
            }
        };
        check("transitivity", transitivity(g), oracle::brute_transitivity(g));
        check("assortativity", degree_mixing(g), oracle::brute_degree_mixing(g));
        check("density", density(g), oracle::brute_density(g));
        auto mine = local_clustering(g);
        auto reference = oracle::brute_clustering(g);
        for (std::size_t v = 0; v < mine.size(); ++v)
            if (std::abs(mine[v] - reference[v]) > 1e-12) {
                pass = false;
                detail = "clustering mismatch at trial " + std::to_string(trial);
            }
    }
    report(3, "transitivity, clustering, assortativity, density vs enumeration (n <= 12)", pass,
           detail);
}

// ---- 4: distribution and rank statistics vs references ---------------------

void criterion_statistics() {
    Rng rng(0xACCE03);
    bool pass = true;
    std::string detail;
    for (int trial = 0; trial < 100 && pass; ++trial) {
        std::vector<double> a, b;
        std::vector<std::pair<double, double>> pairs;
        const std::size_t na = 1 + rng.below(50), nb = 1 + rng.below(50),
                          np = 2 + rng.below(49);
        for (std::size_t i = 0; i < na; ++i) a.push_back(std::floor(rng.uniform01() * 12));
        for (std::size_t i = 0; i < nb; ++i) b.push_back(std::floor(rng.uniform01() * 12));
        for (std::size_t i = 0; i < np; ++i)
            pairs.emplace_back(std::floor(rng.uniform01() * 12),
                               std::floor(rng.uniform01() * 12));
        if (std::abs(ks_d(a, b) - oracle::brute_ks(a, b)) > 1e-12) {
            pass = false;
            detail = "distribution distance mismatch at trial " + std::to_string(trial);
        }
        auto rho = spearman_rho(pairs);
        auto reference = oracle::brute_spearman(pairs);
        if (rho.has_value() != reference.has_value() ||
            (rho && std::abs(*rho - *reference) > 1e-12)) {
            pass = false;
            detail = "rank correlation mismatch at trial " + std::to_string(trial);
        }
    }
    std::vector<double> x{1, 2, 3}, y{2, 3, 4};
    if (std::abs(ks_d(x, y) - 1.0 / 3) > 1e-12) {
        pass = false;
        detail = "D({1,2,3},{2,3,4}) != 1/3";
    }
    report(4, "distribution distance and rank correlation vs references (100 pairs)", pass,
           detail);
}

// ---- 5: sampler and contraction contracts ----------------------------------

void criterion_sampler_contracts() {
    Rng rng(0xACCE04);
    bool pass = true;
    std::string detail;
    for (int trial = 0; trial < 500 && pass; ++trial) {
        const std::uint32_t n = 5 + static_cast<std::uint32_t>(rng.below(76));
        Graph g = rng.below(2) ? preferential_attachment_graph(
                                     n, 1 + static_cast<std::uint32_t>(rng.below(3)),
                                     rng.next_u64())
                               : uniform_random_graph(n, 0.03 + 0.2 * rng.uniform01(),
                                                      rng.next_u64());
        const int percent = 1 + static_cast<int>(rng.below(100));
        SampleSpec spec;
        spec.s = percent / 100.0;
        spec.seed = rng.next_u64();
        const std::size_t expected = (static_cast<std::size_t>(percent) * g.node_count() + 99) / 100;

        spec.method = Method::RN;
        const std::size_t rn = sample_rn(g, spec).graph.node_count();
        spec.method = Method::RD;
        const std::size_t rd = sample_rd(g, spec).graph.node_count();
        spec.method = Method::BF;
        auto bf = sample_bf(g, spec);
        if (rn != expected || rd != expected || bf.graph.node_count() != expected) {
            pass = false;
            detail = "node-count contract broken at trial " + std::to_string(trial);
            break;
        }
        if (components(g).component_count == 1 &&
            components(bf.graph).component_count != 1) {
            pass = false;
            detail = "breadth-first sample disconnected at trial " + std::to_string(trial);
            break;
        }
    }
    for (int trial = 0; trial < 60 && pass; ++trial) {
        Graph g = oracle::random_graph(rng, 4, 60);
        MergeSpec spec;
        spec.method = Method::CG;
        spec.box_radius = 1 + static_cast<int>(rng.below(4));
        spec.seed = rng.next_u64();
        auto merged = merge_cg(g, spec);
        auto dist = oracle::all_pairs_distances(g);
        for (NodeId u = 0; u < g.node_count() && pass; ++u)
            for (NodeId v = u + 1; v < g.node_count(); ++v) {
                if (merged.mapping[u] != merged.mapping[v]) continue;
                if (dist[u][v] < 0 || dist[u][v] > 2 * spec.box_radius + 1) {
                    pass = false;
                    detail = "supernode spread beyond 2c+1 at trial " + std::to_string(trial);
                    break;
                }
            }
    }
    report(5, "sampler size contracts, connect-by-construction, supernode diameter", pass,
           detail);
}

// ---- 6: degree-proportional bias on the five-node star ---------------------

void criterion_degree_bias() {
    Graph star = oracle::star_graph(4);
    const int trials = 40000;
    int center_hits = 0;
    for (int t = 0; t < trials; ++t) {
        SampleSpec spec;
        spec.method = Method::RD;
        spec.s = 0.2;  // one node of five
        spec.seed = static_cast<std::uint64_t>(t);
        auto result = sample_rd(star, spec);
        if (result.mapping[0]) ++center_hits;
    }
    const double frequency = static_cast<double>(center_hits) / trials;
    const double sigma = std::sqrt(0.25 / trials);  // ~0.0025
    char detail[96];
    std::snprintf(detail, sizeof(detail), "frequency %.4f, bound %.4f +- %.4f", frequency, 0.5,
                  3.0 * sigma);
    report(6, "degree-weighted draw picks the star center half the time",
           std::abs(frequency - 0.5) < 3.0 * sigma, detail);
}

// ---- 7: full-grid determinism ----------------------------------------------

struct TempTree {
    fs::path path;
    explicit TempTree(const std::string& tag) {
        path = fs::temp_directory_path() / ("netsimp_acceptance_" + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempTree() { fs::remove_all(path); }
};

std::string read_bytes(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void criterion_determinism() {
    const auto start = std::chrono::steady_clock::now();
    TempTree tree("determinism");
    bool pass = true;
    std::string detail;

    RunConfig config;
    const std::vector<Graph> graphs = {preferential_attachment_graph(1000, 2, 101),
                                       preferential_attachment_graph(1000, 3, 202),
                                       uniform_random_graph(1000, 0.004, 303)};
    const char* names[] = {"growth_a", "growth_b", "uniform_c"};
    const char* types[] = {"social", "web", "internet"};
    for (int i = 0; i < 3; ++i) {
        const fs::path file = tree.path / (std::string(names[i]) + ".txt");
        write_edge_list_file(graphs[i], file.string());
        config.datasets.push_back({names[i], file.string(), false, types[i], "1k"});
    }
    config.methods = {Method::RN, Method::RD, Method::RL, Method::BF, Method::CG};
    config.repetitions = 10;
    config.master_seed = 20240501;

    ResultStore first = run_experiment(config, 4);
    emit_reports(first, (tree.path / "out_a").string());
    ResultStore second = run_experiment(config, 2);
    emit_reports(second, (tree.path / "out_b").string());

    std::size_t files = 0;
    for (const auto& entry : fs::recursive_directory_iterator(tree.path / "out_a")) {
        if (!entry.is_regular_file()) continue;
        ++files;
        const auto relative = fs::relative(entry.path(), tree.path / "out_a");
        if (read_bytes(entry.path()) != read_bytes(tree.path / "out_b" / relative)) {
            pass = false;
            detail = "byte difference in " + relative.string();
        }
    }
    if (files < 6) {
        pass = false;
        detail = "report store incomplete";
    }
    // both analysis stages must actually be populated
    if (first.best_sizes.size() != 3 * 5) {
        pass = false;
        detail = "expected a best-size record per network and method";
    }
    if (!first.comparison || first.comparison->per_network.size() != 3 ||
        first.comparison->s != 0.1 || first.comparison->c != 2) {
        pass = false;
        detail = "method comparison at s=0.1, c=2 missing";
    } else {
        for (const auto& assessment : first.comparison->per_network)
            if (!assessment.verdicts || assessment.verdicts->best.empty()) {
                pass = false;
                detail = "missing verdicts";
            }
    }
    if (first.partial_failure || second.partial_failure) {
        pass = false;
        detail = "tasks failed";
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 300.0) {
        pass = false;
        detail = "took " + std::to_string(elapsed) + "s";
    }
    char timing[96];
    std::snprintf(timing, sizeof(timing), "two runs of %zu tasks in %.1fs", first.tasks.size(),
                  elapsed);
    report(7, "desk-scale grid run twice is byte-identical", pass,
           detail.empty() ? timing : detail);
}

// ---- 8: larger samples track the original degree distribution closer -------

void criterion_directional() {
    Graph g = preferential_attachment_graph(2000, 2, 777);
    auto original_degrees = degree_distribution(g, DegreeMode::Total);

    auto mean_d = [&](double s, double& variance) {
        const int reps = 30;
        std::vector<double> values;
        for (int rep = 0; rep < reps; ++rep) {
            SampleSpec spec;
            spec.method = Method::RN;
            spec.s = s;
            spec.seed = 1000 + static_cast<std::uint64_t>(rep);
            auto sample = sample_rn(g, spec);
            values.push_back(
                ks_d(original_degrees, degree_distribution(sample.graph, DegreeMode::Total)));
        }
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= values.size();
        variance = 0.0;
        for (double v : values) variance += (v - mean) * (v - mean);
        variance /= (values.size() - 1);
        return mean;
    };

    double var_small = 0.0, var_large = 0.0;
    const double d_small = mean_d(0.01, var_small);
    const double d_large = mean_d(0.5, var_large);
    const double standard_error = std::sqrt(var_small / 30 + var_large / 30);
    char detail[128];
    std::snprintf(detail, sizeof(detail), "mean D: %.3f at s=0.01 vs %.3f at s=0.5, 2SE=%.4f",
                  d_small, d_large, 2 * standard_error);
    report(8, "half-size samples beat 1%-size samples on degree distribution",
           d_large < d_small && (d_small - d_large) > 2.0 * standard_error, detail);
}

// ---- 9: measure invariances -------------------------------------------------

void criterion_measure_invariance() {
    Rng rng(0xACCE09);
    bool pass = true;
    std::string detail;
    for (int trial = 0; trial < 100 && pass; ++trial) {
        const std::size_t nc = 2 + rng.below(7), np = 1 + rng.below(6);
        std::vector<std::vector<std::optional<double>>> scores(
            nc, std::vector<std::optional<double>>(np));
        std::vector<Orientation> orientations(np);
        for (std::size_t p = 0; p < np; ++p)
            orientations[p] =
                rng.below(2) ? Orientation::HigherIsBetter : Orientation::LowerIsBetter;
        for (auto& row : scores)
            for (auto& cell : row) cell = 2.0 * rng.uniform01() - 1.0;
        std::vector<std::string> names(nc), props(np);
        for (std::size_t i = 0; i < nc; ++i) names[i] = "c" + std::to_string(i);
        for (std::size_t i = 0; i < np; ++i) props[i] = "p" + std::to_string(i);

        auto base = measure_a(rank_candidates(names, props, scores, orientations));

        auto rescaled = scores;
        for (auto& row : rescaled)
            for (std::size_t p = 0; p < np; ++p) {
                const double x = *row[p];
                row[p] = orientations[p] == Orientation::HigherIsBetter ? x * x * x : 2.0 * x;
            }
        auto transformed = measure_a(rank_candidates(names, props, rescaled, orientations));

        auto perm = rng.sample_without_replacement(static_cast<std::uint32_t>(np),
                                                   static_cast<std::uint32_t>(np));
        std::vector<std::vector<std::optional<double>>> permuted(
            nc, std::vector<std::optional<double>>(np));
        std::vector<Orientation> permuted_orientations(np);
        std::vector<std::string> permuted_props(np);
        for (std::size_t p = 0; p < np; ++p) {
            for (std::size_t c = 0; c < nc; ++c) permuted[c][p] = scores[c][perm[p]];
            permuted_orientations[p] = orientations[perm[p]];
            permuted_props[p] = props[perm[p]];
        }
        auto shuffled = measure_a(
            rank_candidates(names, permuted_props, permuted, permuted_orientations));

        for (std::size_t c = 0; c < nc; ++c) {
            if (std::abs(base[c] - transformed[c]) > 1e-12 ||
                std::abs(base[c] - shuffled[c]) > 1e-12) {
                pass = false;
                detail = "instability at trial " + std::to_string(trial);
            }
        }
    }
    report(9, "measure invariant under monotone rescaling and column permutation", pass, detail);
}

}  // namespace

int main() {
    criterion_rank_aggregation();
    criterion_betweenness_oracle();
    criterion_scalar_oracles();
    criterion_statistics();
    criterion_sampler_contracts();
    criterion_degree_bias();
    criterion_determinism();
    criterion_directional();
    criterion_measure_invariance();

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
