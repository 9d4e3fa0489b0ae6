#include "netsimp/netprops.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "netsimp/rng.hpp"

namespace netsimp {

std::vector<double> degree_distribution(const Graph& g, DegreeMode mode) {
    const std::size_t n = g.node_count();
    std::vector<double> out(n, 0.0);
    if (mode == DegreeMode::Total) {
        Graph simple = g.undirected_simple();
        for (NodeId v = 0; v < n; ++v) out[v] = static_cast<double>(simple.neighbors(v).size());
        return out;
    }
    if (!g.directed()) throw GraphError("degree_distribution: in/out modes need a directed graph");
    Graph simple = g.simple();
    for (NodeId v = 0; v < n; ++v) {
        out[v] = static_cast<double>(mode == DegreeMode::In ? simple.in_neighbors(v).size()
                                                            : simple.neighbors(v).size());
    }
    return out;
}

namespace {

// count of links among v's neighbors, given sorted adjacency
std::size_t links_among_neighbors(const Graph& simple, NodeId v, std::vector<char>& mark) {
    auto nv = simple.neighbors(v);
    for (NodeId u : nv) mark[u] = 1;
    std::size_t twice = 0;
    for (NodeId u : nv)
        for (NodeId w : simple.neighbors(u))
            if (mark[w]) ++twice;
    for (NodeId u : nv) mark[u] = 0;
    return twice / 2;
}

}  // namespace

std::vector<double> local_clustering(const Graph& g) {
    Graph simple = g.undirected_simple();
    const std::size_t n = simple.node_count();
    std::vector<double> out(n, 0.0);
    std::vector<char> mark(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        const std::size_t k = simple.neighbors(v).size();
        if (k < 2) continue;
        const std::size_t closed = links_among_neighbors(simple, v, mark);
        out[v] = static_cast<double>(closed) / (0.5 * static_cast<double>(k) *
                                                static_cast<double>(k - 1));
    }
    return out;
}

namespace {

// single-source shortest-path dependency accumulation (Brandes)
void accumulate_from_source(const Graph& simple, NodeId source, std::vector<double>& bc,
                            std::vector<int>& dist, std::vector<double>& sigma,
                            std::vector<double>& delta, std::vector<NodeId>& order) {
    const std::size_t n = simple.node_count();
    dist.assign(n, -1);
    sigma.assign(n, 0.0);
    delta.assign(n, 0.0);
    order.clear();

    dist[source] = 0;
    sigma[source] = 1.0;
    std::size_t head = 0;
    order.push_back(source);
    while (head < order.size()) {
        NodeId v = order[head++];
        for (NodeId w : simple.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                order.push_back(w);
            }
            if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
        }
    }
    for (std::size_t i = order.size(); i-- > 1;) {
        NodeId w = order[i];
        for (NodeId v : simple.neighbors(w))
            if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        if (w != source) bc[w] += delta[w];
    }
}

constexpr std::size_t kSourceChunks = 32;

}  // namespace

std::vector<double> betweenness(const Graph& g, const BetweennessOptions& options) {
    Graph simple = g.undirected_simple();
    const std::size_t n = simple.node_count();
    std::vector<double> bc(n, 0.0);
    if (n < 3) return bc;

    std::vector<NodeId> sources;
    double scale = 1.0;
    if (options.pivots && *options.pivots == 0)
        throw GraphError("betweenness: pivot count must be >= 1");
    if (options.pivots && *options.pivots < n) {
        Rng rng(options.seed);
        auto picked = rng.sample_without_replacement(static_cast<std::uint32_t>(n),
                                                     *options.pivots);
        std::sort(picked.begin(), picked.end());
        sources.assign(picked.begin(), picked.end());
        scale = static_cast<double>(n) / static_cast<double>(sources.size());
    } else {
        sources.resize(n);
        for (NodeId v = 0; v < n; ++v) sources[v] = v;
    }

    // fixed chunk partition of the source list; chunk results are summed in
    // chunk order, so the reduction is identical for any worker count
    std::vector<std::vector<double>> chunk_bc(kSourceChunks);
    auto run_chunk = [&](std::size_t chunk) {
        auto& local = chunk_bc[chunk];
        local.assign(n, 0.0);
        std::vector<int> dist;
        std::vector<double> sigma, delta;
        std::vector<NodeId> order;
        for (std::size_t i = chunk; i < sources.size(); i += kSourceChunks)
            accumulate_from_source(simple, sources[i], local, dist, sigma, delta, order);
    };

    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    if (threads <= 1 || n < 128) {
        for (std::size_t chunk = 0; chunk < kSourceChunks; ++chunk) run_chunk(chunk);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        unsigned count = std::min<unsigned>(threads, kSourceChunks);
        for (unsigned t = 0; t < count; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t chunk = next.fetch_add(1);
                    if (chunk >= kSourceChunks) return;
                    run_chunk(chunk);
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    for (std::size_t chunk = 0; chunk < kSourceChunks; ++chunk)
        for (std::size_t v = 0; v < n; ++v) bc[v] += chunk_bc[chunk][v];

    // each unordered pair was seen from both endpoints
    const double pair_norm =
        0.5 * static_cast<double>(n - 1) * static_cast<double>(n - 2);
    for (double& value : bc) value = value * scale * 0.5 / pair_norm;
    return bc;
}

double density(const Graph& g) {
    Graph simple = g.undirected_simple();
    const double n = static_cast<double>(simple.node_count());
    if (simple.node_count() <= 1) return 0.0;
    return 2.0 * static_cast<double>(simple.link_count()) / (n * (n - 1.0));
}

std::optional<double> degree_mixing(const Graph& g) {
    Graph simple = g.undirected_simple();
    if (simple.link_count() == 0) return std::nullopt;
    std::vector<double> degree(simple.node_count());
    for (NodeId v = 0; v < simple.node_count(); ++v)
        degree[v] = static_cast<double>(simple.neighbors(v).size());

    // both orientations of every link; x and y are then symmetric
    double sum_x = 0.0, sum_xx = 0.0, sum_xy = 0.0;
    const double pairs = 2.0 * static_cast<double>(simple.link_count());
    for (const Link& l : simple.links()) {
        const double du = degree[l.u], dv = degree[l.v];
        sum_x += du + dv;
        sum_xx += du * du + dv * dv;
        sum_xy += 2.0 * du * dv;
    }
    const double mean = sum_x / pairs;
    const double var = sum_xx / pairs - mean * mean;
    const double cov = sum_xy / pairs - mean * mean;
    if (var <= 0.0) return std::nullopt;
    return cov / var;
}

std::optional<double> transitivity(const Graph& g) {
    Graph simple = g.undirected_simple();
    const std::size_t n = simple.node_count();
    std::vector<char> mark(n, 0);
    double closed = 0.0, triples = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const std::size_t k = simple.neighbors(v).size();
        if (k < 2) continue;
        triples += 0.5 * static_cast<double>(k) * static_cast<double>(k - 1);
        closed += static_cast<double>(links_among_neighbors(simple, v, mark));
    }
    if (triples == 0.0) return std::nullopt;
    return closed / triples;
}

PropertyReport full_report(const Graph& g, const BetweennessOptions& options) {
    PropertyReport report;
    report.density = density(g);
    report.degree_mixing = degree_mixing(g);
    report.transitivity = transitivity(g);
    report.degree = degree_distribution(g, DegreeMode::Total);
    if (g.directed()) {
        report.in_degree = degree_distribution(g, DegreeMode::In);
        report.out_degree = degree_distribution(g, DegreeMode::Out);
    }
    report.clustering = local_clustering(g);
    report.betweenness = betweenness(g, options);
    return report;
}

}  // namespace netsimp
