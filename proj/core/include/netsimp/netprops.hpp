#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netsimp/graph.hpp"

namespace netsimp {

enum class DegreeMode { Total, In, Out };

// Per-node degrees in dense-index order. Total counts distinct neighbors on
// the undirected simple view; In/Out count arcs on the directed simple view
// and require a directed graph.
std::vector<double> degree_distribution(const Graph& g, DegreeMode mode);

// Watts-Strogatz local clustering on the undirected simple view: links among
// neighbors over k(k-1)/2 for degree k >= 2, otherwise 0.
std::vector<double> local_clustering(const Graph& g);

struct BetweennessOptions {
    // when set, accumulate shortest-path dependencies from this many sampled
    // source nodes and scale by n / pivots instead of visiting every source
    std::optional<std::uint32_t> pivots;
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0 = hardware concurrency
};

// Shortest-path betweenness on the undirected simple view, normalized by
// (n-1)(n-2)/2; graphs with n < 3 score all zeros. Accumulation runs over a
// fixed chunking of the source list, so results are identical for any thread
// count, and pivots = n reproduces the exact values bit for bit.
std::vector<double> betweenness(const Graph& g, const BetweennessOptions& options = {});

// 2m / n(n-1) on the undirected simple view; 0 when n <= 1.
double density(const Graph& g);

// Pearson correlation of endpoint degrees with both link orientations
// included, on the undirected simple view. Undefined when the degree
// variance is zero (regular graphs) or the graph has no links.
std::optional<double> degree_mixing(const Graph& g);

// 3 * triangles / connected triples on the undirected simple view; undefined
// when there are no connected triples.
std::optional<double> transitivity(const Graph& g);

struct PropertyReport {
    double density = 0.0;
    std::optional<double> degree_mixing;
    std::optional<double> transitivity;
    std::vector<double> degree;
    std::optional<std::vector<double>> in_degree;   // directed graphs only
    std::optional<std::vector<double>> out_degree;  // directed graphs only
    std::vector<double> clustering;
    std::vector<double> betweenness;
};

// All applicable properties of a graph; undefined values stay undefined.
PropertyReport full_report(const Graph& g, const BetweennessOptions& options = {});

}  // namespace netsimp
