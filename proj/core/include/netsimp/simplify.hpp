#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netsimp/graph.hpp"

namespace netsimp {

enum class Method { RN, RD, RL, BF, CG, BP };

const char* method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);
bool is_sampling(Method m);

struct SampleSpec {
    Method method = Method::RN;  // RN, RD, RL or BF
    double s = 0.5;              // target node fraction in (0,1]
    std::uint64_t seed = 0;

    // ceil(s*n), nudged so decimal fractions of exact integers do not round
    // up (0.1 * 30 must give 3, not 4); clamped to [1, n]
    std::uint32_t target_count(std::size_t n) const;
};

struct MergeSpec {
    Method method = Method::CG;  // CG or BP
    int box_radius = 2;          // CG only, hops, >= 1
    std::uint64_t seed = 0;
    int max_propagation_sweeps = 100;  // BP only
};

enum class MappingKind { SampledFlag, SupernodeId };

// A reduced graph plus how it was obtained. For sampling methods, mapping[v]
// is 1 when original node v was kept; for merging methods it is the supernode
// id of v (cells numbered by first appearance in node order).
struct SimplifiedNetwork {
    Graph graph;
    Method method = Method::RN;
    double size_param = 0.0;  // s for sampling, box radius for CG, 0 for BP
    std::uint64_t seed = 0;
    MappingKind mapping_kind = MappingKind::SampledFlag;
    std::vector<std::uint32_t> mapping;  // one entry per original node

    // set when a contract could not be met as stated
    bool undersized = false;            // RL ran out of links below target
    bool lost_connectivity = false;     // BF had to restart in a new component
    bool zero_weight_fallback = false;  // RD exhausted nonzero degrees

    std::size_t kept_node_count() const { return graph.node_count(); }
    double achieved_fraction() const {
        return mapping.empty() ? 0.0
                               : static_cast<double>(graph.node_count()) /
                                     static_cast<double>(mapping.size());
    }
};

// Uniform random node selection: exactly target_count nodes, induced
// subgraph. Directed inputs keep their directed links.
SimplifiedNetwork sample_rn(const Graph& g, const SampleSpec& spec);

// Degree-proportional node selection: nodes drawn sequentially without
// replacement, each draw weighted by the node's degree in the original graph
// (undirected simple view, fixed before drawing). If every remaining weight
// is zero before the target is reached the rest are drawn uniformly and the
// result is flagged.
SimplifiedNetwork sample_rd(const Graph& g, const SampleSpec& spec);

// Uniform random link selection: links drawn without replacement until the
// endpoint set first reaches the node target; induced subgraph on that set.
SimplifiedNetwork sample_rl(const Graph& g, const SampleSpec& spec);

// Breadth-first sampling over the undirected simple view from a uniformly
// random start, neighbors visited in shuffled order; restarts from a fresh
// unvisited node when a component is exhausted (flagged, since the result is
// then disconnected).
SimplifiedNetwork sample_bf(const Graph& g, const SampleSpec& spec);

// sample_bf with a fixed start node instead of a random one
SimplifiedNetwork sample_bf_from(const Graph& g, const SampleSpec& spec, NodeId start);

// Cluster-growing contraction: repeatedly seed a box at a uniformly random
// uncovered node, claim every uncovered node within box_radius hops of the
// seed (distances in the full graph), and merge each box into a supernode.
SimplifiedNetwork merge_cg(const Graph& g, const MergeSpec& spec);

// Community contraction: cells found by detect_communities merged into
// supernodes.
SimplifiedNetwork merge_bp(const Graph& g, const MergeSpec& spec);

// Label propagation over the undirected simple view: nodes visited in random
// order adopt the most frequent neighbor label, random tie-break when the
// current label is not among the leaders; label classes are split into
// connected cells afterwards. Returns a cell id per node, cells numbered by
// first appearance. Deterministic for a fixed seed.
std::vector<std::uint32_t> detect_communities(const Graph& g, std::uint64_t seed,
                                              int max_sweeps = 100);

// Contract the cells of a total partition: one supernode per cell, a single
// superlink wherever any original link crosses two cells, no self-loops.
// Supernodes take the label of their smallest-index member. partition values
// equal to kUnassigned raise an error.
constexpr std::uint32_t kUnassigned = static_cast<std::uint32_t>(-1);
SimplifiedNetwork merge_by_partition(const Graph& g, const std::vector<std::uint32_t>& partition);

// One row per original node: label, kept flag or supernode id, method,
// size parameter, seed.
void write_mapping_csv(const Graph& original, const SimplifiedNetwork& simplified,
                       std::ostream& out);

}  // namespace netsimp
