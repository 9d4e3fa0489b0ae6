#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace netsimp {

using NodeId = std::uint32_t;

struct Link {
    NodeId u;
    NodeId v;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Immutable node/link structure. Nodes carry dense indices 0..n-1 plus an
// external string label assigned in first-appearance order. A graph may hold
// self-loops and duplicate links as loaded; the simple views collapse them.
// Safe for concurrent reads once constructed.
class Graph {
public:
    Graph() = default;

    // links refer to dense indices into labels; labels must be unique
    static Graph build(std::vector<std::string> labels, std::vector<Link> links, bool directed);

    std::size_t node_count() const { return labels_.size(); }
    std::size_t link_count() const { return links_.size(); }
    bool directed() const { return directed_; }

    // out-neighbors when directed, all neighbors when undirected
    std::span<const NodeId> neighbors(NodeId v) const {
        return {adjacency_[v].data(), adjacency_[v].size()};
    }
    // directed graphs only
    std::span<const NodeId> in_neighbors(NodeId v) const {
        if (!directed_) throw GraphError("in_neighbors: graph is undirected");
        return {in_adjacency_[v].data(), in_adjacency_[v].size()};
    }

    std::span<const Link> links() const { return {links_.data(), links_.size()}; }

    const std::string& label(NodeId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    NodeId index_of(std::string_view label) const;
    bool has_label(std::string_view label) const;

    // Undirected graph without self-loops or duplicate links; every directed
    // or multi link collapses to at most one undirected link. Node set,
    // indices and labels are preserved.
    Graph undirected_simple() const;

    // Same directedness, self-loops and duplicate links removed.
    Graph simple() const;

    // Subgraph on the given nodes with every link of this graph whose both
    // endpoints are kept. Labels carry over; dense indices are reassigned in
    // the order given.
    Graph induced(std::span<const NodeId> nodes) const;

    bool identical_to(const Graph& other) const;

private:
    bool directed_ = false;
    std::vector<Link> links_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<std::vector<NodeId>> in_adjacency_;  // directed only
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;

    void rebuild_adjacency();
};

struct ComponentReport {
    std::size_t component_count = 0;
    std::vector<NodeId> lwcc_nodes;  // largest weakly connected component
    double lwcc_fraction = 0.0;      // |lwcc| / n
    std::vector<std::size_t> component_sizes;
};

// Weakly connected components (direction ignored). The largest component
// wins ties by smallest minimum node index.
ComponentReport components(const Graph& g);

}  // namespace netsimp
