#include "netsimp/graph.hpp"

#include <algorithm>
#include <queue>

namespace netsimp {

Graph Graph::build(std::vector<std::string> labels, std::vector<Link> links, bool directed) {
    Graph g;
    g.directed_ = directed;
    g.labels_ = std::move(labels);
    g.links_ = std::move(links);
    g.index_.reserve(g.labels_.size());
    for (NodeId i = 0; i < g.labels_.size(); ++i) {
        auto [it, inserted] = g.index_.emplace(g.labels_[i], i);
        if (!inserted) throw GraphError("duplicate node label: " + g.labels_[i]);
    }
    for (const Link& l : g.links_) {
        if (l.u >= g.labels_.size() || l.v >= g.labels_.size())
            throw GraphError("link endpoint out of range");
    }
    g.rebuild_adjacency();
    return g;
}

void Graph::rebuild_adjacency() {
    adjacency_.assign(labels_.size(), {});
    in_adjacency_.clear();
    if (directed_) {
        in_adjacency_.assign(labels_.size(), {});
        for (const Link& l : links_) {
            adjacency_[l.u].push_back(l.v);
            in_adjacency_[l.v].push_back(l.u);
        }
        for (auto& a : in_adjacency_) std::sort(a.begin(), a.end());
    } else {
        for (const Link& l : links_) {
            adjacency_[l.u].push_back(l.v);
            if (l.u != l.v) adjacency_[l.v].push_back(l.u);
        }
    }
    for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

NodeId Graph::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) throw GraphError("unknown node label: " + std::string(label));
    return it->second;
}

bool Graph::has_label(std::string_view label) const {
    return index_.find(std::string(label)) != index_.end();
}

Graph Graph::undirected_simple() const {
    std::vector<Link> kept;
    kept.reserve(links_.size());
    for (const Link& l : links_) {
        if (l.u == l.v) continue;
        kept.push_back(l.u < l.v ? l : Link{l.v, l.u});
    }
    std::sort(kept.begin(), kept.end(),
              [](const Link& a, const Link& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); });
    kept.erase(std::unique(kept.begin(), kept.end(),
                           [](const Link& a, const Link& b) { return a.u == b.u && a.v == b.v; }),
               kept.end());
    return build(labels_, std::move(kept), false);
}

Graph Graph::simple() const {
    if (!directed_) return undirected_simple();
    std::vector<Link> kept;
    kept.reserve(links_.size());
    for (const Link& l : links_)
        if (l.u != l.v) kept.push_back(l);
    std::sort(kept.begin(), kept.end(),
              [](const Link& a, const Link& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); });
    kept.erase(std::unique(kept.begin(), kept.end(),
                           [](const Link& a, const Link& b) { return a.u == b.u && a.v == b.v; }),
               kept.end());
    return build(labels_, std::move(kept), true);
}

Graph Graph::induced(std::span<const NodeId> nodes) const {
    constexpr NodeId kAbsent = static_cast<NodeId>(-1);
    std::vector<NodeId> remap(labels_.size(), kAbsent);
    std::vector<std::string> sub_labels;
    sub_labels.reserve(nodes.size());
    for (NodeId v : nodes) {
        if (v >= labels_.size()) throw GraphError("induced: unknown node id");
        if (remap[v] != kAbsent) throw GraphError("induced: duplicate node id");
        remap[v] = static_cast<NodeId>(sub_labels.size());
        sub_labels.push_back(labels_[v]);
    }
    std::vector<Link> sub_links;
    for (const Link& l : links_) {
        if (remap[l.u] != kAbsent && remap[l.v] != kAbsent)
            sub_links.push_back({remap[l.u], remap[l.v]});
    }
    return build(std::move(sub_labels), std::move(sub_links), directed_);
}

bool Graph::identical_to(const Graph& other) const {
    if (directed_ != other.directed_ || labels_ != other.labels_) return false;
    if (links_.size() != other.links_.size()) return false;
    auto canonical = [this](const Graph& g) {
        std::vector<std::pair<NodeId, NodeId>> c;
        c.reserve(g.links_.size());
        for (const Link& l : g.links_) {
            if (!directed_ && l.v < l.u)
                c.emplace_back(l.v, l.u);
            else
                c.emplace_back(l.u, l.v);
        }
        std::sort(c.begin(), c.end());
        return c;
    };
    return canonical(*this) == canonical(other);
}

ComponentReport components(const Graph& g) {
    const std::size_t n = g.node_count();
    ComponentReport report;
    if (n == 0) return report;

    // undirected reachability; for directed graphs walk both arc directions
    std::vector<int> comp(n, -1);
    std::vector<std::size_t> sizes;
    std::vector<NodeId> queue;
    for (NodeId start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        const int id = static_cast<int>(sizes.size());
        std::size_t size = 0;
        queue.clear();
        queue.push_back(start);
        comp[start] = id;
        while (!queue.empty()) {
            NodeId v = queue.back();
            queue.pop_back();
            ++size;
            auto visit = [&](NodeId w) {
                if (comp[w] < 0) {
                    comp[w] = id;
                    queue.push_back(w);
                }
            };
            for (NodeId w : g.neighbors(v)) visit(w);
            if (g.directed())
                for (NodeId w : g.in_neighbors(v)) visit(w);
        }
        sizes.push_back(size);
    }

    // components were discovered in order of their minimum node index, so the
    // first maximal one is the tie-break winner
    int best = 0;
    for (int i = 1; i < static_cast<int>(sizes.size()); ++i)
        if (sizes[i] > sizes[static_cast<std::size_t>(best)]) best = i;

    report.component_count = sizes.size();
    report.component_sizes = sizes;
    for (NodeId v = 0; v < n; ++v)
        if (comp[v] == best) report.lwcc_nodes.push_back(v);
    report.lwcc_fraction = static_cast<double>(report.lwcc_nodes.size()) / static_cast<double>(n);
    return report;
}

}  // namespace netsimp
