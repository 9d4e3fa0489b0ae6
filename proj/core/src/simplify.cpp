#include "netsimp/simplify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <ostream>

#include "netsimp/format.hpp"
#include "netsimp/rng.hpp"

namespace netsimp {

const char* method_name(Method m) {
    switch (m) {
        case Method::RN: return "RN";
        case Method::RD: return "RD";
        case Method::RL: return "RL";
        case Method::BF: return "BF";
        case Method::CG: return "CG";
        case Method::BP: return "BP";
    }
    return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
    std::string upper(name);
    for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (upper == "RN") return Method::RN;
    if (upper == "RD") return Method::RD;
    if (upper == "RL") return Method::RL;
    if (upper == "BF") return Method::BF;
    if (upper == "CG") return Method::CG;
    if (upper == "BP") return Method::BP;
    return std::nullopt;
}

bool is_sampling(Method m) {
    return m == Method::RN || m == Method::RD || m == Method::RL || m == Method::BF;
}

std::uint32_t SampleSpec::target_count(std::size_t n) const {
    if (!(s > 0.0) || s > 1.0) throw GraphError("sample spec: s must be in (0,1]");
    if (n == 0) throw GraphError("sample spec: empty graph");
    double raw = std::ceil(s * static_cast<double>(n) - 1e-9);
    auto t = static_cast<std::uint32_t>(raw);
    if (t < 1) t = 1;
    if (t > n) t = static_cast<std::uint32_t>(n);
    return t;
}

namespace {

// input view for the node/link sampling methods: directedness kept, no
// self-loops or duplicate links
Graph sampling_view(const Graph& g) { return g.simple(); }

SimplifiedNetwork finish_sample(const Graph& view, std::vector<NodeId> picked, Method method,
                                const SampleSpec& spec) {
    std::sort(picked.begin(), picked.end());
    SimplifiedNetwork result;
    result.graph = view.induced(picked);
    result.method = method;
    result.size_param = spec.s;
    result.seed = spec.seed;
    result.mapping_kind = MappingKind::SampledFlag;
    result.mapping.assign(view.node_count(), 0);
    for (NodeId v : picked) result.mapping[v] = 1;
    return result;
}

}  // namespace

SimplifiedNetwork sample_rn(const Graph& g, const SampleSpec& spec) {
    Graph view = sampling_view(g);
    const auto n = static_cast<std::uint32_t>(view.node_count());
    const std::uint32_t t = spec.target_count(n);
    Rng rng(spec.seed);
    auto picked = rng.sample_without_replacement(n, t);
    return finish_sample(view, std::move(picked), Method::RN, spec);
}

SimplifiedNetwork sample_rd(const Graph& g, const SampleSpec& spec) {
    Graph view = sampling_view(g);
    Graph undirected = g.undirected_simple();
    const auto n = static_cast<std::uint32_t>(view.node_count());
    const std::uint32_t t = spec.target_count(n);
    if (view.link_count() == 0) throw GraphError("sample_rd: graph has no links");

    std::vector<std::uint64_t> weight(n);
    std::uint64_t total = 0;
    for (NodeId v = 0; v < n; ++v) {
        weight[v] = undirected.neighbors(v).size();
        total += weight[v];
    }

    Rng rng(spec.seed);
    std::vector<NodeId> picked;
    picked.reserve(t);
    bool fallback = false;
    std::vector<char> taken(n, 0);
    while (picked.size() < t) {
        if (total == 0) {
            // only zero-degree nodes remain; finish with uniform draws
            fallback = true;
            std::vector<NodeId> rest;
            for (NodeId v = 0; v < n; ++v)
                if (!taken[v]) rest.push_back(v);
            rng.shuffle(rest);
            for (std::size_t i = 0; picked.size() < t; ++i) {
                taken[rest[i]] = 1;
                picked.push_back(rest[i]);
            }
            break;
        }
        std::uint64_t r = rng.below(total);
        NodeId chosen = 0;
        for (NodeId v = 0; v < n; ++v) {
            if (taken[v]) continue;
            if (r < weight[v]) {
                chosen = v;
                break;
            }
            r -= weight[v];
        }
        taken[chosen] = 1;
        total -= weight[chosen];
        picked.push_back(chosen);
    }
    auto result = finish_sample(view, std::move(picked), Method::RD, spec);
    result.zero_weight_fallback = fallback;
    return result;
}

SimplifiedNetwork sample_rl(const Graph& g, const SampleSpec& spec) {
    Graph view = sampling_view(g);
    const auto n = static_cast<std::uint32_t>(view.node_count());
    const std::uint32_t t = spec.target_count(n);
    if (view.link_count() == 0) throw GraphError("sample_rl: graph has no links");

    std::vector<std::size_t> link_order(view.link_count());
    std::iota(link_order.begin(), link_order.end(), 0);
    Rng rng(spec.seed);

    std::vector<char> in_set(n, 0);
    std::vector<NodeId> picked;
    auto links = view.links();
    bool undersized = true;
    for (std::size_t i = 0; i < link_order.size(); ++i) {
        // draw the next link uniformly from the undrawn tail
        std::size_t j = i + rng.index(link_order.size() - i);
        std::swap(link_order[i], link_order[j]);
        const Link& l = links[link_order[i]];
        for (NodeId v : {l.u, l.v}) {
            if (!in_set[v]) {
                in_set[v] = 1;
                picked.push_back(v);
            }
        }
        if (picked.size() >= t) {
            undersized = false;
            break;
        }
    }
    auto result = finish_sample(view, std::move(picked), Method::RL, spec);
    result.undersized = undersized;
    return result;
}

namespace {

SimplifiedNetwork bf_sample(const Graph& g, const SampleSpec& spec, std::optional<NodeId> start) {
    Graph view = g.undirected_simple();
    const auto n = static_cast<std::uint32_t>(view.node_count());
    const std::uint32_t t = spec.target_count(n);

    Rng rng(spec.seed);
    std::vector<char> visited(n, 0);
    std::vector<NodeId> picked;
    picked.reserve(t);
    std::vector<NodeId> queue;
    std::vector<NodeId> shuffled;
    bool restarted = false;

    auto pick_unvisited = [&]() -> NodeId {
        std::uint32_t remaining = n - static_cast<std::uint32_t>(picked.size());
        std::uint32_t skip = static_cast<std::uint32_t>(rng.below(remaining));
        for (NodeId v = 0; v < n; ++v) {
            if (visited[v]) continue;
            if (skip == 0) return v;
            --skip;
        }
        throw GraphError("sample_bf: internal: no unvisited node");
    };

    NodeId seed_node = start ? *start : pick_unvisited();
    visited[seed_node] = 1;
    picked.push_back(seed_node);
    queue.push_back(seed_node);
    std::size_t head = 0;
    while (picked.size() < t) {
        if (head == queue.size()) {
            // component exhausted; continue from a fresh random node
            restarted = true;
            NodeId fresh = pick_unvisited();
            visited[fresh] = 1;
            picked.push_back(fresh);
            queue.push_back(fresh);
            continue;
        }
        NodeId v = queue[head++];
        auto nbrs = view.neighbors(v);
        shuffled.assign(nbrs.begin(), nbrs.end());
        rng.shuffle(shuffled);
        for (NodeId w : shuffled) {
            if (visited[w]) continue;
            visited[w] = 1;
            picked.push_back(w);
            queue.push_back(w);
            if (picked.size() == t) break;
        }
    }
    auto result = finish_sample(view, std::move(picked), Method::BF, spec);
    result.lost_connectivity = restarted;
    return result;
}

}  // namespace

SimplifiedNetwork sample_bf(const Graph& g, const SampleSpec& spec) {
    return bf_sample(g, spec, std::nullopt);
}

SimplifiedNetwork sample_bf_from(const Graph& g, const SampleSpec& spec, NodeId start) {
    return bf_sample(g, spec, start);
}

SimplifiedNetwork merge_cg(const Graph& g, const MergeSpec& spec) {
    if (spec.box_radius < 1) throw GraphError("merge_cg: box radius must be >= 1");
    Graph view = g.undirected_simple();
    const auto n = static_cast<std::uint32_t>(view.node_count());
    if (n == 0) throw GraphError("merge_cg: empty graph");

    Rng rng(spec.seed);
    std::vector<std::uint32_t> box(n, kUnassigned);
    std::vector<NodeId> uncovered(n);
    std::iota(uncovered.begin(), uncovered.end(), 0);
    std::vector<int> dist(n);
    std::vector<NodeId> queue;
    std::uint32_t next_box = 0;

    while (!uncovered.empty()) {
        NodeId seed_node = uncovered[rng.index(uncovered.size())];
        // BFS through the full graph; covered nodes relay distance but stay
        // in their own box
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(seed_node);
        dist[seed_node] = 0;
        box[seed_node] = next_box;
        std::size_t head = 0;
        while (head < queue.size()) {
            NodeId v = queue[head++];
            if (dist[v] == spec.box_radius) continue;
            for (NodeId w : view.neighbors(v)) {
                if (dist[w] >= 0) continue;
                dist[w] = dist[v] + 1;
                queue.push_back(w);
                if (box[w] == kUnassigned) box[w] = next_box;
            }
        }
        ++next_box;
        std::erase_if(uncovered, [&](NodeId v) { return box[v] != kUnassigned; });
    }

    auto result = merge_by_partition(view, box);
    result.method = Method::CG;
    result.size_param = spec.box_radius;
    result.seed = spec.seed;
    return result;
}

std::vector<std::uint32_t> detect_communities(const Graph& g, std::uint64_t seed, int max_sweeps) {
    Graph view = g.undirected_simple();
    const auto n = static_cast<std::uint32_t>(view.node_count());
    if (n == 0) throw GraphError("detect_communities: empty graph");

    Rng rng(seed);
    std::vector<std::uint32_t> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);

    std::vector<std::uint32_t> count(n, 0);
    std::vector<std::uint32_t> touched;
    std::vector<std::uint32_t> leaders;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        rng.shuffle(order);
        bool changed = false;
        for (NodeId v : order) {
            auto nbrs = view.neighbors(v);
            if (nbrs.empty()) continue;
            touched.clear();
            std::uint32_t best = 0;
            for (NodeId w : nbrs) {
                std::uint32_t l = label[w];
                if (count[l]++ == 0) touched.push_back(l);
                best = std::max(best, count[l]);
            }
            leaders.clear();
            for (std::uint32_t l : touched)
                if (count[l] == best) leaders.push_back(l);
            for (std::uint32_t l : touched) count[l] = 0;

            bool keep = std::find(leaders.begin(), leaders.end(), label[v]) != leaders.end();
            if (!keep) {
                std::sort(leaders.begin(), leaders.end());
                label[v] = leaders[rng.index(leaders.size())];
                changed = true;
            }
        }
        if (!changed) break;
    }

    // split label classes that are not internally connected
    std::vector<std::uint32_t> cell(n, kUnassigned);
    std::uint32_t next_cell = 0;
    std::vector<NodeId> queue;
    for (NodeId v = 0; v < n; ++v) {
        if (cell[v] != kUnassigned) continue;
        const std::uint32_t want = label[v];
        queue.clear();
        queue.push_back(v);
        cell[v] = next_cell;
        std::size_t head = 0;
        while (head < queue.size()) {
            NodeId u = queue[head++];
            for (NodeId w : view.neighbors(u)) {
                if (cell[w] == kUnassigned && label[w] == want) {
                    cell[w] = next_cell;
                    queue.push_back(w);
                }
            }
        }
        ++next_cell;
    }
    return cell;
}

SimplifiedNetwork merge_bp(const Graph& g, const MergeSpec& spec) {
    auto cells = detect_communities(g, spec.seed, spec.max_propagation_sweeps);
    auto result = merge_by_partition(g, cells);
    result.method = Method::BP;
    result.size_param = 0.0;
    result.seed = spec.seed;
    return result;
}

SimplifiedNetwork merge_by_partition(const Graph& g, const std::vector<std::uint32_t>& partition) {
    Graph view = g.undirected_simple();
    const std::size_t n = view.node_count();
    if (partition.size() != n) throw GraphError("merge_by_partition: partition size != node count");

    // renumber cells by first appearance so ids are dense and stable
    std::vector<std::uint32_t> dense(n, kUnassigned);
    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    std::vector<std::string> super_labels;
    for (NodeId v = 0; v < n; ++v) {
        if (partition[v] == kUnassigned)
            throw GraphError("merge_by_partition: node " + view.label(v) + " unassigned");
        auto [it, inserted] = remap.emplace(partition[v],
                                            static_cast<std::uint32_t>(super_labels.size()));
        if (inserted) super_labels.push_back(view.label(v));
        dense[v] = it->second;
    }

    std::vector<std::pair<NodeId, NodeId>> crossing;
    for (const Link& l : view.links()) {
        std::uint32_t cu = dense[l.u], cv = dense[l.v];
        if (cu == cv) continue;
        crossing.emplace_back(std::min(cu, cv), std::max(cu, cv));
    }
    std::sort(crossing.begin(), crossing.end());
    crossing.erase(std::unique(crossing.begin(), crossing.end()), crossing.end());
    std::vector<Link> super_links;
    super_links.reserve(crossing.size());
    for (auto [u, v] : crossing) super_links.push_back({u, v});

    SimplifiedNetwork result;
    result.graph = Graph::build(std::move(super_labels), std::move(super_links), false);
    result.method = Method::BP;
    result.mapping_kind = MappingKind::SupernodeId;
    result.mapping = std::move(dense);
    return result;
}

void write_mapping_csv(const Graph& original, const SimplifiedNetwork& simplified,
                       std::ostream& out) {
    if (simplified.mapping.size() != original.node_count())
        throw GraphError("write_mapping_csv: mapping does not match original graph");
    out << "original_label,kept_flag_or_supernode_id,method,s_or_c,seed\n";
    const std::string size = format_double(simplified.size_param);
    for (NodeId v = 0; v < original.node_count(); ++v) {
        out << original.label(v) << ',' << simplified.mapping[v] << ','
            << method_name(simplified.method) << ',' << size << ',' << simplified.seed << '\n';
    }
}

}  // namespace netsimp
