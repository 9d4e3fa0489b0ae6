#include "netsimp/generators.hpp"

#include <cmath>
#include <string>

#include "netsimp/rng.hpp"

namespace netsimp {

namespace {

std::vector<std::string> numeric_labels(std::uint32_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

}  // namespace

Graph uniform_random_graph(std::uint32_t n, double link_probability, std::uint64_t seed) {
    if (n < 2) throw GraphError("uniform_random_graph: n must be >= 2");
    if (!(link_probability > 0.0) || link_probability > 1.0)
        throw GraphError("uniform_random_graph: link probability must be in (0,1]");

    Rng rng(seed);
    std::vector<Link> links;
    std::vector<std::uint32_t> degree(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (rng.uniform01() < link_probability) {
                links.push_back({i, j});
                ++degree[i];
                ++degree[j];
            }
        }
    }
    for (std::uint32_t v = 0; v < n; ++v) {
        if (degree[v] > 0) continue;
        std::uint32_t w = static_cast<std::uint32_t>(rng.below(n - 1));
        if (w >= v) ++w;
        links.push_back({v, w});
        ++degree[v];
        ++degree[w];
    }
    return Graph::build(numeric_labels(n), std::move(links), false);
}

Graph preferential_attachment_graph(std::uint32_t n, std::uint32_t attachment_degree,
                                    std::uint64_t seed) {
    const std::uint32_t k = attachment_degree;
    if (k < 1) throw GraphError("preferential_attachment_graph: attachment degree must be >= 1");
    if (n < k + 1) throw GraphError("preferential_attachment_graph: n must be >= k+1");

    Rng rng(seed);
    std::vector<Link> links;
    // endpoint multiset: each stored id appears once per incident link
    std::vector<std::uint32_t> endpoints;
    for (std::uint32_t i = 0; i < k + 1; ++i) {
        for (std::uint32_t j = i + 1; j < k + 1; ++j) {
            links.push_back({i, j});
            endpoints.push_back(i);
            endpoints.push_back(j);
        }
    }
    std::vector<std::uint32_t> chosen;
    for (std::uint32_t v = k + 1; v < n; ++v) {
        chosen.clear();
        while (chosen.size() < k) {
            std::uint32_t target = endpoints[rng.index(endpoints.size())];
            bool duplicate = false;
            for (std::uint32_t c : chosen) duplicate = duplicate || (c == target);
            if (!duplicate) chosen.push_back(target);
        }
        for (std::uint32_t target : chosen) {
            links.push_back({target, v});
            endpoints.push_back(target);
            endpoints.push_back(v);
        }
    }
    return Graph::build(numeric_labels(n), std::move(links), false);
}

Graph generate_synthetic(SyntheticModel model, std::uint32_t n, double param, std::uint64_t seed) {
    switch (model) {
        case SyntheticModel::UniformRandom:
            return uniform_random_graph(n, param, seed);
        case SyntheticModel::PreferentialAttachment: {
            double rounded = std::round(param);
            if (rounded != param || rounded < 1.0)
                throw GraphError("generate_synthetic: attachment degree must be a positive integer");
            return preferential_attachment_graph(n, static_cast<std::uint32_t>(rounded), seed);
        }
    }
    throw GraphError("generate_synthetic: unknown model");
}

}  // namespace netsimp
