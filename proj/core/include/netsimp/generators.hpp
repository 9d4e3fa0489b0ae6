#pragma once

#include <cstdint>

#include "netsimp/graph.hpp"

namespace netsimp {

// G(n,p): every unordered pair linked independently with probability p.
// Nodes left isolated by the coin flips are attached to one uniformly random
// other node so no isolates are emitted. p in (0,1], n >= 2.
Graph uniform_random_graph(std::uint32_t n, double link_probability, std::uint64_t seed);

// Growth with degree-proportional attachment: a (k+1)-clique seed, then each
// new node links to k distinct existing nodes picked with probability
// proportional to current degree. k >= 1, n >= k+1.
Graph preferential_attachment_graph(std::uint32_t n, std::uint32_t attachment_degree,
                                    std::uint64_t seed);

enum class SyntheticModel { UniformRandom, PreferentialAttachment };

Graph generate_synthetic(SyntheticModel model, std::uint32_t n, double param, std::uint64_t seed);

}  // namespace netsimp
