#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hcost/graph.hpp"

namespace hcost {

// Path 0-1-...-(n-1) with unit weights.
Graph gen_line(std::int32_t n);

// Complete graph with unit weights.
Graph gen_clique(std::int32_t n);

struct LabeledGraph {
  Graph graph;
  std::vector<std::int32_t> cluster;  // vertex -> cluster id
};

// Disjoint unit cliques on {0..l-1} and {l..l+r-1}; cluster ids 0 and 1.
LabeledGraph gen_two_cliques(std::int32_t l, std::int32_t r);

struct PlantedSample {
  Graph graph;
  std::vector<Vertex> left;   // 0 .. n/2-1
  std::vector<Vertex> right;  // n/2 .. n-1
};

// Two equal clusters; pairs (i<j) are visited in lexicographic order and each
// draws one uniform from the seeded stream.
PlantedSample gen_planted(std::int32_t n, double p, double q, std::uint64_t seed);

using PairProbability = std::function<double(Vertex, Vertex)>;

// Consecutive clusters of the given sizes. `in_cluster(i, j)` gives the edge
// probability for i<j in the same cluster and must exceed q.
LabeledGraph gen_general_planted(std::span<const std::int32_t> sizes, const PairProbability& in_cluster, double q,
                                 std::uint64_t seed);

// G(n, p) with unit weights.
Graph gen_erdos_renyi(std::int32_t n, double p, std::uint64_t seed);

// G(n, p) resampled from derived streams until connected.
Graph gen_connected_erdos_renyi(std::int32_t n, double p, std::uint64_t seed);

// G(n, p) with integer weights drawn uniformly from 1..max_weight.
Graph gen_weighted_erdos_renyi(std::int32_t n, double p, std::int32_t max_weight, std::uint64_t seed);

}  // namespace hcost
