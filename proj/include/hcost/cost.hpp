#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "hcost/graph.hpp"
#include "hcost/scaling.hpp"
#include "hcost/tree.hpp"

namespace hcost {

struct SplitCost {
  Split split;
  double cut_weight = 0.0;  // w(S_1, ..., S_k)
  double cost = 0.0;        // f(|S|) * w(S_1, ..., S_k)
};

/// Cost of a tree evaluated two ways: `total` sums w_ij f(|leaves(T[i v j])|)
/// over edges; `split_total` sums the per-split costs, which are computed
/// independently from the part labels at each internal node.
struct CostReport {
  double total = 0.0;
  double split_total = 0.0;
  std::vector<SplitCost> per_split;

  double form_difference() const noexcept { return total - split_total; }
};

/// Requires the leaves of `t` to be exactly the vertices of `g`.
CostReport cost(const Graph& g, const ClusterTree& t);
CostReport generalized_cost(const Graph& g, const ClusterTree& t, const ScalingFunction& f);

/// Edge-sum form only; no per-split breakdown.
double cost_value(const Graph& g, const ClusterTree& t);
double cost_value(const Graph& g, const ClusterTree& t, const ScalingFunction& f);

/// (n^3 - n) / 3, the cost of every tree on the unit clique K_n.
double clique_cost(std::int64_t n);

/// (n, p, q)-planted partition: clusters L = {0..n/2-1}, R = the rest.
struct SimplePlanted {
  std::int32_t n = 0;
  double p = 0.0;
  double q = 0.0;
};

/// Independent-edge general planted partition. `probability(i, j)` is only
/// consulted for pairs in the same cluster and must exceed q there.
struct GeneralPlanted {
  std::vector<std::int32_t> cluster;
  std::function<double(Vertex, Vertex)> probability;
  double q = 0.0;
};

using PlantedModel = std::variant<SimplePlanted, GeneralPlanted>;

/// Throws DataError when the model violates its invariants.
void validate(const PlantedModel& m);
std::int32_t model_size(const PlantedModel& m);
std::vector<std::int32_t> model_clusters(const PlantedModel& m);
double edge_probability(const PlantedModel& m, Vertex i, Vertex j);

/// H: in-cluster pairs weighted by Pr(edge) - q.
Graph excess_graph(const PlantedModel& m);

/// E[cost_G(T)]. For binary T this is q (n^3 - n) / 3 + cost_H(T).
double expected_planted_cost(const PlantedModel& m, const ClusterTree& t);

/// C(l, r) = (l^3 - l) / 3 + (r^3 - r) / 3, the optimum on two disjoint cliques.
double two_clique_optimum(std::int64_t l, std::int64_t r);

/// Certified excess l1 l2 r + r1 r2 l of any tree on H(l, r) whose top split
/// is `top`. Vertices 0..l-1 form the first clique, l..l+r-1 the second.
double excess_lower_bound(const Split& top, std::int32_t l, std::int32_t r);

struct EpsilonWitness {
  ClusterTree::Index node = 0;
  Split split;
};

/// First binary split (breadth-first from the root) with
///   |S n L| >= (1-eps) n/2, |S n R| >= (1-eps) n/2, and
///   |S1 n L| <= eps n/2, |S2 n R| <= eps n/2 (or S1, S2 swapped).
/// Nodes with more than two children are not considered. eps ranges over
/// [0, 1]; eps = 0 asks for a split exactly equal to (L, R).
std::optional<EpsilonWitness> epsilon_good(const ClusterTree& t, std::span<const Vertex> left,
                                           std::span<const Vertex> right, double eps);

}  // namespace hcost
