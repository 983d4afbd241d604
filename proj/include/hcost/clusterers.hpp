#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hcost/cut.hpp"
#include "hcost/graph.hpp"
#include "hcost/scaling.hpp"
#include "hcost/tree.hpp"

namespace hcost {

struct TreeResult {
  ClusterTree tree;
  CutMode mode = CutMode::exact;  // requested solver
  bool certified = true;          // false once any split fell back to the heuristic
  std::int32_t heuristic_splits = 0;
};

struct MakeTreeOptions {
  CutMode mode = CutMode::exact;
  std::uint64_t seed = 0;
  ExactCutOptions exact{};
};

/// Top-down recursive sparsest-cut splitting. Subproblems larger than the
/// exact cap use the spectral heuristic and clear `certified`. The k-th call
/// to the heuristic (in preorder) is seeded with derive_seed(seed, k).
TreeResult make_tree(const Graph& g, const MakeTreeOptions& options = {});

/// As make_tree, splitting with balanced_f_cut at every step.
TreeResult make_tree_generalized(const Graph& g, const ScalingFunction& f, const MakeTreeOptions& options = {});

struct OptimalTree {
  ClusterTree tree;
  double cost = 0.0;
};

/// Exhaustive minimum over all binary trees (n <= 8). Ties go to the first
/// tree in enumeration order.
OptimalTree optimal_tree_bruteforce(const Graph& g, const std::optional<ScalingFunction>& f = std::nullopt);

/// Exhaustive maximum over all binary trees; unit-weight graphs only (n <= 8).
OptimalTree max_tree_bruteforce(const Graph& g);

/// Exhaustive maximum over all binary trees for arbitrary weights (n <= 8).
OptimalTree max_tree_exhaustive(const Graph& g);

enum class Objective { minimize, maximize };

inline constexpr std::int32_t kMaxSubsetDpLeaves = 16;

/// Optimal binary tree by dynamic programming over vertex subsets, O(3^n).
/// Independent of the enumeration path; used to cross-check it and to reach
/// n beyond the enumeration cap.
OptimalTree optimal_tree_dp(const Graph& g, Objective objective = Objective::minimize,
                            const std::optional<ScalingFunction>& f = std::nullopt);

/// Optimal tree for the unit path on n vertices by interval DP. Among optimal
/// split points the most even one is taken (left part floor(n/2) when tied).
OptimalTree optimal_line_tree(std::int32_t n);

/// Chain tree peeling one endpoint of the path per level.
ClusterTree chain_line_tree(std::int32_t n);

enum class LinkageMethod { single, average, complete };

LinkageMethod parse_linkage(std::string_view name);
std::string linkage_name(LinkageMethod m);

/// Agglomerative merging on similarities (absent edges are 0). Single takes
/// the largest inter-cluster similarity, complete the smallest, average the
/// mean over all cross pairs. Ties merge the pair with the smallest
/// (min-member, min-member) representatives.
ClusterTree linkage(const Graph& g, LinkageMethod method);

}  // namespace hcost
