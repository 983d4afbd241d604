#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hcost/graph.hpp"
#include "hcost/scaling.hpp"

namespace hcost {

/// A bipartition (A, B) of a graph's vertices. `side_a` always holds vertex 0;
/// both sides are sorted and nonempty. `ratio` is the value of the objective
/// the cut was optimized for.
struct Cut {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  double weight = 0.0;
  double ratio = 0.0;
};

enum class CutMode { exact, heuristic };

inline constexpr std::int32_t kDefaultExactCutCap = 20;

struct ExactCutOptions {
  std::int32_t cap = kDefaultExactCutCap;  // largest n accepted (at most 30)
  std::int32_t jobs = 1;                   // worker threads for the enumeration
};

/// Minimizes w(S, V\S) / (|S| |V\S|) over all 2^(n-1) - 1 bipartitions.
///
/// Disconnected graphs return the component of vertex 0 against the rest
/// (ratio 0). Otherwise ties are broken first by balance (larger |S| |V\S|),
/// then by the lexicographically smallest side containing vertex 0.
/// Throws DataError for n < 2 or n above the cap.
Cut sparsest_cut_exact(const Graph& g, const ExactCutOptions& options = {});

/// Fiedler-vector sweep followed by first-improvement single-vertex moves
/// (at most 10 n moves). Carries no approximation certificate. Deterministic
/// given `seed`, which only seeds the power iteration's start vector.
Cut sparsest_cut_heuristic(const Graph& g, std::uint64_t seed);

/// Feasible |S| for the size-constrained cut: integers in [n/3, 2n/3].
std::pair<std::int32_t, std::int32_t> balanced_size_range(std::int32_t n);

/// Minimizes w(S, V\S) / min(f(|S|), f(|V\S|)) subject to n/3 <= |S| <= 2n/3.
/// For n = 2 the single 1-vs-1 cut is always admitted.
Cut balanced_f_cut(const Graph& g, const ScalingFunction& f, CutMode mode, std::uint64_t seed,
                   const ExactCutOptions& options = {});

/// Builds a Cut from a membership vector (nonzero = side of `first`),
/// normalizing so that side_a contains vertex 0. `ratio` is left at 0.
Cut make_cut(const Graph& g, const std::vector<std::uint8_t>& in_a);

}  // namespace hcost
