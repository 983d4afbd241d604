#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hcost/graph.hpp"

namespace hcost {

/// y = L x for the weighted graph Laplacian L = D - A.
void laplacian_apply(const Graph& g, std::span<const double> x, std::span<double> y);

struct FiedlerResult {
  std::vector<double> vector;  // unit norm, orthogonal to the all-ones vector
  double eigenvalue = 0.0;     // Rayleigh quotient x'Lx
  double residual = 0.0;       // ||Lx - eigenvalue x||
  std::int64_t iterations = 0;
  bool converged = false;
};

/// Second-smallest Laplacian eigenvector by power iteration on cI - L with
/// c = 2 * max weighted degree, deflating the constant vector each step.
/// Stops once the residual drops to `tolerance` or after `max_iterations`
/// (default 10 n^2). The start vector is drawn from `seed`. Needs n >= 2.
FiedlerResult fiedler_vector(const Graph& g, std::uint64_t seed, double tolerance = 1e-8,
                             std::int64_t max_iterations = -1);

}  // namespace hcost
