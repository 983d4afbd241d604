#include "hcost/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "hcost/error.hpp"
#include "hcost/rng.hpp"
#include "hcost/simd.hpp"

namespace hcost {

void laplacian_apply(const Graph& g, std::span<const double> x, std::span<double> y) {
  for (Vertex v = 0; v < g.size(); ++v) {
    double acc = g.degree(v) * x[static_cast<std::size_t>(v)];
    for (const auto& nb : g.neighbors(v)) acc -= nb.w * x[static_cast<std::size_t>(nb.v)];
    y[static_cast<std::size_t>(v)] = acc;
  }
}

namespace {

void project_out_constant(std::span<double> x) {
  simd::shift(-simd::sum(x) / static_cast<double>(x.size()), x);
}

double normalize(std::span<double> x) {
  const double norm = std::sqrt(simd::dot(x, x));
  if (norm > 0.0) simd::scale(1.0 / norm, x);
  return norm;
}

}  // namespace

FiedlerResult fiedler_vector(const Graph& g, std::uint64_t seed, double tolerance, std::int64_t max_iterations) {
  const auto n = static_cast<std::size_t>(g.size());
  if (n < 2) throw DataError("fiedler_vector needs at least two nodes");
  if (max_iterations < 0) max_iterations = 10 * static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n);

  FiedlerResult out;
  auto& x = out.vector;
  x.resize(n);
  Rng rng(seed);
  do {
    for (auto& xi : x) xi = 2.0 * rng.uniform() - 1.0;
    project_out_constant(x);
  } while (normalize(x) == 0.0);

  double shift = 0.0;
  for (Vertex v = 0; v < g.size(); ++v) shift = std::max(shift, 2.0 * g.degree(v));

  std::vector<double> lx(n), r(n);
  for (;;) {
    laplacian_apply(g, x, lx);
    out.eigenvalue = simd::dot(x, lx);
    std::copy(lx.begin(), lx.end(), r.begin());
    simd::axpy(-out.eigenvalue, x, r);
    out.residual = std::sqrt(simd::dot(r, r));
    if (out.residual <= tolerance) {
      out.converged = true;
      break;
    }
    if (out.iterations >= max_iterations) break;

    // x <- (cI - L) x, deflated and renormalized
    simd::scale(-1.0, lx);
    simd::axpy(shift, x, lx);
    project_out_constant(lx);
    if (normalize(lx) == 0.0) break;
    std::swap(x, lx);
    ++out.iterations;
  }
  return out;
}

}  // namespace hcost
