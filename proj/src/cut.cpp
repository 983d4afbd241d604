#include "hcost/cut.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <numeric>
#include <optional>
#include <string>

#include "hcost/error.hpp"
#include "hcost/spectral.hpp"

namespace hcost {

namespace {

constexpr double kRelTol = 1e-9;
constexpr std::int32_t kHardExactCap = 30;

// Per-size objective denominators: denom[k] is the divisor for |A| = k, or 0
// when that size is infeasible.
using Denominators = std::vector<double>;

Denominators sparsest_denominators(std::int32_t n) {
  Denominators d(static_cast<std::size_t>(n + 1), 0.0);
  for (std::int32_t k = 1; k < n; ++k) d[static_cast<std::size_t>(k)] = static_cast<double>(k) * (n - k);
  return d;
}

Denominators balanced_denominators(std::int32_t n, const ScalingFunction& f) {
  Denominators d(static_cast<std::size_t>(n + 1), 0.0);
  const auto [lo, hi] = balanced_size_range(n);
  for (std::int32_t k = lo; k <= hi; ++k)
    d[static_cast<std::size_t>(k)] = std::min(f(static_cast<double>(k)), f(static_cast<double>(n - k)));
  return d;
}

// -1: a better, 0: tie, 1: b better (objective only)
int compare_objective(double wa, double da, double wb, double db) {
  const double lhs = wa * db;
  const double rhs = wb * da;
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (std::abs(lhs - rhs) <= kRelTol * scale) return 0;
  return lhs < rhs ? -1 : 1;
}

// Lexicographic order of the sorted member lists of two bitmasks.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  for (;;) {
    if (a == 0) return b != 0;
    if (b == 0) return false;
    const int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
}

struct MaskCandidate {
  std::uint32_t a = 0;  // includes bit 0
  double w = 0.0;
  std::int32_t k = 0;
  bool valid = false;
};

bool mask_better(const MaskCandidate& x, const MaskCandidate& y, const Denominators& d, std::int32_t n) {
  if (!y.valid) return x.valid;
  if (!x.valid) return false;
  const int c = compare_objective(x.w, d[static_cast<std::size_t>(x.k)], y.w, d[static_cast<std::size_t>(y.k)]);
  if (c != 0) return c < 0;
  const auto bx = static_cast<std::int64_t>(x.k) * (n - x.k);
  const auto by = static_cast<std::int64_t>(y.k) * (n - y.k);
  if (bx != by) return bx > by;
  return mask_lex_less(x.a, y.a);
}

// Gray-code sweep over masks of B (a subset of vertices 1..n-1) for indices
// [begin, end). Each step toggles one vertex, updating the cut incrementally.
MaskCandidate enumerate_range(const Graph& g, const Denominators& d, std::uint64_t begin, std::uint64_t end) {
  const auto n = g.size();
  const auto all = (n >= 32) ? ~0u : ((1u << n) - 1u);
  std::vector<double> to_b(static_cast<std::size_t>(n), 0.0);
  auto gray = [](std::uint64_t i) { return static_cast<std::uint32_t>((i ^ (i >> 1)) << 1); };

  std::uint32_t b = gray(begin);
  double w = 0.0;
  for (Vertex v = 0; v < n; ++v) {
    for (const auto& nb : g.neighbors(v)) {
      if (b >> nb.v & 1u) to_b[static_cast<std::size_t>(v)] += nb.w;
    }
    if (!(b >> v & 1u)) w += to_b[static_cast<std::size_t>(v)];
  }

  MaskCandidate best;
  for (std::uint64_t i = begin;; ++i) {
    const auto k = n - std::popcount(b);
    if (d[static_cast<std::size_t>(k)] > 0.0) {
      MaskCandidate c{all & ~b, w, k, true};
      if (mask_better(c, best, d, n)) best = c;
    }
    if (i + 1 >= end) break;
    const std::uint32_t next = gray(i + 1);
    const Vertex t = std::countr_zero(next ^ b);
    const double to_b_t = to_b[static_cast<std::size_t>(t)];
    const double to_a_t = g.degree(t) - to_b_t;
    const bool into_b = (next >> t) & 1u;
    if (into_b) {
      w += to_a_t - to_b_t;
      for (const auto& nb : g.neighbors(t)) to_b[static_cast<std::size_t>(nb.v)] += nb.w;
    } else {
      w += to_b_t - to_a_t;
      for (const auto& nb : g.neighbors(t)) to_b[static_cast<std::size_t>(nb.v)] -= nb.w;
    }
    b = next;
  }
  return best;
}

Cut exact_search(const Graph& g, const Denominators& d, const ExactCutOptions& options) {
  const auto n = g.size();
  if (n < 2) throw DataError("cut needs at least two nodes");
  const auto cap = std::min(options.cap, kHardExactCap);
  if (n > cap) throw DataError("exact cut search is capped at n = " + std::to_string(cap));

  const std::uint64_t count = std::uint64_t{1} << (n - 1);  // indices 1..count-1
  const auto jobs = static_cast<std::uint64_t>(std::max<std::int32_t>(1, options.jobs));
  const std::uint64_t chunks = std::min<std::uint64_t>(jobs, count - 1);
  const std::uint64_t span = (count - 1 + chunks - 1) / chunks;

  std::vector<MaskCandidate> partial(chunks);
  if (chunks == 1) {
    partial[0] = enumerate_range(g, d, 1, count);
  } else {
    std::vector<std::future<MaskCandidate>> futures;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const auto lo = 1 + c * span;
      const auto hi = std::min(count, lo + span);
      futures.push_back(std::async(std::launch::async, [&g, &d, lo, hi] { return enumerate_range(g, d, lo, hi); }));
    }
    for (std::uint64_t c = 0; c < chunks; ++c) partial[c] = futures[c].get();
  }

  MaskCandidate best;
  for (const auto& c : partial)
    if (mask_better(c, best, d, n)) best = c;
  if (!best.valid) throw DataError("no feasible bipartition");

  std::vector<std::uint8_t> in_a(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) in_a[static_cast<std::size_t>(v)] = (best.a >> v) & 1u;
  Cut cut = make_cut(g, in_a);
  cut.ratio = cut.weight / d[cut.side_a.size()];
  return cut;
}

std::optional<Cut> component_cut(const Graph& g) {
  auto comps = components(g);
  if (comps.size() < 2) return std::nullopt;
  std::vector<std::uint8_t> in_a(static_cast<std::size_t>(g.size()), 0);
  for (Vertex v : comps.front()) in_a[static_cast<std::size_t>(v)] = 1;
  Cut cut = make_cut(g, in_a);
  cut.ratio = 0.0;
  return cut;
}

// ---------------------------------------------------------------------------
// Heuristic: Fiedler sweep + single-vertex local search

struct FlagCandidate {
  std::vector<std::uint8_t> in_a;
  double w = 0.0;
  std::int32_t k = 0;
  bool valid = false;
};

// Sorted side containing vertex 0, for lexicographic tie-breaks.
std::vector<Vertex> side_of_zero(const std::vector<std::uint8_t>& in_a) {
  const std::uint8_t zero_side = in_a[0];
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < in_a.size(); ++v)
    if (in_a[v] == zero_side) out.push_back(static_cast<Vertex>(v));
  return out;
}

bool flag_better(const FlagCandidate& x, const FlagCandidate& y, const Denominators& d, std::int32_t n) {
  if (!y.valid) return x.valid;
  if (!x.valid) return false;
  const int c = compare_objective(x.w, d[static_cast<std::size_t>(x.k)], y.w, d[static_cast<std::size_t>(y.k)]);
  if (c != 0) return c < 0;
  const auto bx = static_cast<std::int64_t>(x.k) * (n - x.k);
  const auto by = static_cast<std::int64_t>(y.k) * (n - y.k);
  if (bx != by) return bx > by;
  return side_of_zero(x.in_a) < side_of_zero(y.in_a);
}

Cut heuristic_search(const Graph& g, const Denominators& d, std::uint64_t seed) {
  const auto n = g.size();
  const auto un = static_cast<std::size_t>(n);

  const auto fiedler = fiedler_vector(g, seed);
  std::vector<Vertex> order(un);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return fiedler.vector[static_cast<std::size_t>(a)] < fiedler.vector[static_cast<std::size_t>(b)];
  });

  // Sweep over prefixes of the spectral order.
  std::vector<double> to_a(un, 0.0);
  std::vector<std::uint8_t> in_a(un, 0);
  FlagCandidate best;
  double w = 0.0;
  for (std::int32_t k = 1; k < n; ++k) {
    const Vertex v = order[static_cast<std::size_t>(k - 1)];
    w += g.degree(v) - 2.0 * to_a[static_cast<std::size_t>(v)];
    in_a[static_cast<std::size_t>(v)] = 1;
    for (const auto& nb : g.neighbors(v)) to_a[static_cast<std::size_t>(nb.v)] += nb.w;
    if (d[static_cast<std::size_t>(k)] > 0.0) {
      FlagCandidate c{in_a, w, k, true};
      if (flag_better(c, best, d, n)) best = std::move(c);
    }
  }
  if (!best.valid) throw DataError("no feasible bipartition");

  // First-improvement single-vertex moves.
  in_a = best.in_a;
  w = best.w;
  std::int32_t k = best.k;
  std::fill(to_a.begin(), to_a.end(), 0.0);
  for (Vertex v = 0; v < n; ++v) {
    if (!in_a[static_cast<std::size_t>(v)]) continue;
    for (const auto& nb : g.neighbors(v)) to_a[static_cast<std::size_t>(nb.v)] += nb.w;
  }
  const std::int32_t move_cap = 10 * n;
  std::int32_t moves = 0;
  bool improved = true;
  while (improved && moves < move_cap) {
    improved = false;
    for (Vertex v = 0; v < n && moves < move_cap; ++v) {
      const auto uv = static_cast<std::size_t>(v);
      const bool a = in_a[uv] != 0;
      const std::int32_t nk = a ? k - 1 : k + 1;
      if (nk < 1 || nk > n - 1 || d[static_cast<std::size_t>(nk)] <= 0.0) continue;
      const double own = a ? to_a[uv] : g.degree(v) - to_a[uv];
      const double other = g.degree(v) - own;
      const double nw = w - other + own;
      if (compare_objective(nw, d[static_cast<std::size_t>(nk)], w, d[static_cast<std::size_t>(k)]) >= 0) continue;
      in_a[uv] = a ? 0 : 1;
      const double sign = a ? -1.0 : 1.0;
      for (const auto& nb : g.neighbors(v)) to_a[static_cast<std::size_t>(nb.v)] += sign * nb.w;
      w = nw;
      k = nk;
      ++moves;
      improved = true;
    }
  }

  Cut cut = make_cut(g, in_a);
  cut.ratio = cut.weight / d[cut.side_a.size()];
  return cut;
}

}  // namespace

Cut make_cut(const Graph& g, const std::vector<std::uint8_t>& in_a) {
  Cut cut;
  const std::uint8_t zero_side = in_a.at(0) != 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    ((in_a[static_cast<std::size_t>(v)] != 0) == zero_side ? cut.side_a : cut.side_b).push_back(v);
  }
  if (cut.side_b.empty()) throw DataError("cut with an empty side");
  cut.weight = cut_weight(g, in_a);
  return cut;
}

Cut sparsest_cut_exact(const Graph& g, const ExactCutOptions& options) {
  if (g.size() < 2) throw DataError("cut needs at least two nodes");
  if (auto c = component_cut(g)) return *c;
  return exact_search(g, sparsest_denominators(g.size()), options);
}

Cut sparsest_cut_heuristic(const Graph& g, std::uint64_t seed) {
  if (g.size() < 2) throw DataError("cut needs at least two nodes");
  if (auto c = component_cut(g)) return *c;
  return heuristic_search(g, sparsest_denominators(g.size()), seed);
}

std::pair<std::int32_t, std::int32_t> balanced_size_range(std::int32_t n) {
  if (n == 2) return {1, 1};
  return {(n + 2) / 3, (2 * n) / 3};
}

Cut balanced_f_cut(const Graph& g, const ScalingFunction& f, CutMode mode, std::uint64_t seed,
                   const ExactCutOptions& options) {
  if (g.size() < 2) throw DataError("cut needs at least two nodes");
  if (static_cast<double>(g.size()) > f.domain_max()) throw DataError("scaling table shorter than the graph");
  const auto d = balanced_denominators(g.size(), f);
  if (g.size() == 2) {
    std::vector<std::uint8_t> in_a{1, 0};
    Cut cut = make_cut(g, in_a);
    cut.ratio = cut.weight / d[1];
    return cut;
  }
  return mode == CutMode::exact ? exact_search(g, d, options) : heuristic_search(g, d, seed);
}

}  // namespace hcost
