#include "hcost/clusterers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "hcost/cost.hpp"
#include "hcost/enumerate.hpp"
#include "hcost/error.hpp"
#include "hcost/rng.hpp"

namespace hcost {

namespace {

// ---------------------------------------------------------------------------
// Greedy top-down recursion

class Splitter {
 public:
  Splitter(const Graph& g, const MakeTreeOptions& opt, const ScalingFunction* f) : g_(g), opt_(opt), f_(f) {}

  TreeResult run() {
    TreeResult out;
    out.mode = opt_.mode;
    if (g_.size() < 1) throw DataError("cannot cluster an empty graph");
    std::vector<Vertex> all(static_cast<std::size_t>(g_.size()));
    for (Vertex v = 0; v < g_.size(); ++v) all[static_cast<std::size_t>(v)] = v;
    out.tree = b_.build(recurse(all));
    out.certified = opt_.mode == CutMode::exact && heuristic_calls_ == 0;
    out.heuristic_splits = static_cast<std::int32_t>(heuristic_calls_);
    return out;
  }

 private:
  TreeBuilder::Handle recurse(const std::vector<Vertex>& set) {
    if (set.size() == 1) return b_.leaf(set.front());
    const auto sub = induced_subgraph(g_, set);
    const Cut cut = split(sub.graph);
    std::vector<Vertex> a, b;
    for (Vertex v : cut.side_a) a.push_back(sub.new_to_old[static_cast<std::size_t>(v)]);
    for (Vertex v : cut.side_b) b.push_back(sub.new_to_old[static_cast<std::size_t>(v)]);
    const auto left = recurse(a);
    const auto right = recurse(b);
    return b_.join({left, right});
  }

  Cut split(const Graph& h) {
    const bool exact = opt_.mode == CutMode::exact && h.size() <= opt_.exact.cap;
    if (f_ != nullptr) {
      if (exact) return balanced_f_cut(h, *f_, CutMode::exact, 0, opt_.exact);
      return balanced_f_cut(h, *f_, CutMode::heuristic, next_seed(), opt_.exact);
    }
    if (exact) return sparsest_cut_exact(h, opt_.exact);
    return sparsest_cut_heuristic(h, next_seed());
  }

  std::uint64_t next_seed() { return derive_seed(opt_.seed, heuristic_calls_++); }

  const Graph& g_;
  const MakeTreeOptions& opt_;
  const ScalingFunction* f_;
  TreeBuilder b_;
  std::uint64_t heuristic_calls_ = 0;
};

// ---------------------------------------------------------------------------
// Exhaustive and subset-DP oracles

std::vector<double> inner_weights(const Graph& g) {
  const auto n = g.size();
  const std::size_t full = std::size_t{1} << n;
  std::vector<double> inner(full, 0.0);
  // inner[S] = inner[S minus lowest] + weight from lowest vertex into the rest
  for (std::size_t s = 1; s < full; ++s) {
    const auto low = static_cast<Vertex>(std::countr_zero(s));
    const std::size_t rest = s & (s - 1);
    double w = inner[rest];
    for (const auto& nb : g.neighbors(low))
      if (rest >> nb.v & 1u) w += nb.w;
    inner[s] = w;
  }
  return inner;
}

std::vector<double> size_weights(std::int32_t n, const std::optional<ScalingFunction>& f) {
  std::vector<double> out(static_cast<std::size_t>(n + 1));
  for (std::int32_t k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] = f ? (*f)(k) : static_cast<double>(k);
  return out;
}

OptimalTree exhaustive(const Graph& g, const std::optional<ScalingFunction>& f, Objective objective) {
  const auto n = g.size();
  if (n < 1 || n > kMaxEnumerationLeaves)
    throw DataError("brute-force search supports 1 <= n <= " + std::to_string(kMaxEnumerationLeaves));
  if (f && static_cast<double>(n) > f->domain_max()) throw DataError("scaling table shorter than the graph");
  const auto inner = inner_weights(g);
  const auto fs = size_weights(n, f);

  bool have = false;
  double best = 0.0;
  EnumeratedTree best_tree;
  for_each_binary_tree(n, [&](const EnumeratedTree& t) {
    double c = 0.0;
    for (const auto& s : t.splits)
      c += fs[static_cast<std::size_t>(std::popcount(s.set))] * (inner[s.set] - inner[s.left] - inner[s.right]);
    const bool better = objective == Objective::minimize ? c < best : c > best;
    if (!have || better) {
      have = true;
      best = c;
      best_tree = t;
    }
  });
  OptimalTree out;
  out.tree = best_tree.materialize();
  out.cost = f ? cost_value(g, out.tree, *f) : cost_value(g, out.tree);
  return out;
}

}  // namespace

TreeResult make_tree(const Graph& g, const MakeTreeOptions& options) { return Splitter(g, options, nullptr).run(); }

TreeResult make_tree_generalized(const Graph& g, const ScalingFunction& f, const MakeTreeOptions& options) {
  if (static_cast<double>(g.size()) > f.domain_max()) throw DataError("scaling table shorter than the graph");
  return Splitter(g, options, &f).run();
}

OptimalTree optimal_tree_bruteforce(const Graph& g, const std::optional<ScalingFunction>& f) {
  return exhaustive(g, f, Objective::minimize);
}

OptimalTree max_tree_bruteforce(const Graph& g) {
  if (!g.unit_weights()) throw DataError("maximization is only supported on unit-weight graphs");
  return max_tree_exhaustive(g);
}

OptimalTree max_tree_exhaustive(const Graph& g) { return exhaustive(g, std::nullopt, Objective::maximize); }

OptimalTree optimal_tree_dp(const Graph& g, Objective objective, const std::optional<ScalingFunction>& f) {
  const auto n = g.size();
  if (n < 1 || n > kMaxSubsetDpLeaves)
    throw DataError("subset DP supports 1 <= n <= " + std::to_string(kMaxSubsetDpLeaves));
  if (f && static_cast<double>(n) > f->domain_max()) throw DataError("scaling table shorter than the graph");
  const auto inner = inner_weights(g);
  const auto fs = size_weights(n, f);
  const std::size_t full = std::size_t{1} << n;
  std::vector<double> best(full, 0.0);
  std::vector<std::uint32_t> choice(full, 0);
  const bool minimize = objective == Objective::minimize;

  for (std::size_t s = 1; s < full; ++s) {
    if (std::popcount(s) < 2) continue;
    const std::uint32_t low = static_cast<std::uint32_t>(s & (~s + 1));
    const std::uint32_t rest = static_cast<std::uint32_t>(s) ^ low;
    const double scale = fs[static_cast<std::size_t>(std::popcount(s))];
    bool have = false;
    // A ranges over subsets of S that contain the lowest vertex, B = S \ A nonempty.
    for (std::uint32_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
      const std::uint32_t a = low | sub;
      const std::uint32_t b = static_cast<std::uint32_t>(s) ^ a;
      const double c = best[a] + best[b] + scale * (inner[s] - inner[a] - inner[b]);
      if (!have || (minimize ? c < best[s] : c > best[s])) {
        have = true;
        best[s] = c;
        choice[s] = a;
      }
      if (sub == 0) break;
    }
  }

  TreeBuilder b;
  std::function<TreeBuilder::Handle(std::uint32_t)> rec = [&](std::uint32_t s) -> TreeBuilder::Handle {
    if (std::popcount(s) == 1) return b.leaf(static_cast<Vertex>(std::countr_zero(s)));
    const auto l = rec(choice[s]);
    const auto r = rec(s ^ choice[s]);
    return b.join({l, r});
  };
  OptimalTree out;
  out.tree = b.build(rec(static_cast<std::uint32_t>(full - 1)));
  out.cost = f ? cost_value(g, out.tree, *f) : cost_value(g, out.tree);
  return out;
}

OptimalTree optimal_line_tree(std::int32_t n) {
  if (n < 1) throw DataError("line length must be positive");
  const auto un = static_cast<std::size_t>(n);
  // Segment cost depends only on length: C(k) = k + min_j C(j) + C(k - j).
  std::vector<std::int64_t> c(un + 1, 0);
  std::vector<std::int32_t> cut(un + 1, 0);
  for (std::int32_t k = 2; k <= n; ++k) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::int32_t best_j = 0;
    // Scan from the middle outward so ties keep the most even split.
    for (std::int32_t d = 0; d < k; ++d) {
      for (std::int32_t j : {k / 2 - d, k / 2 + d}) {
        if (j < 1 || j > k - 1) continue;
        const auto v = c[static_cast<std::size_t>(j)] + c[static_cast<std::size_t>(k - j)];
        if (v < best) {
          best = v;
          best_j = j;
        }
      }
    }
    c[static_cast<std::size_t>(k)] = k + best;
    cut[static_cast<std::size_t>(k)] = best_j;
  }

  TreeBuilder b;
  std::function<TreeBuilder::Handle(std::int32_t, std::int32_t)> rec = [&](std::int32_t lo,
                                                                            std::int32_t len) -> TreeBuilder::Handle {
    if (len == 1) return b.leaf(lo);
    const auto j = cut[static_cast<std::size_t>(len)];
    const auto l = rec(lo, j);
    const auto r = rec(lo + j, len - j);
    return b.join({l, r});
  };
  OptimalTree out;
  out.tree = b.build(rec(0, n));
  out.cost = static_cast<double>(c[un]);
  return out;
}

ClusterTree chain_line_tree(std::int32_t n) {
  if (n < 1) throw DataError("line length must be positive");
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  return caterpillar_tree(order);
}

LinkageMethod parse_linkage(std::string_view name) {
  if (name == "single") return LinkageMethod::single;
  if (name == "average") return LinkageMethod::average;
  if (name == "complete") return LinkageMethod::complete;
  throw DataError("unknown linkage method: " + std::string(name));
}

std::string linkage_name(LinkageMethod m) {
  switch (m) {
    case LinkageMethod::single: return "single";
    case LinkageMethod::average: return "average";
    case LinkageMethod::complete: return "complete";
  }
  return "?";
}

ClusterTree linkage(const Graph& g, LinkageMethod method) {
  const auto n = g.size();
  if (n < 1) throw DataError("cannot cluster an empty graph");
  const auto un = static_cast<std::size_t>(n);

  // For single/complete `sim` holds the linkage value directly; for average it
  // holds the total cross weight, divided by the size product on comparison.
  std::vector<double> sim(un * un, 0.0);
  for (const auto& e : g.edges()) {
    sim[static_cast<std::size_t>(e.u) * un + static_cast<std::size_t>(e.v)] = e.w;
    sim[static_cast<std::size_t>(e.v) * un + static_cast<std::size_t>(e.u)] = e.w;
  }
  auto at = [&](std::size_t i, std::size_t j) -> double& { return sim[i * un + j]; };

  // Cluster slots are indexed by their smallest member, which is also the
  // tie-break representative.
  std::vector<std::int32_t> size(un, 1);
  std::vector<bool> alive(un, true);
  TreeBuilder b;
  std::vector<TreeBuilder::Handle> handle(un);
  for (Vertex v = 0; v < n; ++v) handle[static_cast<std::size_t>(v)] = b.leaf(v);

  auto score = [&](std::size_t i, std::size_t j) {
    const double s = at(i, j);
    return method == LinkageMethod::average ? s / (static_cast<double>(size[i]) * size[j]) : s;
  };

  for (std::int32_t round = 1; round < n; ++round) {
    std::size_t bi = 0, bj = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < un; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < un; ++j) {
        if (!alive[j]) continue;
        const double s = score(i, j);
        if (s > best) {
          best = s;
          bi = i;
          bj = j;
        }
      }
    }
    // Merge bj into bi (bi < bj keeps the smallest member as representative).
    for (std::size_t k = 0; k < un; ++k) {
      if (!alive[k] || k == bi || k == bj) continue;
      double merged = 0.0;
      switch (method) {
        case LinkageMethod::single: merged = std::max(at(k, bi), at(k, bj)); break;
        case LinkageMethod::complete: merged = std::min(at(k, bi), at(k, bj)); break;
        case LinkageMethod::average: merged = at(k, bi) + at(k, bj); break;
      }
      at(k, bi) = merged;
      at(bi, k) = merged;
    }
    handle[bi] = b.join({handle[bi], handle[bj]});
    size[bi] += size[bj];
    alive[bj] = false;
  }
  return b.build(handle[0]);
}

}  // namespace hcost
