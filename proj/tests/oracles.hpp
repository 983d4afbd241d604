#pragma once

// Test-side reference implementations. Each one recomputes a quantity from
// its definition along a different route than the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hcost/graph.hpp"
#include "hcost/hardness.hpp"
#include "hcost/rng.hpp"
#include "hcost/tree.hpp"

namespace oracle {

using hcost::ClusterTree;
using hcost::Graph;
using hcost::TreeBuilder;
using hcost::Vertex;

// Nested tree independent of the library arena.
struct OTree {
  Vertex leaf = -1;
  std::vector<OTree> kids;
};

inline std::vector<Vertex> leaf_set(const OTree& t) {
  if (t.leaf >= 0) return {t.leaf};
  std::vector<Vertex> out;
  for (const auto& k : t.kids) {
    auto s = leaf_set(k);
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline OTree from_tree(const ClusterTree& t, ClusterTree::Index u) {
  OTree o;
  if (t.is_leaf(u)) {
    o.leaf = t.node(u).leaf;
    return o;
  }
  for (auto c : t.children(u)) o.kids.push_back(from_tree(t, c));
  return o;
}
inline OTree from_tree(const ClusterTree& t) { return from_tree(t, t.root()); }

inline ClusterTree to_tree(const OTree& o) {
  TreeBuilder b;
  std::function<TreeBuilder::Handle(const OTree&)> rec = [&](const OTree& x) -> TreeBuilder::Handle {
    if (x.leaf >= 0) return b.leaf(x.leaf);
    std::vector<TreeBuilder::Handle> hs;
    for (const auto& k : x.kids) hs.push_back(rec(k));
    return b.join(hs);
  };
  return b.build(rec(o));
}

// Size of the smallest subtree holding both i and j, by descending from the root.
inline std::int64_t lca_size(const OTree& t, Vertex i, Vertex j) {
  const OTree* cur = &t;
  for (;;) {
    const OTree* next = nullptr;
    for (const auto& k : cur->kids) {
      const auto s = leaf_set(k);
      if (std::binary_search(s.begin(), s.end(), i) && std::binary_search(s.begin(), s.end(), j)) next = &k;
    }
    if (!next) return static_cast<std::int64_t>(leaf_set(*cur).size());
    cur = next;
  }
}

// Edge-sum definition of the cost, with an optional scaling function.
inline double cost(const Graph& g, const ClusterTree& t, const std::function<double(double)>& f = nullptr) {
  const OTree o = from_tree(t);
  double total = 0.0;
  for (const auto& e : g.edges()) {
    const double s = static_cast<double>(lca_size(o, e.u, e.v));
    total += e.w * (f ? f(s) : s);
  }
  return total;
}

// All set partitions of `items` into at least `min_blocks` blocks, blocks in
// order of first element.
inline void set_partitions(const std::vector<Vertex>& items, std::size_t min_blocks,
                           const std::function<void(const std::vector<std::vector<Vertex>>&)>& visit) {
  std::vector<std::vector<Vertex>> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == items.size()) {
      if (blocks.size() >= min_blocks) visit(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(items[i]);
      rec(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({items[i]});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

// Every rooted tree (any arity >= 2) on the given leaves.
inline std::vector<OTree> all_trees(const std::vector<Vertex>& leaves, bool binary_only) {
  if (leaves.size() == 1) {
    OTree o;
    o.leaf = leaves[0];
    return {o};
  }
  std::vector<OTree> out;
  set_partitions(leaves, 2, [&](const std::vector<std::vector<Vertex>>& blocks) {
    if (binary_only && blocks.size() != 2) return;
    std::vector<std::vector<OTree>> options;
    for (const auto& b : blocks) options.push_back(all_trees(b, binary_only));
    std::vector<std::size_t> idx(blocks.size(), 0);
    for (;;) {
      OTree o;
      for (std::size_t k = 0; k < blocks.size(); ++k) o.kids.push_back(options[k][idx[k]]);
      out.push_back(std::move(o));
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  });
  return out;
}

inline std::vector<Vertex> iota(std::int32_t n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

// Random tree on `leaves`: each internal node picks 2..max_arity children by
// random partition of a shuffled leaf list.
inline ClusterTree random_tree(const std::vector<Vertex>& leaves, hcost::Rng& rng, std::int32_t max_arity = 2) {
  TreeBuilder b;
  std::function<TreeBuilder::Handle(std::vector<Vertex>)> rec = [&](std::vector<Vertex> s) -> TreeBuilder::Handle {
    if (s.size() == 1) return b.leaf(s[0]);
    rng.shuffle(std::span<Vertex>(s));
    const auto cap = std::min<std::size_t>(static_cast<std::size_t>(max_arity), s.size());
    const auto k = 2 + static_cast<std::size_t>(rng.below(cap - 1));
    // k-1 distinct cut points in 1..|s|-1
    std::vector<std::size_t> pts = {};
    std::vector<std::size_t> all;
    for (std::size_t i = 1; i < s.size(); ++i) all.push_back(i);
    rng.shuffle(std::span<std::size_t>(all));
    pts.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k - 1));
    std::sort(pts.begin(), pts.end());
    std::vector<TreeBuilder::Handle> hs;
    std::size_t lo = 0;
    pts.push_back(s.size());
    for (auto hi : pts) {
      hs.push_back(rec(std::vector<Vertex>(s.begin() + static_cast<std::ptrdiff_t>(lo), s.begin() + static_cast<std::ptrdiff_t>(hi))));
      lo = hi;
    }
    return b.join(hs);
  };
  return b.build(rec(leaves));
}
inline ClusterTree random_tree(std::int32_t n, hcost::Rng& rng, std::int32_t max_arity = 2) {
  return random_tree(iota(n), rng, max_arity);
}

// Random graph with integer weights in 1..max_w on each pair with prob p.
inline Graph random_graph(std::int32_t n, double p, std::int32_t max_w, hcost::Rng& rng) {
  std::vector<hcost::Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) edges.push_back({i, j, static_cast<double>(1 + rng.below(static_cast<std::uint64_t>(max_w)))});
  return Graph(n, std::move(edges));
}

// Line recurrence C(n) = n + min_j C(j) + C(n-j), memoized.
inline std::int64_t line_recurrence(std::int32_t n) {
  static std::map<std::int32_t, std::int64_t> memo;
  if (n <= 1) return 0;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::int64_t best = INT64_MAX;
  for (std::int32_t j = 1; j < n; ++j) best = std::min(best, line_recurrence(j) + line_recurrence(n - j));
  return memo[n] = n + best;
}

struct CutValue {
  std::vector<Vertex> a;
  double weight;
  double ratio;
};

// Direct enumeration of bipartitions with the library's tie rules: smaller
// objective, then larger |A||B|, then lexicographically smaller side with 0.
inline std::optional<CutValue> brute_cut(const Graph& g, const std::function<double(std::int32_t)>& denom) {
  const auto n = g.size();
  std::optional<CutValue> best;
  std::int64_t best_bal = -1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u) || mask == (1u << n) - 1u) continue;
    std::vector<Vertex> a;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1u) a.push_back(v);
    const auto k = static_cast<std::int32_t>(a.size());
    const double d = denom(k);
    if (d <= 0.0) continue;
    double w = 0.0;
    for (const auto& e : g.edges())
      if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u)) w += e.w;
    const double r = w / d;
    const std::int64_t bal = static_cast<std::int64_t>(k) * (n - k);
    bool take = !best;
    if (!take) {
      const double diff = r - best->ratio;
      const double tol = 1e-9 * std::max(std::abs(r), std::abs(best->ratio));
      if (diff < -tol) take = true;
      else if (std::abs(diff) <= tol) take = bal > best_bal || (bal == best_bal && a < best->a);
    }
    if (take) {
      best = CutValue{a, w, r};
      best_bal = bal;
    }
  }
  return best;
}

// All NAE-satisfying assignments, in binary counting order with x1 most significant.
inline std::vector<hcost::Assignment> nae_assignments(const hcost::CnfInstance& phi) {
  std::vector<hcost::Assignment> out;
  const auto n = static_cast<std::size_t>(phi.num_vars);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    hcost::Assignment a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = (bits >> (n - 1 - i)) & 1u;
    bool ok = true;
    for (const auto& c : phi.clauses) {
      int t = 0;
      for (auto l : c) t += (l > 0) == a[static_cast<std::size_t>(std::abs(l) - 1)];
      ok = ok && t > 0 && t < static_cast<int>(c.size());
    }
    if (ok) out.push_back(a);
  }
  return out;
}

}  // namespace oracle
