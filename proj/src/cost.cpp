#include "hcost/cost.hpp"

#include <algorithm>
#include <cmath>

#include "hcost/error.hpp"

namespace hcost {

namespace {

void require_cover(const Graph& g, const ClusterTree& t) {
  if (g.size() == 0 && t.empty()) return;
  if (!t.covers(g.size()))
    throw DataError("tree leaves do not match graph nodes 0.." + std::to_string(g.size() - 1));
}

template <class F>
double edge_sum(const Graph& g, const ClusterTree& t, F&& f) {
  double total = 0.0;
  for (const auto& e : g.edges()) total += e.w * f(static_cast<double>(t.lca_subtree_size(e.u, e.v)));
  return total;
}

template <class F>
CostReport evaluate(const Graph& g, const ClusterTree& t, F&& f) {
  require_cover(g, t);
  CostReport report;
  report.total = edge_sum(g, t, f);
  if (t.empty()) return report;

  std::vector<std::int32_t> label(static_cast<std::size_t>(g.size()), -1);
  for (auto u : t.internal_nodes()) {
    const auto kids = t.children(u);
    for (std::size_t c = 0; c < kids.size(); ++c) {
      for (ClusterTree::Index i = kids[c]; i < t.node(kids[c]).end; ++i) {
        if (t.node(i).leaf >= 0) label[static_cast<std::size_t>(t.node(i).leaf)] = static_cast<std::int32_t>(c);
      }
    }
    double w = 0.0;
    for (ClusterTree::Index i = u; i < t.node(u).end; ++i) {
      const Vertex a = t.node(i).leaf;
      if (a < 0) continue;
      for (const auto& nb : g.neighbors(a)) {
        const auto lb = label[static_cast<std::size_t>(nb.v)];
        if (nb.v > a && lb >= 0 && lb != label[static_cast<std::size_t>(a)]) w += nb.w;
      }
    }
    for (ClusterTree::Index i = u; i < t.node(u).end; ++i) {
      if (t.node(i).leaf >= 0) label[static_cast<std::size_t>(t.node(i).leaf)] = -1;
    }
    SplitCost sc;
    sc.split = split_at(t, u);
    sc.cut_weight = w;
    sc.cost = f(static_cast<double>(t.leaf_count(u))) * w;
    report.split_total += sc.cost;
    report.per_split.push_back(std::move(sc));
  }
  return report;
}

}  // namespace

CostReport cost(const Graph& g, const ClusterTree& t) {
  return evaluate(g, t, [](double x) { return x; });
}

CostReport generalized_cost(const Graph& g, const ClusterTree& t, const ScalingFunction& f) {
  if (static_cast<double>(g.size()) > f.domain_max()) throw DataError("scaling table shorter than the graph");
  return evaluate(g, t, [&](double x) { return f(x); });
}

double cost_value(const Graph& g, const ClusterTree& t) {
  require_cover(g, t);
  return edge_sum(g, t, [](double x) { return x; });
}

double cost_value(const Graph& g, const ClusterTree& t, const ScalingFunction& f) {
  require_cover(g, t);
  return edge_sum(g, t, [&](double x) { return f(x); });
}

double clique_cost(std::int64_t n) { return static_cast<double>((n * n * n - n) / 3); }

// ---------------------------------------------------------------------------
// Planted models

void validate(const PlantedModel& m) {
  if (const auto* s = std::get_if<SimplePlanted>(&m)) {
    if (s->n < 2 || s->n % 2 != 0) throw DataError("planted model needs an even n >= 2");
    if (!(0.0 <= s->q && s->q < s->p && s->p <= 1.0)) throw DataError("planted model needs 0 <= q < p <= 1");
    return;
  }
  const auto& gm = std::get<GeneralPlanted>(m);
  if (gm.cluster.empty()) throw DataError("general planted model has no points");
  if (!(gm.q >= 0.0 && gm.q < 1.0)) throw DataError("general planted model needs 0 <= q < 1");
  if (!gm.probability) throw DataError("general planted model has no probability function");
  const auto n = static_cast<Vertex>(gm.cluster.size());
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (gm.cluster[static_cast<std::size_t>(i)] != gm.cluster[static_cast<std::size_t>(j)]) continue;
      const double p = gm.probability(i, j);
      if (!(p > gm.q && p <= 1.0))
        throw DataError("in-cluster probability must lie in (q, 1] for pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
    }
  }
}

std::int32_t model_size(const PlantedModel& m) {
  if (const auto* s = std::get_if<SimplePlanted>(&m)) return s->n;
  return static_cast<std::int32_t>(std::get<GeneralPlanted>(m).cluster.size());
}

std::vector<std::int32_t> model_clusters(const PlantedModel& m) {
  if (const auto* s = std::get_if<SimplePlanted>(&m)) {
    std::vector<std::int32_t> c(static_cast<std::size_t>(s->n), 0);
    for (std::int32_t i = s->n / 2; i < s->n; ++i) c[static_cast<std::size_t>(i)] = 1;
    return c;
  }
  return std::get<GeneralPlanted>(m).cluster;
}

double edge_probability(const PlantedModel& m, Vertex i, Vertex j) {
  if (const auto* s = std::get_if<SimplePlanted>(&m)) {
    const bool same = (i < s->n / 2) == (j < s->n / 2);
    return same ? s->p : s->q;
  }
  const auto& gm = std::get<GeneralPlanted>(m);
  if (gm.cluster.at(static_cast<std::size_t>(i)) != gm.cluster.at(static_cast<std::size_t>(j))) return gm.q;
  return gm.probability(i, j);
}

Graph excess_graph(const PlantedModel& m) {
  validate(m);
  const auto n = model_size(m);
  const auto clusters = model_clusters(m);
  const double q = std::holds_alternative<SimplePlanted>(m) ? std::get<SimplePlanted>(m).q : std::get<GeneralPlanted>(m).q;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (clusters[static_cast<std::size_t>(i)] != clusters[static_cast<std::size_t>(j)]) continue;
      const double w = edge_probability(m, i, j) - q;
      if (w > 0.0) edges.push_back({i, j, w});
    }
  }
  return Graph(n, std::move(edges));
}

double expected_planted_cost(const PlantedModel& m, const ClusterTree& t) {
  validate(m);
  const auto n = model_size(m);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      const double w = edge_probability(m, i, j);
      if (w > 0.0) edges.push_back({i, j, w});
    }
  return cost_value(Graph(n, std::move(edges)), t);
}

// ---------------------------------------------------------------------------
// Two-clique analysis

double two_clique_optimum(std::int64_t l, std::int64_t r) {
  if (l < 0 || r < 0) throw DataError("clique sizes must be nonnegative");
  return clique_cost(l) + clique_cost(r);
}

double excess_lower_bound(const Split& top, std::int32_t l, std::int32_t r) {
  if (l < 0 || r < 0) throw DataError("clique sizes must be nonnegative");
  if (top.parts.size() != 2) throw DataError("excess bound needs a binary split");
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(l + r), 0);
  std::int64_t counts[2][2] = {{0, 0}, {0, 0}};  // [part][clique]
  for (std::size_t p = 0; p < 2; ++p) {
    if (top.parts[p].empty()) throw DataError("excess bound: empty part");
    for (Vertex v : top.parts[p]) {
      if (v < 0 || v >= l + r || seen[static_cast<std::size_t>(v)])
        throw DataError("excess bound: split does not partition the two-clique vertex set");
      seen[static_cast<std::size_t>(v)] = 1;
      ++counts[p][v < l ? 0 : 1];
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw DataError("excess bound: split does not cover the two-clique vertex set");
  const auto l1 = counts[0][0], l2 = counts[1][0], r1 = counts[0][1], r2 = counts[1][1];
  return static_cast<double>(l1 * l2 * r + r1 * r2 * l);
}

// ---------------------------------------------------------------------------
// epsilon-goodness

std::optional<EpsilonWitness> epsilon_good(const ClusterTree& t, std::span<const Vertex> left,
                                           std::span<const Vertex> right, double eps) {
  if (left.size() != right.size()) throw DataError("epsilon_good: |L| != |R|");
  if (!(eps >= 0.0 && eps <= 1.0)) throw DataError("epsilon_good: eps must lie in [0, 1]");
  const auto n = static_cast<std::int32_t>(left.size() + right.size());
  if (!t.covers(n)) throw DataError("epsilon_good: L and R must cover the tree's leaves");
  std::vector<std::int8_t> side(static_cast<std::size_t>(n), -1);
  for (Vertex v : left) side.at(static_cast<std::size_t>(v)) = 0;
  for (Vertex v : right) {
    if (side.at(static_cast<std::size_t>(v)) != -1) throw DataError("epsilon_good: L and R overlap");
    side[static_cast<std::size_t>(v)] = 1;
  }

  // Slack absorbs rounding in eps * n / 2; counts are integers.
  const double half = static_cast<double>(n) / 2.0;
  const double big = (1.0 - eps) * half - 1e-9;
  const double small = eps * half + 1e-9;

  auto count = [&](ClusterTree::Index u, int s) {
    std::int32_t c = 0;
    for (ClusterTree::Index i = u; i < t.node(u).end; ++i) {
      const Vertex l = t.node(i).leaf;
      if (l >= 0 && side[static_cast<std::size_t>(l)] == s) ++c;
    }
    return static_cast<double>(c);
  };

  for (auto u : t.internal_nodes_bfs()) {
    const auto kids = t.children(u);
    if (kids.size() != 2) continue;
    if (count(u, 0) < big || count(u, 1) < big) continue;
    const double l1 = count(kids[0], 0), r1 = count(kids[0], 1);
    const double l2 = count(kids[1], 0), r2 = count(kids[1], 1);
    if ((l1 <= small && r2 <= small) || (l2 <= small && r1 <= small)) return EpsilonWitness{u, split_at(t, u)};
  }
  return std::nullopt;
}

}  // namespace hcost
