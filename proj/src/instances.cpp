#include "hcost/instances.hpp"

#include <cmath>
#include <string>

#include "hcost/error.hpp"
#include "hcost/rng.hpp"

namespace hcost {

namespace {

void require_size(std::int32_t n, std::int32_t min) {
  if (n < min) throw DataError("graph size must be at least " + std::to_string(min));
}

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw DataError(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

Graph gen_line(std::int32_t n) {
  require_size(n, 1);
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return Graph(n, std::move(edges));
}

Graph gen_clique(std::int32_t n) {
  require_size(n, 1);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  return Graph(n, std::move(edges));
}

LabeledGraph gen_two_cliques(std::int32_t l, std::int32_t r) {
  if (l < 0 || r < 0 || l + r < 1) throw DataError("two-clique sizes must be nonnegative with l + r >= 1");
  LabeledGraph out;
  std::vector<Edge> edges;
  const std::int32_t n = l + r;
  for (Vertex i = 0; i < n; ++i) {
    out.cluster.push_back(i < l ? 0 : 1);
    for (Vertex j = i + 1; j < n; ++j)
      if ((i < l) == (j < l)) edges.push_back({i, j, 1.0});
  }
  out.graph = Graph(n, std::move(edges));
  return out;
}

PlantedSample gen_planted(std::int32_t n, double p, double q, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0) throw DataError("planted model needs an even n >= 2");
  require_probability(p, "p");
  require_probability(q, "q");
  if (!(q < p)) throw DataError("planted model needs q < p");
  const std::int32_t half = n / 2;
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.bernoulli(((i < half) == (j < half)) ? p : q)) edges.push_back({i, j, 1.0});
  PlantedSample out;
  out.graph = Graph(n, std::move(edges));
  for (Vertex v = 0; v < n; ++v) (v < half ? out.left : out.right).push_back(v);
  return out;
}

LabeledGraph gen_general_planted(std::span<const std::int32_t> sizes, const PairProbability& in_cluster, double q,
                                 std::uint64_t seed) {
  require_probability(q, "q");
  LabeledGraph out;
  std::int32_t id = 0;
  for (auto s : sizes) {
    if (s < 1) throw DataError("cluster sizes must be positive");
    out.cluster.insert(out.cluster.end(), static_cast<std::size_t>(s), id++);
  }
  const auto n = static_cast<std::int32_t>(out.cluster.size());
  require_size(n, 1);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      double p = q;
      if (out.cluster[static_cast<std::size_t>(i)] == out.cluster[static_cast<std::size_t>(j)]) {
        p = in_cluster(i, j);
        require_probability(p, "in-cluster probability");
        if (!(p > q)) throw DataError("in-cluster probabilities must exceed q");
      }
      if (rng.bernoulli(p)) edges.push_back({i, j, 1.0});
    }
  }
  out.graph = Graph(n, std::move(edges));
  return out;
}

Graph gen_erdos_renyi(std::int32_t n, double p, std::uint64_t seed) {
  require_size(n, 1);
  require_probability(p, "p");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) edges.push_back({i, j, 1.0});
  return Graph(n, std::move(edges));
}

Graph gen_connected_erdos_renyi(std::int32_t n, double p, std::uint64_t seed) {
  require_size(n, 1);
  if (n > 1 && p <= 0.0) throw DataError("p must be positive for a connected sample");
  for (std::uint64_t attempt = 0;; ++attempt) {
    Graph g = gen_erdos_renyi(n, p, derive_seed(seed, attempt));
    if (components(g).size() == 1) return g;
  }
}

Graph gen_weighted_erdos_renyi(std::int32_t n, double p, std::int32_t max_weight, std::uint64_t seed) {
  require_size(n, 1);
  require_probability(p, "p");
  if (max_weight < 1) throw DataError("max_weight must be positive");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const bool present = rng.bernoulli(p);
      const auto w = static_cast<double>(1 + rng.below(static_cast<std::uint64_t>(max_weight)));
      if (present) edges.push_back({i, j, w});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace hcost
