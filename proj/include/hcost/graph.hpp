#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hcost {

using Vertex = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;
  double w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex v;
  double w;
};

/// Undirected similarity graph on vertices 0..n-1 with strictly positive
/// weights. Immutable after construction.
///
/// Edges are stored canonically (u < v, sorted by (u, v)); the adjacency
/// lists are sorted by neighbor id. An absent edge has weight 0.
class Graph {
 public:
  Graph() = default;

  /// Throws DataError on self-loops, duplicate pairs, out-of-range ids and
  /// non-positive weights. Edges may be given in either orientation.
  Graph(std::int32_t n, std::vector<Edge> edges);

  std::int32_t size() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(Vertex v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  double degree(Vertex v) const noexcept { return degree_[static_cast<std::size_t>(v)]; }

  /// Weight of {u, v}, 0 when absent.
  double weight(Vertex u, Vertex v) const;
  double max_weight() const noexcept;
  double total_weight() const noexcept;
  bool unit_weights() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::int32_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adj_;
  std::vector<double> degree_;
};

/// Parses the edge-list format: first line `n`, then `u v [w]` per line.
/// Blank lines and lines starting with '#' are ignored.
Graph load_graph(std::string_view text);

/// Writes the edge-list format with weights in shortest round-trip decimal.
std::string write_edge_list(const Graph& g);

/// Complementary weights: w(i,j) + w^c(i,j) = c for every unordered pair.
/// Pairs whose complementary weight is 0 are omitted.
Graph complement(const Graph& g, double c = 1.0);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> new_to_old;
  std::vector<Vertex> old_to_new;  // -1 for vertices outside the subset
};

/// Keeps exactly the edges with both endpoints in `subset`. New ids follow
/// the ascending order of the old ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

/// Connected components over positive-weight edges, each sorted ascending,
/// ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// w(A, V \ A) where `in_a[v] != 0` marks membership in A.
double cut_weight(const Graph& g, std::span<const std::uint8_t> in_a);

/// w(S_1, ..., S_k): total weight of edges joining different parts. Vertices
/// not covered by any part are ignored.
double multiway_cut_weight(const Graph& g, std::span<const std::vector<Vertex>> parts);

}  // namespace hcost
