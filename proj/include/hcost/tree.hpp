#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hcost/graph.hpp"

namespace hcost {

class ClusterTree;

/// Accumulates nodes bottom-up; `build` validates and canonicalizes.
class TreeBuilder {
 public:
  using Handle = std::int32_t;

  Handle leaf(Vertex v);
  Handle join(std::span<const Handle> children);
  Handle join(std::initializer_list<Handle> children) { return join(std::span<const Handle>(children.begin(), children.size())); }
  /// Copies `t` in as a subtree and returns the handle of its root.
  Handle graft(const ClusterTree& t);

  ClusterTree build(Handle root) const;

 private:
  struct Proto {
    Vertex leaf = -1;
    std::vector<Handle> children;
  };
  std::vector<Proto> nodes_;
};

/// Rooted tree whose leaves carry distinct vertex ids and whose internal
/// nodes have at least two children.
///
/// The node arena is kept in canonical form: preorder from the root (index
/// 0), children ordered by their smallest leaf id. Two trees are equal iff
/// their arenas match, so `==` is structural equality of labeled trees.
/// Every subtree occupies a contiguous index range [u, end(u)).
class ClusterTree {
 public:
  using Index = std::int32_t;

  struct Node {
    Vertex leaf = -1;  // -1 for internal nodes
    std::vector<Index> children;
    Index parent = -1;
    Index end = 0;         // one past the last arena index of this subtree
    std::int32_t size = 0;  // |leaves(T[u])|
    std::int32_t depth = 0;
    Vertex min_leaf = 0;
  };

  ClusterTree() = default;

  static ClusterTree leaf(Vertex v);
  static ClusterTree join(std::span<const ClusterTree> children);

  bool empty() const noexcept { return nodes_.empty(); }
  Index root() const noexcept { return 0; }
  std::int32_t num_leaves() const noexcept { return empty() ? 0 : nodes_.front().size; }
  std::int32_t num_nodes() const noexcept { return static_cast<std::int32_t>(nodes_.size()); }
  const Node& node(Index u) const { return nodes_.at(static_cast<std::size_t>(u)); }
  bool is_leaf(Index u) const { return node(u).leaf >= 0; }
  std::span<const Index> children(Index u) const { return node(u).children; }
  std::int32_t leaf_count(Index u) const { return node(u).size; }
  bool is_binary() const noexcept;

  /// Sorted leaf ids of the whole tree / of T[u].
  std::vector<Vertex> leaves() const { return empty() ? std::vector<Vertex>{} : leaves(root()); }
  std::vector<Vertex> leaves(Index u) const;

  bool has_leaf(Vertex v) const noexcept;
  Index leaf_node(Vertex v) const;
  /// True iff the leaves are exactly {0, ..., n-1}.
  bool covers(std::int32_t n) const noexcept;

  /// Lowest common ancestor of two leaves.
  Index lca(Vertex i, Vertex j) const;
  /// |leaves(T[i v j])|. Rejects i == j.
  std::int32_t lca_subtree_size(Vertex i, Vertex j) const;
  /// Ultrametric d_T(i, j) = |leaves(T[i v j])| - 1, with d_T(i, i) = 0.
  std::int32_t tree_distance(Vertex i, Vertex j) const;

  /// Internal nodes in preorder / in breadth-first order from the root.
  std::vector<Index> internal_nodes() const;
  std::vector<Index> internal_nodes_bfs() const;

  friend bool operator==(const ClusterTree& a, const ClusterTree& b);

 private:
  friend class TreeBuilder;

  std::vector<Node> nodes_;
  std::vector<Index> leaf_index_;  // vertex id -> arena index, -1 if absent
};

/// One internal node seen as a set partition. `set` and every part are
/// sorted; parts are ordered by smallest member.
struct Split {
  std::vector<Vertex> set;
  std::vector<std::vector<Vertex>> parts;

  friend bool operator==(const Split&, const Split&) = default;
};

Split split_at(const ClusterTree& t, ClusterTree::Index u);
/// One split per internal node, in preorder.
std::vector<Split> splits(const ClusterTree& t);

/// Copy of T[u] as a standalone tree (original leaf ids).
ClusterTree subtree(const ClusterTree& t, ClusterTree::Index u);

/// New tree with T[u] replaced by `replacement`, whose leaf set must equal
/// leaves(T[u]). `t` is left untouched.
ClusterTree replace_subtree(const ClusterTree& t, ClusterTree::Index u, const ClusterTree& replacement);

/// Every k-ary split (S_1, ..., S_k) becomes the left-deep chain
/// ((S_1, S_2), S_3), ... in canonical part order. Idempotent; never
/// increases cost.
ClusterTree binarize(const ClusterTree& t);

/// Restriction of `t` to the leaves in `keep`: other leaves are dropped,
/// emptied branches disappear and unary nodes are spliced out.
ClusterTree restrict_tree(const ClusterTree& t, std::span<const Vertex> keep);

/// Renames leaf v to map[v].
ClusterTree relabel(const ClusterTree& t, std::span<const Vertex> map);

/// Root with every leaf as a direct child.
ClusterTree star_tree(std::span<const Vertex> leaves);
ClusterTree star_tree(std::int32_t n);
/// ((((o0, o1), o2), ...), o_{k-1}): peels one leaf off per level.
ClusterTree caterpillar_tree(std::span<const Vertex> order);
ClusterTree caterpillar_tree(std::int32_t n);
/// Recursive halving of the given leaf order (first half gets floor(k/2)).
ClusterTree balanced_tree(std::span<const Vertex> order);
ClusterTree balanced_tree(std::int32_t n);

/// Newick with leaf labels vK and no branch lengths, e.g. ((v0,v1),(v2,v3));
std::string to_newick(const ClusterTree& t);

}  // namespace hcost
