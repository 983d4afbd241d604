#include "hcost/tree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>

#include "hcost/error.hpp"

namespace hcost {

using Index = ClusterTree::Index;

// ---------------------------------------------------------------------------
// TreeBuilder

TreeBuilder::Handle TreeBuilder::leaf(Vertex v) {
  if (v < 0) throw DataError("leaf ids must be nonnegative");
  nodes_.push_back({v, {}});
  return static_cast<Handle>(nodes_.size() - 1);
}

TreeBuilder::Handle TreeBuilder::join(std::span<const Handle> children) {
  if (children.size() < 2) throw DataError("internal tree nodes need at least two children");
  for (Handle h : children) {
    if (h < 0 || static_cast<std::size_t>(h) >= nodes_.size()) throw DataError("unknown tree handle");
  }
  nodes_.push_back({-1, std::vector<Handle>(children.begin(), children.end())});
  return static_cast<Handle>(nodes_.size() - 1);
}

TreeBuilder::Handle TreeBuilder::graft(const ClusterTree& t) {
  if (t.empty()) throw DataError("cannot graft an empty tree");
  std::function<Handle(Index)> copy = [&](Index u) -> Handle {
    const auto& nd = t.node(u);
    if (nd.leaf >= 0) return leaf(nd.leaf);
    std::vector<Handle> kids;
    kids.reserve(nd.children.size());
    for (Index c : nd.children) kids.push_back(copy(c));
    return join(kids);
  };
  return copy(t.root());
}

ClusterTree TreeBuilder::build(Handle root) const {
  if (root < 0 || static_cast<std::size_t>(root) >= nodes_.size()) throw DataError("unknown tree handle");

  std::vector<std::uint8_t> used(nodes_.size(), 0);
  std::vector<Vertex> min_leaf(nodes_.size(), 0);
  std::vector<std::int32_t> size(nodes_.size(), 0);
  std::vector<Vertex> seen_leaves;

  std::function<void(Handle)> scan = [&](Handle h) {
    auto& flag = used[static_cast<std::size_t>(h)];
    if (flag) throw DataError("tree node reachable twice");
    flag = 1;
    const auto& p = nodes_[static_cast<std::size_t>(h)];
    if (p.leaf >= 0) {
      min_leaf[static_cast<std::size_t>(h)] = p.leaf;
      size[static_cast<std::size_t>(h)] = 1;
      seen_leaves.push_back(p.leaf);
      return;
    }
    Vertex m = std::numeric_limits<Vertex>::max();
    std::int32_t s = 0;
    for (Handle c : p.children) {
      scan(c);
      m = std::min(m, min_leaf[static_cast<std::size_t>(c)]);
      s += size[static_cast<std::size_t>(c)];
    }
    min_leaf[static_cast<std::size_t>(h)] = m;
    size[static_cast<std::size_t>(h)] = s;
  };
  scan(root);

  std::sort(seen_leaves.begin(), seen_leaves.end());
  if (std::adjacent_find(seen_leaves.begin(), seen_leaves.end()) != seen_leaves.end())
    throw DataError("duplicate leaf id in tree");

  ClusterTree t;
  t.nodes_.reserve(static_cast<std::size_t>(2 * seen_leaves.size()));
  std::function<Index(Handle, Index, std::int32_t)> emit = [&](Handle h, Index parent, std::int32_t depth) -> Index {
    const auto idx = static_cast<Index>(t.nodes_.size());
    const auto& p = nodes_[static_cast<std::size_t>(h)];
    t.nodes_.emplace_back();
    {
      auto& nd = t.nodes_.back();
      nd.leaf = p.leaf;
      nd.parent = parent;
      nd.size = size[static_cast<std::size_t>(h)];
      nd.depth = depth;
      nd.min_leaf = min_leaf[static_cast<std::size_t>(h)];
    }
    if (p.leaf < 0) {
      std::vector<Handle> kids = p.children;
      std::sort(kids.begin(), kids.end(), [&](Handle a, Handle b) {
        return min_leaf[static_cast<std::size_t>(a)] < min_leaf[static_cast<std::size_t>(b)];
      });
      std::vector<Index> child_idx;
      child_idx.reserve(kids.size());
      for (Handle c : kids) child_idx.push_back(emit(c, idx, depth + 1));
      t.nodes_[static_cast<std::size_t>(idx)].children = std::move(child_idx);
    }
    t.nodes_[static_cast<std::size_t>(idx)].end = static_cast<Index>(t.nodes_.size());
    return idx;
  };
  emit(root, -1, 0);

  t.leaf_index_.assign(static_cast<std::size_t>(seen_leaves.back()) + 1, -1);
  for (Index u = 0; u < t.num_nodes(); ++u) {
    const auto& nd = t.nodes_[static_cast<std::size_t>(u)];
    if (nd.leaf >= 0) t.leaf_index_[static_cast<std::size_t>(nd.leaf)] = u;
  }
  return t;
}

// ---------------------------------------------------------------------------
// ClusterTree

ClusterTree ClusterTree::leaf(Vertex v) {
  TreeBuilder b;
  return b.build(b.leaf(v));
}

ClusterTree ClusterTree::join(std::span<const ClusterTree> children) {
  TreeBuilder b;
  std::vector<TreeBuilder::Handle> hs;
  for (const auto& c : children) hs.push_back(b.graft(c));
  return b.build(b.join(hs));
}

bool ClusterTree::is_binary() const noexcept {
  return std::all_of(nodes_.begin(), nodes_.end(),
                     [](const Node& nd) { return nd.leaf >= 0 || nd.children.size() == 2; });
}

std::vector<Vertex> ClusterTree::leaves(Index u) const {
  const auto& nd = node(u);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(nd.size));
  for (Index i = u; i < nd.end; ++i) {
    const Vertex l = nodes_[static_cast<std::size_t>(i)].leaf;
    if (l >= 0) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ClusterTree::has_leaf(Vertex v) const noexcept {
  return v >= 0 && static_cast<std::size_t>(v) < leaf_index_.size() && leaf_index_[static_cast<std::size_t>(v)] >= 0;
}

Index ClusterTree::leaf_node(Vertex v) const {
  if (!has_leaf(v)) throw DataError("vertex " + std::to_string(v) + " is not a leaf of the tree");
  return leaf_index_[static_cast<std::size_t>(v)];
}

bool ClusterTree::covers(std::int32_t n) const noexcept {
  if (num_leaves() != n) return false;
  if (n == 0) return true;
  return static_cast<std::int32_t>(leaf_index_.size()) == n;
}

Index ClusterTree::lca(Vertex i, Vertex j) const {
  Index a = leaf_node(i);
  Index b = leaf_node(j);
  while (nodes_[static_cast<std::size_t>(a)].depth > nodes_[static_cast<std::size_t>(b)].depth)
    a = nodes_[static_cast<std::size_t>(a)].parent;
  while (nodes_[static_cast<std::size_t>(b)].depth > nodes_[static_cast<std::size_t>(a)].depth)
    b = nodes_[static_cast<std::size_t>(b)].parent;
  while (a != b) {
    a = nodes_[static_cast<std::size_t>(a)].parent;
    b = nodes_[static_cast<std::size_t>(b)].parent;
  }
  return a;
}

std::int32_t ClusterTree::lca_subtree_size(Vertex i, Vertex j) const {
  if (i == j) throw DataError("lca_subtree_size needs two distinct leaves");
  return nodes_[static_cast<std::size_t>(lca(i, j))].size;
}

std::int32_t ClusterTree::tree_distance(Vertex i, Vertex j) const {
  if (i == j) {
    leaf_node(i);
    return 0;
  }
  return lca_subtree_size(i, j) - 1;
}

std::vector<Index> ClusterTree::internal_nodes() const {
  std::vector<Index> out;
  for (Index u = 0; u < num_nodes(); ++u)
    if (nodes_[static_cast<std::size_t>(u)].leaf < 0) out.push_back(u);
  return out;
}

std::vector<Index> ClusterTree::internal_nodes_bfs() const {
  std::vector<Index> out;
  if (empty()) return out;
  std::deque<Index> queue{root()};
  while (!queue.empty()) {
    Index u = queue.front();
    queue.pop_front();
    const auto& nd = nodes_[static_cast<std::size_t>(u)];
    if (nd.leaf >= 0) continue;
    out.push_back(u);
    for (Index c : nd.children) queue.push_back(c);
  }
  return out;
}

bool operator==(const ClusterTree& a, const ClusterTree& b) {
  if (a.nodes_.size() != b.nodes_.size()) return false;
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    if (a.nodes_[i].leaf != b.nodes_[i].leaf || a.nodes_[i].children != b.nodes_[i].children) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Free functions

Split split_at(const ClusterTree& t, Index u) {
  Split s;
  s.set = t.leaves(u);
  for (Index c : t.children(u)) s.parts.push_back(t.leaves(c));
  return s;
}

std::vector<Split> splits(const ClusterTree& t) {
  std::vector<Split> out;
  for (Index u : t.internal_nodes()) out.push_back(split_at(t, u));
  return out;
}

namespace {

// Copies T[u] into `b`, calling `hook` first at every node; a non-negative
// return value from the hook is used in place of the copied subtree.
TreeBuilder::Handle copy_into(TreeBuilder& b, const ClusterTree& t, Index u,
                              const std::function<TreeBuilder::Handle(Index)>& hook) {
  if (hook) {
    auto h = hook(u);
    if (h >= 0) return h;
  }
  const auto& nd = t.node(u);
  if (nd.leaf >= 0) return b.leaf(nd.leaf);
  std::vector<TreeBuilder::Handle> kids;
  for (Index c : nd.children) kids.push_back(copy_into(b, t, c, hook));
  return b.join(kids);
}

}  // namespace

ClusterTree subtree(const ClusterTree& t, Index u) {
  TreeBuilder b;
  return b.build(copy_into(b, t, u, {}));
}

ClusterTree replace_subtree(const ClusterTree& t, Index u, const ClusterTree& replacement) {
  if (u < 0 || u >= t.num_nodes()) throw DataError("replace_subtree: node index out of range");
  if (t.leaves(u) != replacement.leaves()) throw DataError("replace_subtree: leaf sets differ");
  TreeBuilder b;
  auto root = copy_into(b, t, t.root(), [&](Index x) -> TreeBuilder::Handle {
    return x == u ? b.graft(replacement) : -1;
  });
  return b.build(root);
}

ClusterTree binarize(const ClusterTree& t) {
  if (t.empty()) return t;
  TreeBuilder b;
  std::function<TreeBuilder::Handle(Index)> rec = [&](Index u) -> TreeBuilder::Handle {
    const auto& nd = t.node(u);
    if (nd.leaf >= 0) return b.leaf(nd.leaf);
    auto acc = rec(nd.children[0]);
    for (std::size_t i = 1; i < nd.children.size(); ++i) acc = b.join({acc, rec(nd.children[i])});
    return acc;
  };
  return b.build(rec(t.root()));
}

ClusterTree restrict_tree(const ClusterTree& t, std::span<const Vertex> keep) {
  std::vector<std::uint8_t> mark;
  for (Vertex v : keep) {
    if (!t.has_leaf(v)) throw DataError("restrict_tree: vertex " + std::to_string(v) + " is not a leaf");
    if (static_cast<std::size_t>(v) >= mark.size()) mark.resize(static_cast<std::size_t>(v) + 1, 0);
    mark[static_cast<std::size_t>(v)] = 1;
  }
  if (keep.empty()) throw DataError("restrict_tree: empty leaf set");
  TreeBuilder b;
  std::function<TreeBuilder::Handle(Index)> rec = [&](Index u) -> TreeBuilder::Handle {
    const auto& nd = t.node(u);
    if (nd.leaf >= 0) {
      const bool kept = static_cast<std::size_t>(nd.leaf) < mark.size() && mark[static_cast<std::size_t>(nd.leaf)];
      return kept ? b.leaf(nd.leaf) : -1;
    }
    std::vector<TreeBuilder::Handle> kids;
    for (Index c : nd.children) {
      auto h = rec(c);
      if (h >= 0) kids.push_back(h);
    }
    if (kids.empty()) return -1;
    if (kids.size() == 1) return kids.front();
    return b.join(kids);
  };
  return b.build(rec(t.root()));
}

ClusterTree relabel(const ClusterTree& t, std::span<const Vertex> map) {
  TreeBuilder b;
  std::function<TreeBuilder::Handle(Index)> rec = [&](Index u) -> TreeBuilder::Handle {
    const auto& nd = t.node(u);
    if (nd.leaf >= 0) {
      if (static_cast<std::size_t>(nd.leaf) >= map.size()) throw DataError("relabel: leaf outside the map");
      return b.leaf(map[static_cast<std::size_t>(nd.leaf)]);
    }
    std::vector<TreeBuilder::Handle> kids;
    for (Index c : nd.children) kids.push_back(rec(c));
    return b.join(kids);
  };
  return b.build(rec(t.root()));
}

namespace {

std::vector<Vertex> iota_vertices(std::int32_t n) {
  if (n < 1) throw DataError("tree needs at least one leaf");
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), Vertex{0});
  return v;
}

}  // namespace

ClusterTree star_tree(std::span<const Vertex> leaves) {
  if (leaves.empty()) throw DataError("tree needs at least one leaf");
  TreeBuilder b;
  if (leaves.size() == 1) return b.build(b.leaf(leaves[0]));
  std::vector<TreeBuilder::Handle> kids;
  for (Vertex v : leaves) kids.push_back(b.leaf(v));
  return b.build(b.join(kids));
}

ClusterTree star_tree(std::int32_t n) { return star_tree(iota_vertices(n)); }

ClusterTree caterpillar_tree(std::span<const Vertex> order) {
  if (order.empty()) throw DataError("tree needs at least one leaf");
  TreeBuilder b;
  auto acc = b.leaf(order[0]);
  for (std::size_t i = 1; i < order.size(); ++i) acc = b.join({acc, b.leaf(order[i])});
  return b.build(acc);
}

ClusterTree caterpillar_tree(std::int32_t n) { return caterpillar_tree(iota_vertices(n)); }

ClusterTree balanced_tree(std::span<const Vertex> order) {
  if (order.empty()) throw DataError("tree needs at least one leaf");
  TreeBuilder b;
  std::function<TreeBuilder::Handle(std::span<const Vertex>)> rec = [&](std::span<const Vertex> s) {
    if (s.size() == 1) return b.leaf(s[0]);
    const auto half = s.size() / 2;
    auto l = rec(s.first(half));
    auto r = rec(s.subspan(half));
    return b.join({l, r});
  };
  return b.build(rec(order));
}

ClusterTree balanced_tree(std::int32_t n) { return balanced_tree(iota_vertices(n)); }

std::string to_newick(const ClusterTree& t) {
  if (t.empty()) return ";";
  std::string out;
  std::function<void(Index)> rec = [&](Index u) {
    const auto& nd = t.node(u);
    if (nd.leaf >= 0) {
      out += 'v';
      out += std::to_string(nd.leaf);
      return;
    }
    out += '(';
    for (std::size_t i = 0; i < nd.children.size(); ++i) {
      if (i) out += ',';
      rec(nd.children[i]);
    }
    out += ')';
  };
  rec(t.root());
  out += ';';
  return out;
}

}  // namespace hcost
