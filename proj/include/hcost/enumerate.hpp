#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hcost/tree.hpp"

namespace hcost {

inline constexpr std::int32_t kMaxEnumerationLeaves = 8;

/// Internal node of an enumerated tree as bitmasks over leaves 0..n-1.
struct MaskSplit {
  std::uint32_t set;
  std::uint32_t left;
  std::uint32_t right;
};

/// Compact view of one binary tree produced by the enumerator. `splits`
/// lists the n-1 internal nodes in preorder (root first).
struct EnumeratedTree {
  std::int32_t n = 0;
  std::vector<MaskSplit> splits;

  ClusterTree materialize() const;
};

/// (2n-3)!!, the number of rooted binary trees on n labeled leaves.
std::uint64_t count_binary_trees(std::int32_t n);

/// Calls `visit` once for every rooted binary tree on leaves 0..n-1, in a
/// fixed order (leaf k is inserted above each existing node in turn). The
/// view passed to `visit` is only valid during the call.
/// Throws DataError when n < 1 or n > kMaxEnumerationLeaves.
void for_each_binary_tree(std::int32_t n, const std::function<void(const EnumeratedTree&)>& visit);

/// All binary trees on n leaves, materialized, in enumeration order.
std::vector<ClusterTree> enumerate_trees(std::int32_t n);

}  // namespace hcost
