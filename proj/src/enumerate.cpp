#include "hcost/enumerate.hpp"

#include <bit>

#include "hcost/error.hpp"

namespace hcost {

std::uint64_t count_binary_trees(std::int32_t n) {
  if (n < 1) return 0;
  std::uint64_t c = 1;
  for (std::int32_t k = 3; k <= n; ++k) c *= static_cast<std::uint64_t>(2 * k - 3);
  return c;
}

ClusterTree EnumeratedTree::materialize() const {
  TreeBuilder b;
  std::function<TreeBuilder::Handle(std::uint32_t)> rec = [&](std::uint32_t mask) -> TreeBuilder::Handle {
    if (std::popcount(mask) == 1) return b.leaf(static_cast<Vertex>(std::countr_zero(mask)));
    for (const auto& s : splits) {
      if (s.set == mask) {
        auto l = rec(s.left);
        auto r = rec(s.right);
        return b.join({l, r});
      }
    }
    throw DataError("inconsistent enumerated tree");
  };
  return b.build(rec(n >= 32 ? ~0u : (1u << n) - 1u));
}

namespace {

class Enumerator {
 public:
  Enumerator(std::int32_t n, const std::function<void(const EnumeratedTree&)>& visit)
      : n_(n), visit_(visit), left_(2 * n, -1), right_(2 * n, -1), parent_(2 * n, -1) {
    view_.n = n;
    view_.splits.reserve(static_cast<std::size_t>(n));
  }

  void run() {
    root_ = 0;
    insert(1);
  }

 private:
  void insert(std::int32_t k) {
    if (k == n_) {
      emit();
      return;
    }
    const std::int32_t x = n_ + k - 1;  // new internal node
    // Existing nodes: leaves 0..k-1 and internal nodes n..n+k-2.
    for (std::int32_t v = 0; v < k; ++v) attach(v, x, k);
    for (std::int32_t v = n_; v < n_ + k - 1; ++v) attach(v, x, k);
  }

  void attach(std::int32_t v, std::int32_t x, std::int32_t k) {
    const std::int32_t p = parent_[v];
    left_[x] = v;
    right_[x] = k;
    parent_[x] = p;
    parent_[v] = x;
    parent_[k] = x;
    if (p < 0) {
      root_ = x;
    } else if (left_[p] == v) {
      left_[p] = x;
    } else {
      right_[p] = x;
    }

    insert(k + 1);

    if (p < 0) {
      root_ = v;
    } else if (left_[p] == x) {
      left_[p] = v;
    } else {
      right_[p] = v;
    }
    parent_[v] = p;
    parent_[k] = -1;
    parent_[x] = -1;
  }

  std::uint32_t collect(std::int32_t u) {
    if (u < n_) return 1u << u;
    const auto slot = view_.splits.size();
    view_.splits.push_back({});
    const std::uint32_t l = collect(left_[u]);
    const std::uint32_t r = collect(right_[u]);
    view_.splits[slot] = {l | r, l, r};
    return l | r;
  }

  void emit() {
    view_.splits.clear();
    collect(root_);
    visit_(view_);
  }

  std::int32_t n_;
  const std::function<void(const EnumeratedTree&)>& visit_;
  std::vector<std::int32_t> left_, right_, parent_;
  std::int32_t root_ = 0;
  EnumeratedTree view_;
};

}  // namespace

void for_each_binary_tree(std::int32_t n, const std::function<void(const EnumeratedTree&)>& visit) {
  if (n < 1 || n > kMaxEnumerationLeaves)
    throw DataError("tree enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationLeaves));
  if (n == 1) {
    EnumeratedTree single{1, {}};
    visit(single);
    return;
  }
  Enumerator e(n, visit);
  e.run();
}

std::vector<ClusterTree> enumerate_trees(std::int32_t n) {
  std::vector<ClusterTree> out;
  out.reserve(static_cast<std::size_t>(count_binary_trees(n)));
  for_each_binary_tree(n, [&](const EnumeratedTree& t) { out.push_back(t.materialize()); });
  return out;
}

}  // namespace hcost
