#include "hcost/serialize.hpp"

#include <functional>

#include "hcost/error.hpp"

namespace hcost {

nlohmann::json tree_to_json(const ClusterTree& t) {
  if (t.empty()) throw DataError("cannot serialize an empty tree");
  std::function<nlohmann::json(ClusterTree::Index)> rec = [&](ClusterTree::Index u) -> nlohmann::json {
    if (t.is_leaf(u)) return t.node(u).leaf;
    auto arr = nlohmann::json::array();
    for (auto c : t.children(u)) arr.push_back(rec(c));
    return arr;
  };
  return rec(t.root());
}

ClusterTree tree_from_json(const nlohmann::json& j) {
  TreeBuilder b;
  std::function<TreeBuilder::Handle(const nlohmann::json&)> rec = [&](const nlohmann::json& x) -> TreeBuilder::Handle {
    if (x.is_number_integer()) {
      const auto v = x.get<std::int64_t>();
      if (v < 0 || v > INT32_MAX) throw DataError("leaf id out of range in tree JSON");
      return b.leaf(static_cast<Vertex>(v));
    }
    if (!x.is_array()) throw DataError("tree JSON must be nested arrays of leaf ids");
    if (x.size() < 2) throw DataError("internal tree nodes need at least two children");
    std::vector<TreeBuilder::Handle> kids;
    for (const auto& c : x) kids.push_back(rec(c));
    return b.join(kids);
  };
  return b.build(rec(j));
}

nlohmann::json cost_report_to_json(const CostReport& r) {
  nlohmann::json out;
  out["total"] = r.total;
  auto arr = nlohmann::json::array();
  for (const auto& s : r.per_split) arr.push_back({{"set", s.split.set}, {"parts", s.split.parts}, {"cost", s.cost}});
  out["splits"] = std::move(arr);
  return out;
}

nlohmann::json cut_to_json(const Cut& c) {
  return {{"a", c.side_a}, {"b", c.side_b}, {"weight", c.weight}, {"ratio", c.ratio}};
}

}  // namespace hcost
