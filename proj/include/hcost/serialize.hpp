#pragma once

#include <json.hpp>

#include "hcost/cost.hpp"
#include "hcost/cut.hpp"
#include "hcost/tree.hpp"

namespace hcost {

// Trees as nested arrays of leaf ids, e.g. [[0,1],[2,3]]; a bare integer is a
// single leaf.
nlohmann::json tree_to_json(const ClusterTree& t);
ClusterTree tree_from_json(const nlohmann::json& j);

// {"total": ..., "splits": [{"set": [...], "parts": [[...], ...], "cost": ...}]}
nlohmann::json cost_report_to_json(const CostReport& r);

// {"a": [...], "b": [...], "weight": ..., "ratio": ...}
nlohmann::json cut_to_json(const Cut& c);

}  // namespace hcost
