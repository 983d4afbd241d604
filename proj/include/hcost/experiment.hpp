#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hcost/cost.hpp"
#include "hcost/cut.hpp"
#include "hcost/scaling.hpp"

namespace hcost {

// Methods understood by the experiment runners: "greedy", "greedy-f",
// "single", "average", "complete", "optimal".

struct PlantedExperimentConfig {
  SimplePlanted model;
  std::int32_t trials = 1;
  std::vector<double> eps{0.2};
  std::vector<std::string> methods{"greedy"};
  CutMode cut = CutMode::heuristic;
  std::optional<ScalingFunction> f;  // for greedy-f
  std::uint64_t seed = 0;
  std::int32_t jobs = 1;
};

struct PlantedRow {
  std::int32_t trial = 0;
  std::int32_t n = 0;
  double p = 0.0;
  double q = 0.0;
  double eps = 0.0;
  std::string method;
  double cost = 0.0;
  std::optional<double> optimal_cost;  // brute force, n <= 8 only
  std::optional<double> ratio;
  bool eps_good = false;
  bool certified = true;
};

struct PlantedAggregate {
  std::string method;
  double eps = 0.0;
  std::int32_t trials = 0;
  double eps_good_rate = 0.0;
  double mean_cost = 0.0;
  std::optional<double> mean_optimal_cost;
  std::optional<double> max_ratio;
};

struct PlantedSummary {
  std::vector<PlantedRow> rows;  // trial-major, then method, then eps
  std::vector<PlantedAggregate> aggregates;
};

/// Trial t samples its graph from derive_seed(seed, 2t) and seeds tree
/// construction with derive_seed(seed, 2t + 1). Deterministic for any `jobs`.
PlantedSummary planted_experiment(const PlantedExperimentConfig& config);

void write_planted_csv(std::ostream& out, const PlantedSummary& summary);

struct ApproximationConfig {
  std::int32_t instances = 200;
  std::int32_t min_n = 2;
  std::int32_t max_n = 8;
  double p = 0.5;
  std::vector<std::optional<ScalingFunction>> fs{std::nullopt};  // nullopt = plain cost
  std::uint64_t seed = 0;
  std::int32_t jobs = 1;
};

struct ApproximationRow {
  std::int32_t instance = 0;
  std::int32_t n = 0;
  std::string f;  // "linear" for the plain cost
  double cost = 0.0;
  double optimal_cost = 0.0;
  double ratio = 1.0;
  double bound = 0.0;
};

struct ApproximationSummary {
  std::vector<ApproximationRow> rows;
  double max_ratio = 0.0;
  bool within_bound = true;
};

/// Theorem-style bound for the greedy tree: (27/4) ln n for the plain cost,
/// 3 max_{2<=m<=n} f(m)/f(ceil(m/3)) ln n for a scaling function.
double greedy_bound(std::int32_t n, const std::optional<ScalingFunction>& f);

/// Instance i is a connected G(n, p) with n drawn uniformly from
/// [min_n, max_n], both from the stream derive_seed(seed, i). Greedy trees use
/// exact cuts; optima come from exhaustive search.
ApproximationSummary approximation_experiment(const ApproximationConfig& config);

void write_approximation_csv(std::ostream& out, const ApproximationSummary& summary);

}  // namespace hcost
