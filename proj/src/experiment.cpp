#include "hcost/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "hcost/clusterers.hpp"
#include "hcost/enumerate.hpp"
#include "hcost/error.hpp"
#include "hcost/instances.hpp"
#include "hcost/parallel.hpp"
#include "hcost/rng.hpp"

namespace hcost {

namespace {

std::string num(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string opt_num(const std::optional<double>& x) { return x ? num(*x) : std::string(); }

struct MethodTree {
  ClusterTree tree;
  bool certified = true;
};

MethodTree build_tree(const Graph& g, const std::string& method, const PlantedExperimentConfig& cfg,
                      std::uint64_t seed) {
  MakeTreeOptions opt;
  opt.mode = cfg.cut;
  opt.seed = seed;
  if (method == "greedy") {
    auto r = make_tree(g, opt);
    return {std::move(r.tree), r.certified};
  }
  if (method == "greedy-f") {
    auto r = make_tree_generalized(g, cfg.f.value_or(ScalingFunction::linear()), opt);
    return {std::move(r.tree), r.certified};
  }
  if (method == "optimal") return {optimal_tree_bruteforce(g, cfg.f).tree, true};
  return {linkage(g, parse_linkage(method)), true};
}

void check_method(const std::string& m) {
  static const char* known[] = {"greedy", "greedy-f", "single", "average", "complete", "optimal"};
  if (std::find(std::begin(known), std::end(known), m) == std::end(known)) throw DataError("unknown method: " + m);
}

}  // namespace

PlantedSummary planted_experiment(const PlantedExperimentConfig& cfg) {
  validate(PlantedModel{cfg.model});
  if (cfg.trials < 1) throw DataError("trials must be at least 1");
  if (cfg.methods.empty()) throw DataError("at least one method is required");
  for (const auto& m : cfg.methods) check_method(m);
  for (double e : cfg.eps)
    if (!(e >= 0.0 && e <= 1.0)) throw DataError("eps must lie in [0, 1]");
  const auto n = cfg.model.n;
  const bool have_optimum = n <= kMaxEnumerationLeaves;
  for (const auto& m : cfg.methods)
    if (m == "optimal" && !have_optimum) throw DataError("method optimal needs n <= 8");

  const std::size_t per_trial = cfg.methods.size() * cfg.eps.size();
  std::vector<PlantedRow> rows(static_cast<std::size_t>(cfg.trials) * per_trial);

  parallel_for(static_cast<std::size_t>(cfg.trials), cfg.jobs, [&](std::size_t t) {
    const auto sample = gen_planted(n, cfg.model.p, cfg.model.q, derive_seed(cfg.seed, 2 * t));
    const auto tree_seed = derive_seed(cfg.seed, 2 * t + 1);
    std::optional<double> optimum;
    if (have_optimum) optimum = optimal_tree_bruteforce(sample.graph, cfg.f).cost;
    std::size_t slot = t * per_trial;
    for (const auto& method : cfg.methods) {
      const auto built = build_tree(sample.graph, method, cfg, tree_seed);
      const double c = cfg.f ? cost_value(sample.graph, built.tree, *cfg.f) : cost_value(sample.graph, built.tree);
      for (double e : cfg.eps) {
        PlantedRow& r = rows[slot++];
        r.trial = static_cast<std::int32_t>(t);
        r.n = n;
        r.p = cfg.model.p;
        r.q = cfg.model.q;
        r.eps = e;
        r.method = method;
        r.cost = c;
        r.optimal_cost = optimum;
        if (optimum) r.ratio = *optimum > 0.0 ? c / *optimum : 1.0;
        r.eps_good = epsilon_good(built.tree, sample.left, sample.right, e).has_value();
        r.certified = built.certified;
      }
    }
  });

  PlantedSummary out;
  for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
    for (std::size_t ei = 0; ei < cfg.eps.size(); ++ei) {
      PlantedAggregate a;
      a.method = cfg.methods[mi];
      a.eps = cfg.eps[ei];
      a.trials = cfg.trials;
      double good = 0.0, total = 0.0, opt_total = 0.0;
      for (std::int32_t t = 0; t < cfg.trials; ++t) {
        const auto& r = rows[static_cast<std::size_t>(t) * per_trial + mi * cfg.eps.size() + ei];
        good += r.eps_good ? 1.0 : 0.0;
        total += r.cost;
        if (r.optimal_cost) opt_total += *r.optimal_cost;
        if (r.ratio) a.max_ratio = std::max(a.max_ratio.value_or(0.0), *r.ratio);
      }
      a.eps_good_rate = good / cfg.trials;
      a.mean_cost = total / cfg.trials;
      if (have_optimum) a.mean_optimal_cost = opt_total / cfg.trials;
      out.aggregates.push_back(a);
    }
  }
  out.rows = std::move(rows);
  return out;
}

void write_planted_csv(std::ostream& out, const PlantedSummary& s) {
  out << "trial,n,p,q,eps,method,cost,optimal_cost,ratio,eps_good\n";
  for (const auto& r : s.rows) {
    out << r.trial << ',' << r.n << ',' << num(r.p) << ',' << num(r.q) << ',' << num(r.eps) << ',' << r.method << ','
        << num(r.cost) << ',' << opt_num(r.optimal_cost) << ',' << opt_num(r.ratio) << ','
        << (r.eps_good ? "true" : "false") << '\n';
  }
  // Aggregate rows: mean costs, worst ratio, and the eps-good rate.
  for (const auto& a : s.aggregates) {
    const auto& first = s.rows.front();
    out << "aggregate," << first.n << ',' << num(first.p) << ',' << num(first.q) << ',' << num(a.eps) << ','
        << a.method << ',' << num(a.mean_cost) << ',' << opt_num(a.mean_optimal_cost) << ','
        << opt_num(a.max_ratio) << ',' << num(a.eps_good_rate) << '\n';
  }
}

double greedy_bound(std::int32_t n, const std::optional<ScalingFunction>& f) {
  if (n < 2) return 0.0;
  const double ln = std::log(static_cast<double>(n));
  if (!f) return 27.0 / 4.0 * ln;
  double worst = 0.0;
  for (std::int32_t m = 2; m <= n; ++m) worst = std::max(worst, (*f)(m) / (*f)((m + 2) / 3));
  return 3.0 * worst * ln;
}

ApproximationSummary approximation_experiment(const ApproximationConfig& cfg) {
  if (cfg.instances < 1) throw DataError("instances must be at least 1");
  if (cfg.min_n < 2 || cfg.max_n > kMaxEnumerationLeaves || cfg.min_n > cfg.max_n)
    throw DataError("approximation corpus needs 2 <= min_n <= max_n <= 8");
  if (!(cfg.p > 0.0 && cfg.p <= 1.0)) throw DataError("p must lie in (0, 1]");
  if (cfg.fs.empty()) throw DataError("at least one scaling function is required");

  const std::size_t per = cfg.fs.size();
  std::vector<ApproximationRow> rows(static_cast<std::size_t>(cfg.instances) * per);
  parallel_for(static_cast<std::size_t>(cfg.instances), cfg.jobs, [&](std::size_t i) {
    Rng rng(derive_seed(cfg.seed, i));
    const auto n = cfg.min_n + static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(cfg.max_n - cfg.min_n + 1)));
    const Graph g = gen_connected_erdos_renyi(n, cfg.p, rng.next_u64());
    for (std::size_t k = 0; k < per; ++k) {
      const auto& f = cfg.fs[k];
      ApproximationRow& r = rows[i * per + k];
      r.instance = static_cast<std::int32_t>(i);
      r.n = n;
      r.f = f ? f->name() : "linear";
      MakeTreeOptions opt;
      opt.mode = CutMode::exact;
      const auto tree = f ? make_tree_generalized(g, *f, opt).tree : make_tree(g, opt).tree;
      r.cost = f ? cost_value(g, tree, *f) : cost_value(g, tree);
      r.optimal_cost = optimal_tree_bruteforce(g, f).cost;
      r.ratio = r.optimal_cost > 0.0 ? r.cost / r.optimal_cost : 1.0;
      r.bound = greedy_bound(n, f);
    }
  });

  ApproximationSummary out;
  for (const auto& r : rows) {
    out.max_ratio = std::max(out.max_ratio, r.ratio);
    if (r.ratio > r.bound * (1.0 + 1e-9) && r.n > 1) out.within_bound = false;
  }
  out.rows = std::move(rows);
  return out;
}

void write_approximation_csv(std::ostream& out, const ApproximationSummary& s) {
  out << "instance,n,f,cost,optimal_cost,ratio,bound\n";
  for (const auto& r : s.rows) {
    out << r.instance << ',' << r.n << ',' << r.f << ',' << num(r.cost) << ',' << num(r.optimal_cost) << ','
        << num(r.ratio) << ',' << num(r.bound) << '\n';
  }
  out << "aggregate,,,,," << num(s.max_ratio) << ',' << (s.within_bound ? "within" : "exceeded") << '\n';
}

}  // namespace hcost
