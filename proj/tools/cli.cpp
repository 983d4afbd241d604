#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "hcost/clusterers.hpp"
#include "hcost/cost.hpp"
#include "hcost/error.hpp"
#include "hcost/experiment.hpp"
#include "hcost/hardness.hpp"
#include "hcost/instances.hpp"
#include "hcost/serialize.hpp"

namespace hcost::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out << text;
  if (!out) throw DataError("failed writing " + path);
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(what + ": " + e.what());
  }
}

std::optional<ScalingFunction> parse_f(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  return ScalingFunction::parse(spec);
}

CutMode parse_cut(const std::string& s) { return s == "heuristic" ? CutMode::heuristic : CutMode::exact; }
std::string cut_name(CutMode m) { return m == CutMode::exact ? "exact" : "heuristic"; }

json clusters_json(const std::vector<std::int32_t>& cluster) {
  std::int32_t k = 0;
  for (auto c : cluster) k = std::max(k, c + 1);
  std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < cluster.size(); ++v) groups[static_cast<std::size_t>(cluster[v])].push_back(static_cast<Vertex>(v));
  return groups;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string kind;
  std::int32_t n = 0, l = -1, r = -1;
  double p = -1.0, q = 0.0;
  std::vector<std::int32_t> sizes;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  Graph g;
  json side;
  side["kind"] = a.kind;
  auto need = [&](bool ok, const char* msg) {
    if (!ok) throw CLI::ValidationError(msg);
  };
  if (a.kind == "line" || a.kind == "clique") {
    need(a.n >= 1, "--n must be at least 1");
    g = a.kind == "line" ? gen_line(a.n) : gen_clique(a.n);
    side["n"] = a.n;
  } else if (a.kind == "two-cliques") {
    need(a.l >= 0 && a.r >= 0 && a.l + a.r >= 1, "--l and --r must be nonnegative with l + r >= 1");
    auto lg = gen_two_cliques(a.l, a.r);
    g = std::move(lg.graph);
    side["l"] = a.l;
    side["r"] = a.r;
    side["clusters"] = clusters_json(lg.cluster);
  } else if (a.kind == "planted") {
    need(a.n >= 2 && a.n % 2 == 0, "--n must be even and at least 2");
    need(a.p >= 0.0, "--p is required");
    auto s = gen_planted(a.n, a.p, a.q, a.seed);
    g = std::move(s.graph);
    side["n"] = a.n;
    side["p"] = a.p;
    side["q"] = a.q;
    side["seed"] = a.seed;
    side["L"] = s.left;
    side["R"] = s.right;
  } else {
    need(!a.sizes.empty(), "--sizes is required");
    need(a.p >= 0.0, "--p is required");
    const double p = a.p;
    auto lg = gen_general_planted(a.sizes, [p](Vertex, Vertex) { return p; }, a.q, a.seed);
    g = std::move(lg.graph);
    side["sizes"] = a.sizes;
    side["p"] = a.p;
    side["q"] = a.q;
    side["seed"] = a.seed;
    side["clusters"] = clusters_json(lg.cluster);
  }
  const auto text = write_edge_list(g);
  if (a.out.empty()) {
    out << text;
  } else {
    write_file(a.out, text);
    write_file(a.out + ".json", side.dump(2) + "\n");
    out << "wrote " << a.out << " and " << a.out << ".json\n";
  }
  (void)err;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// cluster

struct ClusterArgs {
  std::string graph;
  std::string method = "greedy";
  std::string f;
  std::string cut = "exact";
  std::int32_t cap = kDefaultExactCutCap;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_cluster(const ClusterArgs& a, std::ostream& out) {
  const Graph g = load_graph(read_file(a.graph));
  if (g.size() < 1) throw DataError("graph has no nodes");
  const auto f = parse_f(a.f);
  MakeTreeOptions opt;
  opt.mode = parse_cut(a.cut);
  opt.seed = a.seed;
  opt.exact.cap = a.cap;

  json meta;
  meta["method"] = a.method;
  meta["seed"] = a.seed;
  ClusterTree tree;
  if (a.method == "greedy" || a.method == "greedy-f") {
    const auto r = a.method == "greedy" ? make_tree(g, opt) : make_tree_generalized(g, f.value_or(ScalingFunction::linear()), opt);
    tree = r.tree;
    meta["cut_mode"] = cut_name(r.mode);
    meta["certified"] = r.certified;
    meta["heuristic_splits"] = r.heuristic_splits;
  } else if (a.method == "optimal") {
    tree = optimal_tree_bruteforce(g, f).tree;
    meta["cut_mode"] = "none";
    meta["certified"] = true;
  } else {
    tree = linkage(g, parse_linkage(a.method));
    meta["cut_mode"] = "none";
    meta["certified"] = false;
  }
  const ScalingFunction eval_f = f.value_or(ScalingFunction::linear());
  meta["f"] = eval_f.name();

  const auto report = generalized_cost(g, tree, eval_f);
  json doc;
  doc["tree"] = tree_to_json(tree);
  doc["newick"] = to_newick(tree);
  doc["cost"] = cost_report_to_json(report);
  doc["metadata"] = meta;
  const auto text = doc.dump(2) + "\n";
  if (a.out.empty()) out << text;
  else write_file(a.out, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// cost

int cmd_cost(const std::string& graph_path, const std::string& tree_path, const std::string& fspec, std::ostream& out) {
  const Graph g = load_graph(read_file(graph_path));
  json tj = parse_json(read_file(tree_path), tree_path);
  if (tj.is_object()) {
    if (!tj.contains("tree")) throw DataError(tree_path + ": object without a \"tree\" member");
    tj = tj["tree"];
  }
  const ClusterTree t = tree_from_json(tj);
  const auto f = parse_f(fspec).value_or(ScalingFunction::linear());
  const auto report = generalized_cost(g, t, f);
  json doc = cost_report_to_json(report);
  doc["edge_sum"] = report.total;
  doc["split_sum"] = report.split_total;
  doc["form_difference"] = report.form_difference();
  doc["f"] = f.name();
  out << doc.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// experiment

template <class T>
T take(json& cfg, const char* key, T fallback) {
  if (!cfg.contains(key)) return fallback;
  T v;
  try {
    v = cfg[key].get<T>();
  } catch (const json::exception&) {
    throw DataError(std::string("config key '") + key + "' has the wrong type");
  }
  cfg.erase(key);
  return v;
}

void reject_leftovers(const json& cfg) {
  for (auto it = cfg.begin(); it != cfg.end(); ++it) throw DataError("unknown config key '" + it.key() + "'");
}

int cmd_experiment(const std::string& path, std::optional<std::int32_t> jobs, const std::string& out_path,
                   std::ostream& out) {
  json cfg = parse_json(read_file(path), path);
  if (!cfg.is_object()) throw DataError("config must be a JSON object");
  const auto kind = take<std::string>(cfg, "kind", "planted");
  std::ostringstream csv;
  if (kind == "planted") {
    PlantedExperimentConfig c;
    c.model.n = take<std::int32_t>(cfg, "n", 0);
    c.model.p = take<double>(cfg, "p", 0.0);
    c.model.q = take<double>(cfg, "q", 0.0);
    c.trials = take<std::int32_t>(cfg, "trials", 1);
    c.eps = take<std::vector<double>>(cfg, "eps", c.eps);
    c.methods = take<std::vector<std::string>>(cfg, "methods", c.methods);
    const auto cut = take<std::string>(cfg, "cut", "heuristic");
    if (cut != "exact" && cut != "heuristic") throw DataError("cut must be 'exact' or 'heuristic'");
    c.cut = parse_cut(cut);
    c.f = parse_f(take<std::string>(cfg, "f", ""));
    c.seed = take<std::uint64_t>(cfg, "seed", 0);
    c.jobs = take<std::int32_t>(cfg, "jobs", 1);
    reject_leftovers(cfg);
    if (jobs) c.jobs = *jobs;
    write_planted_csv(csv, planted_experiment(c));
  } else if (kind == "approximation") {
    ApproximationConfig c;
    c.instances = take<std::int32_t>(cfg, "instances", c.instances);
    c.min_n = take<std::int32_t>(cfg, "min_n", c.min_n);
    c.max_n = take<std::int32_t>(cfg, "max_n", c.max_n);
    c.p = take<double>(cfg, "p", c.p);
    const auto fs = take<std::vector<std::string>>(cfg, "f", {"linear"});
    c.fs.clear();
    for (const auto& s : fs) c.fs.push_back(s == "linear" ? std::nullopt : parse_f(s));
    c.seed = take<std::uint64_t>(cfg, "seed", 0);
    c.jobs = take<std::int32_t>(cfg, "jobs", 1);
    reject_leftovers(cfg);
    if (jobs) c.jobs = *jobs;
    write_approximation_csv(csv, approximation_experiment(c));
  } else {
    throw DataError("unknown experiment kind '" + kind + "'");
  }
  if (out_path.empty()) out << csv.str();
  else write_file(out_path, csv.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// reduce

int cmd_reduce(const std::string& cnf_path, const std::string& out_path, bool witness, bool rewrite,
               std::ostream& out) {
  CnfInstance phi = parse_dimacs(read_file(cnf_path));
  if (rewrite) phi = from_naesat(phi);
  const auto before = phi.clauses.size();
  phi = remove_redundancies(phi);
  const auto red = reduce_to_graph(phi);

  json doc;
  doc["M"] = red.M;
  doc["W"] = red.W;
  doc["n"] = red.n;
  doc["m"] = red.m;
  doc["m_prime"] = red.m_prime;
  doc["removed_clauses"] = before - phi.clauses.size();
  doc["literal_map"] = red.literal_map;
  if (witness) {
    if (phi.num_vars > kMaxBruteVariables) {
      doc["witness"] = nullptr;
      doc["witness_skipped"] = "more than " + std::to_string(kMaxBruteVariables) + " variables";
    } else if (const auto a = naesat_brute(phi)) {
      doc["satisfiable"] = true;
      if (phi.num_vars == 0) {
        doc["witness"] = nullptr;
      } else {
        const auto t = assignment_to_tree(phi, *a);
        const double c = cost_value(red.graph, t);
        doc["witness"] = {{"assignment", std::vector<bool>(a->begin(), a->end())},
                          {"tree", tree_to_json(t)},
                          {"cost", c},
                          {"equals_M", c == static_cast<double>(red.M)}};
      }
    } else {
      doc["satisfiable"] = false;
      doc["witness"] = nullptr;
    }
  }
  if (!out_path.empty()) {
    write_file(out_path, write_edge_list(red.graph));
    write_file(out_path + ".json", doc.dump(2) + "\n");
  }
  out << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hierarchical clustering cost toolkit"};
  app.name("hcost");
  app.require_subcommand(1);

  GenArgs gen;
  auto* sgen = app.add_subcommand("gen", "Generate a graph instance");
  sgen->add_option("kind", gen.kind, "line | clique | two-cliques | planted | general-planted")
      ->required()
      ->check(CLI::IsMember({"line", "clique", "two-cliques", "planted", "general-planted"}));
  sgen->add_option("--n", gen.n, "Node count");
  sgen->add_option("--l", gen.l, "Left clique size");
  sgen->add_option("--r", gen.r, "Right clique size");
  sgen->add_option("--p", gen.p, "In-cluster edge probability")->check(CLI::Range(0.0, 1.0));
  sgen->add_option("--q", gen.q, "Cross-cluster edge probability")->check(CLI::Range(0.0, 1.0));
  sgen->add_option("--sizes", gen.sizes, "Cluster sizes (general-planted)")->delimiter(',');
  sgen->add_option("--seed", gen.seed, "RNG seed");
  sgen->add_option("--out", gen.out, "Edge-list path; a sidecar <out>.json is written alongside");

  ClusterArgs cl;
  auto* scl = app.add_subcommand("cluster", "Build a hierarchy for a graph");
  scl->add_option("graph", cl.graph, "Edge-list file")->required();
  scl->add_option("--method", cl.method)
      ->check(CLI::IsMember({"greedy", "greedy-f", "single", "average", "complete", "optimal"}));
  scl->add_option("--f", cl.f, "Scaling function: linear | log | square | power:A | table:v0,v1,...");
  scl->add_option("--cut", cl.cut, "Cut solver for greedy methods")->check(CLI::IsMember({"exact", "heuristic"}));
  scl->add_option("--cap", cl.cap, "Largest subproblem solved by exact cut search")->check(CLI::Range(2, 30));
  scl->add_option("--seed", cl.seed, "RNG seed for the heuristic solver");
  scl->add_option("--out", cl.out, "Output JSON path (default stdout)");

  std::string cost_graph, cost_tree, cost_f;
  auto* scost = app.add_subcommand("cost", "Evaluate the cost of a stored tree");
  scost->add_option("graph", cost_graph)->required();
  scost->add_option("tree", cost_tree, "Tree JSON (nested arrays, or a cluster output document)")->required();
  scost->add_option("--f", cost_f, "Scaling function");

  std::string exp_config, exp_out;
  std::optional<std::int32_t> exp_jobs;
  auto* sexp = app.add_subcommand("experiment", "Run an experiment described by a JSON config");
  sexp->add_option("config", exp_config)->required();
  sexp->add_option("--jobs", exp_jobs, "Worker threads")->check(CLI::PositiveNumber);
  sexp->add_option("--out", exp_out, "CSV path (default stdout)");

  std::string red_cnf, red_out;
  bool red_witness = false, red_rewrite = false;
  auto* sred = app.add_subcommand("reduce", "Build the hardness graph for a DIMACS formula");
  sred->add_option("cnf", red_cnf)->required();
  sred->add_option("--out", red_out, "Edge-list path; a sidecar <out>.json is written alongside");
  sred->add_flag("--witness", red_witness, "Search for a NAE-satisfying assignment and emit its tree");
  sred->add_flag("--rewrite", red_rewrite, "Rewrite a 3-clause formula into NAESAT* form first");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sgen) return cmd_gen(gen, out, err);
    if (*scl) return cmd_cluster(cl, out);
    if (*scost) return cmd_cost(cost_graph, cost_tree, cost_f, out);
    if (*sexp) return cmd_experiment(exp_config, exp_jobs, exp_out, out);
    if (*sred) return cmd_reduce(red_cnf, red_out, red_witness, red_rewrite, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace hcost::cli
