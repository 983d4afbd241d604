#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hcost::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("hcost_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("usage errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"gen", "clique", "--n", "0"}).code == 1);
    CHECK(run({"gen", "tree", "--n", "3"}).code == 1);
    CHECK(run({"cluster", "x.txt", "--method", "ward"}).code == 1);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("gen writes the edge list and sidecar") {
    TempDir d;
    const auto path = d.file("line8.txt");
    REQUIRE(run({"gen", "line", "--n", "8", "--out", path}).code == 0);
    CHECK(slurp(path).rfind("8\n0 1", 0) == 0);
    const auto side = nlohmann::json::parse(slurp(path + ".json"));
    CHECK(side["kind"] == "line");

    const auto pl = d.file("planted.txt");
    REQUIRE(run({"gen", "planted", "--n", "40", "--p", "0.8", "--q", "0.2", "--seed", "7", "--out", pl}).code == 0);
    const auto ps = nlohmann::json::parse(slurp(pl + ".json"));
    CHECK(ps["L"].size() == 20);
    CHECK(ps["R"].size() == 20);
    CHECK(ps["seed"] == 7);
    const auto first = slurp(pl);
    REQUIRE(run({"gen", "planted", "--n", "40", "--p", "0.8", "--q", "0.2", "--seed", "7", "--out", pl}).code == 0);
    CHECK(slurp(pl) == first);

    CHECK(run({"gen", "planted", "--n", "6", "--p", "0.2", "--q", "0.5"}).code == 2);
    const auto gp = run({"gen", "general-planted", "--sizes", "2,3", "--p", "1", "--q", "0"});
    CHECK(gp.code == 0);
    CHECK(gp.out == "5\n0 1 1\n2 3 1\n2 4 1\n3 4 1\n");
    CHECK(run({"gen", "two-cliques", "--l", "2", "--r", "2"}).out == "4\n0 1 1\n2 3 1\n");
  }

  TEST_CASE("cluster") {
    TempDir d;
    const auto k4 = d.write("k4.txt", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    auto r = run({"cluster", k4, "--method", "optimal"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["cost"]["total"] == 20.0);
    CHECK(j["metadata"]["certified"] == true);

    run({"gen", "line", "--n", "8", "--out", d.file("line8.txt")});
    r = run({"cluster", d.file("line8.txt"), "--method", "greedy", "--cut", "exact"});
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["cost"]["total"] == 24.0);
    CHECK(j["metadata"]["cut_mode"] == "exact");
    CHECK(j["metadata"]["seed"] == 0);

    r = run({"cluster", k4, "--method", "greedy-f", "--f", "log", "--seed", "5"});
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["metadata"]["f"] == "log");
    CHECK(j["metadata"]["seed"] == 5);

    r = run({"cluster", k4, "--method", "average", "--out", d.file("avg.json")});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(slurp(d.file("avg.json")))["cost"]["total"] == 20.0);

    run({"gen", "line", "--n", "9", "--out", d.file("line9.txt")});
    CHECK(run({"cluster", d.file("line9.txt"), "--method", "optimal"}).code == 2);
    CHECK(run({"cluster", k4, "--f", "cubic"}).code == 2);
    CHECK(run({"cluster", d.file("missing.txt")}).code == 2);
    CHECK(run({"cluster", d.write("bad.txt", "2\n0 0\n")}).code == 2);

    const auto a = run({"cluster", d.file("line9.txt"), "--cut", "heuristic", "--seed", "3"});
    const auto b = run({"cluster", d.file("line9.txt"), "--cut", "heuristic", "--seed", "3"});
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["metadata"]["certified"] == false);
  }

  TEST_CASE("cost") {
    TempDir d;
    const auto k4 = d.write("k4.txt", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    const auto t = d.write("t.json", "[[0,1],[2,3]]");
    auto r = run({"cost", k4, t});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["edge_sum"] == 20.0);
    CHECK(j["split_sum"] == 20.0);
    CHECK(j["form_difference"] == 0.0);

    const auto empty = d.write("e.txt", "4\n");
    CHECK(nlohmann::json::parse(run({"cost", empty, t}).out)["total"] == 0.0);

    run({"cluster", k4, "--method", "single", "--out", d.file("single.json")});
    CHECK(nlohmann::json::parse(run({"cost", k4, d.file("single.json")}).out)["total"] == 20.0);

    const auto wrong = d.write("w.json", "[[0,1],[2,5]]");
    CHECK(run({"cost", k4, wrong}).code == 2);
    CHECK(run({"cost", k4, d.write("junk.json", "{")}).code == 2);
    r = run({"cost", k4, t, "--f", "square"});
    CHECK(nlohmann::json::parse(r.out)["total"] == 4 * 16.0 + 2 * 4.0);
  }

  TEST_CASE("experiment") {
    TempDir d;
    const auto cfg = d.write("p.json", R"({"kind":"planted","n":8,"p":1.0,"q":0.0,"trials":1,"eps":[0.1],
      "methods":["greedy"],"cut":"exact","seed":4})");
    auto r = run({"experiment", cfg});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("trial,n,p,q,eps,method,cost,optimal_cost,ratio,eps_good\n", 0) == 0);
    CHECK(r.out.find("0,8,1,0,0.1,greedy,") != std::string::npos);
    CHECK(r.out.find(",true\n") != std::string::npos);
    CHECK(r.out.find("aggregate,") != std::string::npos);

    const auto a1 = run({"experiment", cfg, "--jobs", "1"});
    const auto a2 = run({"experiment", cfg, "--jobs", "2"});
    CHECK(a1.out == a2.out);

    const auto ap = d.write("a.json", R"({"kind":"approximation","instances":10,"max_n":6,"seed":2,"f":["linear","log"]})");
    r = run({"experiment", ap, "--out", d.file("a.csv")});
    REQUIRE(r.code == 0);
    const auto csv = slurp(d.file("a.csv"));
    CHECK(csv.rfind("instance,n,f,cost,optimal_cost,ratio,bound\n", 0) == 0);
    CHECK(csv.find("within") != std::string::npos);

    CHECK(run({"experiment", d.write("u.json", R"({"kind":"planted","n":8,"p":1,"q":0,"bogus":1})")}).code == 2);
    CHECK(run({"experiment", d.write("k.json", R"({"kind":"other"})")}).code == 2);
    CHECK(run({"experiment", d.write("t.json", R"({"n":"eight"})")}).code == 2);
    CHECK(run({"experiment", cfg, "--jobs", "0"}).code == 1);
  }

  TEST_CASE("reduce") {
    TempDir d;
    const auto cyc = d.write("cyc.cnf", "p cnf 3 4\n1 2 3 0\n-1 2 0\n-2 3 0\n-3 1 0\n");
    auto r = run({"reduce", cyc, "--witness", "--out", d.file("g.txt")});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["M"] == 192);
    CHECK(j["W"] == 7);
    CHECK(j["satisfiable"] == false);
    CHECK(j["witness"].is_null());
    CHECK(slurp(d.file("g.txt")).rfind("6\n", 0) == 0);
    CHECK(nlohmann::json::parse(slurp(d.file("g.txt") + ".json"))["M"] == 192);

    const auto sat = d.write("sat.cnf", "p cnf 6 8\n1 2 3 0\n4 5 6 0\n1 -2 0\n-1 4 0\n2 5 0\n3 -5 0\n-3 -6 0\n-4 6 0\n");
    r = run({"reduce", sat, "--witness"});
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["satisfiable"] == true);
    CHECK(j["witness"]["equals_M"] == true);
    CHECK(j["witness"]["cost"] == j["M"]);

    CHECK(run({"reduce", d.write("bad.cnf", "p cnf 2 1\n1 0\n")}).code == 2);
    CHECK(run({"reduce", d.write("inv.cnf", "p cnf 3 1\n1 2 3 0\n")}).code == 2);
    const auto three = d.write("three.cnf", "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
    CHECK(run({"reduce", three, "--rewrite"}).code == 2);
  }
}
