#include "hcost/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hcost/error.hpp"

namespace hcost {

Graph::Graph(std::int32_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw DataError("graph size must be nonnegative");
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
      throw DataError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") references a node >= n");
    if (e.u == e.v) throw DataError("self-loop on node " + std::to_string(e.u));
    if (!(e.w > 0.0) || !std::isfinite(e.w))
      throw DataError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has non-positive weight");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
      throw DataError("duplicate edge (" + std::to_string(edges_[i].u) + "," + std::to_string(edges_[i].v) + ")");
  }
  adj_.assign(static_cast<std::size_t>(n_), {});
  degree_.assign(static_cast<std::size_t>(n_), 0.0);
  for (const auto& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back({e.v, e.w});
    adj_[static_cast<std::size_t>(e.v)].push_back({e.u, e.w});
    degree_[static_cast<std::size_t>(e.u)] += e.w;
    degree_[static_cast<std::size_t>(e.v)] += e.w;
  }
  for (auto& list : adj_)
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.v < b.v; });
}

double Graph::weight(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return 0.0;
  const auto& list = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(list.begin(), list.end(), v, [](const Neighbor& nb, Vertex x) { return nb.v < x; });
  return (it != list.end() && it->v == v) ? it->w : 0.0;
}

double Graph::max_weight() const noexcept {
  double m = 0.0;
  for (const auto& e : edges_) m = std::max(m, e.w);
  return m;
}

double Graph::total_weight() const noexcept {
  double s = 0.0;
  for (const auto& e : edges_) s += e.w;
  return s;
}

bool Graph::unit_weights() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1.0; });
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view tok, T& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

Graph load_graph(std::string_view text) {
  std::int32_t n = -1;
  std::vector<Edge> edges;
  std::vector<std::pair<Vertex, Vertex>> seen;
  std::vector<std::size_t> seen_line;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    auto tok = tokens(line);
    if (n < 0) {
      if (tok.size() != 1 || !parse_number(tok[0], n) || n < 0)
        throw ParseError(line_no, "expected node count");
      continue;
    }
    if (tok.size() != 2 && tok.size() != 3) throw ParseError(line_no, "expected 'u v [w]'");
    Vertex u = 0, v = 0;
    double w = 1.0;
    if (!parse_number(tok[0], u) || !parse_number(tok[1], v)) throw ParseError(line_no, "bad node id");
    if (tok.size() == 3 && !parse_number(tok[2], w)) throw ParseError(line_no, "bad weight");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "node id out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    if (!(w > 0.0) || !std::isfinite(w)) throw ParseError(line_no, "weight must be positive");
    if (u > v) std::swap(u, v);
    edges.push_back({u, v, w});
    seen.emplace_back(u, v);
    seen_line.push_back(line_no);
  }
  if (n < 0) throw ParseError(line_no, "missing node count");

  std::vector<std::size_t> order(seen.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seen[a] < seen[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (seen[order[i]] == seen[order[i - 1]]) throw ParseError(seen_line[order[i]], "duplicate edge");
  }
  return Graph(n, std::move(edges));
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_double(e.w) << '\n';
  return out.str();
}

Graph complement(const Graph& g, double c) {
  if (!(c > 0.0)) throw DataError("complement constant must be positive");
  if (g.max_weight() > c) throw DataError("complement constant is below the maximum edge weight");
  std::vector<Edge> out;
  const auto n = g.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double wc = c - g.weight(u, v);
      if (wc > 0.0) out.push_back({u, v, wc});
    }
  }
  return Graph(n, std::move(out));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  if (subset.empty()) throw DataError("induced subgraph of an empty vertex set");
  InducedSubgraph out;
  out.old_to_new.assign(static_cast<std::size_t>(g.size()), -1);
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DataError("induced subgraph: repeated vertex");
  for (Vertex v : sorted) {
    if (v < 0 || v >= g.size()) throw DataError("induced subgraph: vertex out of range");
    out.old_to_new[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : sorted) {
    const Vertex nv = out.old_to_new[static_cast<std::size_t>(v)];
    for (const auto& nb : g.neighbors(v)) {
      const Vertex nu = out.old_to_new[static_cast<std::size_t>(nb.v)];
      if (nu > nv) edges.push_back({nv, nu, nb.w});
    }
  }
  out.graph = Graph(static_cast<std::int32_t>(sorted.size()), std::move(edges));
  return out;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<Vertex> label(n, -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    const auto id = static_cast<Vertex>(out.size());
    out.emplace_back();
    label[static_cast<std::size_t>(s)] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (const auto& nb : g.neighbors(v)) {
        if (label[static_cast<std::size_t>(nb.v)] < 0) {
          label[static_cast<std::size_t>(nb.v)] = id;
          stack.push_back(nb.v);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

double cut_weight(const Graph& g, std::span<const std::uint8_t> in_a) {
  double w = 0.0;
  for (const auto& e : g.edges()) {
    if ((in_a[static_cast<std::size_t>(e.u)] != 0) != (in_a[static_cast<std::size_t>(e.v)] != 0)) w += e.w;
  }
  return w;
}

double multiway_cut_weight(const Graph& g, std::span<const std::vector<Vertex>> parts) {
  std::vector<std::int32_t> part(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (Vertex v : parts[i]) part[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(i);
  double w = 0.0;
  for (const auto& e : g.edges()) {
    const auto pu = part[static_cast<std::size_t>(e.u)];
    const auto pv = part[static_cast<std::size_t>(e.v)];
    if (pu >= 0 && pv >= 0 && pu != pv) w += e.w;
  }
  return w;
}

}  // namespace hcost
