#include "hcost/hardness.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <set>

#include "hcost/error.hpp"

namespace hcost {

namespace {

std::int32_t var_of(Literal l) { return l < 0 ? -l : l; }

bool contains(const Clause& c, Literal l) { return std::find(c.begin(), c.end(), l) != c.end(); }

bool has_complementary(const Clause& c) {
  for (Literal l : c)
    if (contains(c, -l)) return true;
  return false;
}

bool literal_true(Literal l, const Assignment& a) {
  const bool v = a[static_cast<std::size_t>(var_of(l) - 1)];
  return l > 0 ? v : !v;
}

std::string lit_str(Literal l) { return (l < 0 ? "-x" : "x") + std::to_string(var_of(l)); }

// Index of the first rule application, or nullopt when the formula is clean.
struct Hit {
  std::size_t clause;
};

std::optional<Hit> find_redundancy(const std::vector<Clause>& cs) {
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (has_complementary(cs[i])) return Hit{i};
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].size() != 2) continue;
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[j].size() != 2) continue;
      const Clause& a = cs[i];
      const Clause& b = cs[j];
      if ((b[0] == -a[0] && b[1] == -a[1]) || (b[0] == -a[1] && b[1] == -a[0])) return Hit{j};
    }
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].size() != 2) continue;
    const Clause& c = cs[i];
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (cs[j].size() != 3) continue;
      if ((contains(cs[j], c[0]) && contains(cs[j], c[1])) || (contains(cs[j], -c[0]) && contains(cs[j], -c[1])))
        return Hit{j};
    }
  }
  return std::nullopt;
}

}  // namespace

void check_instance(const CnfInstance& phi) {
  if (phi.num_vars < 0) throw DataError("negative variable count");
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    const auto& c = phi.clauses[i];
    if (c.size() != 2 && c.size() != 3)
      throw DataError("clause " + std::to_string(i + 1) + " has " + std::to_string(c.size()) +
                      " literals; expected 2 or 3");
    for (Literal l : c)
      if (l == 0 || var_of(l) > phi.num_vars)
        throw DataError("clause " + std::to_string(i + 1) + " references an unknown variable");
  }
}

CnfInstance parse_dimacs(std::string_view text) {
  CnfInstance phi;
  bool have_header = false;
  std::int64_t declared = 0;
  Clause current;
  std::size_t line_no = 0;
  std::size_t clause_line = 0;
  std::size_t header_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    std::size_t s = line.find_first_not_of(" \t");
    if (s == std::string_view::npos) continue;
    line.remove_prefix(s);
    if (line[0] == 'c') continue;
    if (line[0] == '%') break;
    if (line[0] == 'p') {
      if (have_header) throw ParseError(line_no, "duplicate problem line");
      std::string h(line);
      char fmt[8] = {};
      long long v = 0, c = 0;
      int consumed = 0;
      if (std::sscanf(h.c_str(), "p %7s %lld %lld%n", fmt, &v, &c, &consumed) != 3 || std::string(fmt) != "cnf" ||
          v < 0 || c < 0 || h.find_first_not_of(" \t", static_cast<std::size_t>(consumed)) != std::string::npos)
        throw ParseError(line_no, "malformed problem line; expected 'p cnf <vars> <clauses>'");
      phi.num_vars = static_cast<std::int32_t>(v);
      declared = c;
      header_line = line_no;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause before the problem line");
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      std::int64_t lit = 0;
      const auto* first = line.data() + i;
      const auto* last = line.data() + line.size();
      const auto r = std::from_chars(first, last, lit);
      if (r.ec != std::errc() || (r.ptr != last && *r.ptr != ' ' && *r.ptr != '\t'))
        throw ParseError(line_no, "invalid literal");
      i = static_cast<std::size_t>(r.ptr - line.data());
      if (lit == 0) {
        if (current.size() != 2 && current.size() != 3)
          throw ParseError(line_no, "clause has " + std::to_string(current.size()) + " literals; expected 2 or 3");
        phi.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (lit > phi.num_vars || -lit > phi.num_vars) throw ParseError(line_no, "literal out of range");
      if (current.empty()) clause_line = line_no;
      current.push_back(static_cast<Literal>(lit));
    }
  }
  if (!have_header) throw ParseError(line_no, "missing problem line");
  if (!current.empty()) throw ParseError(clause_line, "unterminated clause");
  if (static_cast<std::int64_t>(phi.clauses.size()) != declared)
    throw ParseError(header_line, "problem line declares " + std::to_string(declared) + " clauses, found " +
                                  std::to_string(phi.clauses.size()));
  return phi;
}

std::string write_dimacs(const CnfInstance& phi) {
  std::string out = "p cnf " + std::to_string(phi.num_vars) + " " + std::to_string(phi.clauses.size()) + "\n";
  for (const auto& c : phi.clauses) {
    for (Literal l : c) out += std::to_string(l) + " ";
    out += "0\n";
  }
  return out;
}

NaestarReport validate_naestar(const CnfInstance& phi) {
  NaestarReport rep;
  const auto n = static_cast<std::size_t>(std::max(phi.num_vars, 0));
  std::vector<std::int32_t> in3(n + 1, 0), pos2(n + 1, 0), neg2(n + 1, 0);
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    const auto& c = phi.clauses[i];
    bool ok = c.size() == 2 || c.size() == 3;
    for (Literal l : c) ok = ok && l != 0 && var_of(l) <= phi.num_vars;
    if (!ok) {
      rep.valid = false;
      rep.messages.push_back("clause " + std::to_string(i + 1) + " is malformed");
      continue;
    }
    for (Literal l : c) {
      const auto v = static_cast<std::size_t>(var_of(l));
      if (c.size() == 3) ++in3[v];
      else (l > 0 ? pos2 : neg2)[v]++;
    }
  }
  for (std::size_t v = 1; v <= n; ++v) {
    if (in3[v] == 1 && pos2[v] == 1 && neg2[v] == 1) continue;
    rep.valid = false;
    rep.violators.push_back(static_cast<std::int32_t>(v));
    rep.messages.push_back("x" + std::to_string(v) + ": " + std::to_string(in3[v]) + " in 3-clauses, " +
                           std::to_string(pos2[v]) + " positive and " + std::to_string(neg2[v]) +
                           " negative in 2-clauses");
  }
  return rep;
}

CnfInstance from_naesat(const CnfInstance& phi3) {
  check_instance(phi3);
  for (const auto& c : phi3.clauses)
    if (c.size() != 3) throw DataError("from_naesat expects 3-clauses only");

  std::vector<Clause> kept = phi3.clauses;
  const auto n = static_cast<std::size_t>(phi3.num_vars);
  for (;;) {
    std::vector<std::int32_t> occ(n + 1, 0);
    for (const auto& c : kept)
      for (Literal l : c) ++occ[static_cast<std::size_t>(var_of(l))];
    const auto before = kept.size();
    std::erase_if(kept, [&](const Clause& c) {
      return std::any_of(c.begin(), c.end(), [&](Literal l) { return occ[static_cast<std::size_t>(var_of(l))] == 1; });
    });
    if (kept.size() == before) break;
  }

  // copies[v] lists the fresh variable ids for each occurrence of v, in order.
  std::vector<std::vector<std::int32_t>> copies(n + 1);
  std::vector<std::int32_t> occ(n + 1, 0);
  for (const auto& c : kept)
    for (Literal l : c) ++occ[static_cast<std::size_t>(var_of(l))];
  std::int32_t next = 1;
  for (std::size_t v = 1; v <= n; ++v)
    for (std::int32_t k = 0; k < occ[v]; ++k) copies[v].push_back(next++);

  CnfInstance out;
  out.num_vars = next - 1;
  std::vector<std::size_t> used(n + 1, 0);
  for (const auto& c : kept) {
    Clause r;
    for (Literal l : c) {
      const auto v = static_cast<std::size_t>(var_of(l));
      const auto fresh = copies[v][used[v]++];
      r.push_back(l > 0 ? fresh : -fresh);
    }
    out.clauses.push_back(std::move(r));
  }
  for (std::size_t v = 1; v <= n; ++v) {
    const auto& cp = copies[v];
    for (std::size_t k = 0; k < cp.size(); ++k) out.clauses.push_back({-cp[k], cp[(k + 1) % cp.size()]});
  }
  return out;
}

CnfInstance remove_redundancies(const CnfInstance& phi) {
  check_instance(phi);
  CnfInstance out = phi;
  while (auto hit = find_redundancy(out.clauses))
    out.clauses.erase(out.clauses.begin() + static_cast<std::ptrdiff_t>(hit->clause));
  return out;
}

bool is_redundancy_free(const CnfInstance& phi) { return !find_redundancy(phi.clauses).has_value(); }

bool nae_satisfies(const CnfInstance& phi, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(phi.num_vars)) throw DataError("assignment size does not match formula");
  for (const auto& c : phi.clauses) {
    bool any_true = false, any_false = false;
    for (Literal l : c) (literal_true(l, a) ? any_true : any_false) = true;
    if (!any_true || !any_false) return false;
  }
  return true;
}

std::optional<Assignment> naesat_brute(const CnfInstance& phi) {
  check_instance(phi);
  if (phi.num_vars > kMaxBruteVariables)
    throw DataError("brute-force search supports at most " + std::to_string(kMaxBruteVariables) + " variables");
  const auto n = static_cast<std::size_t>(phi.num_vars);
  Assignment a(n, false);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (std::size_t i = 0; i < n; ++i) a[i] = (bits >> (n - 1 - i)) & 1u;
    if (nae_satisfies(phi, a)) return a;
  }
  return std::nullopt;
}

Vertex literal_node(Literal l) {
  if (l == 0) throw DataError("literal 0 is not a variable");
  return 2 * (var_of(l) - 1) + (l < 0 ? 1 : 0);
}

std::string literal_name(Vertex node) { return lit_str(node % 2 == 0 ? node / 2 + 1 : -(node / 2 + 1)); }

Reduction reduce_to_graph(const CnfInstance& phi) {
  check_instance(phi);
  const auto rep = validate_naestar(phi);
  if (!rep.valid) {
    std::string msg = "not a valid NAESAT* instance";
    for (const auto& m : rep.messages) msg += "; " + m;
    throw DataError(msg);
  }
  if (!is_redundancy_free(phi)) throw DataError("instance contains redundant clauses; remove them first");

  Reduction r;
  r.n = phi.num_vars;
  for (const auto& c : phi.clauses) (c.size() == 3 ? r.m : r.m_prime)++;
  const std::int64_t n = r.n, m = r.m, mp = r.m_prime;
  r.W = 2 * n * m + 1;
  r.M = 10 * n * m + 4 * n * mp + 2 * n * n * r.W;

  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  auto add = [&](Literal a, Literal b, double w) {
    Vertex u = literal_node(a), v = literal_node(b);
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw DataError("edge {" + lit_str(a) + ", " + lit_str(b) + "} arises twice");
    edges.push_back({u, v, w});
  };
  for (const auto& c : phi.clauses) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        add(c[i], c[j], 1.0);
        add(-c[i], -c[j], 1.0);
      }
    }
  }
  for (std::int32_t i = 1; i <= r.n; ++i) add(i, -i, static_cast<double>(r.W));
  r.graph = Graph(2 * r.n, std::move(edges));
  for (Vertex v = 0; v < 2 * r.n; ++v) r.literal_map.push_back(literal_name(v));
  return r;
}

ClusterTree assignment_to_tree(const CnfInstance& phi, const Assignment& a) {
  check_instance(phi);
  if (phi.num_vars < 1) throw DataError("assignment_to_tree needs at least one variable");
  if (!nae_satisfies(phi, a)) throw DataError("assignment does not NAE-satisfy the formula");

  const auto n = static_cast<std::size_t>(phi.num_vars);
  std::vector<std::uint8_t> positive(2 * n, 0);  // literal node is true under a
  for (std::size_t i = 0; i < n; ++i) positive[literal_node(a[i] ? static_cast<Literal>(i + 1) : -static_cast<Literal>(i + 1))] = 1;

  // Triangle edges surviving the top split, one per triangle.
  std::vector<std::uint8_t> first_end(2 * n, 0);
  for (const auto& c : phi.clauses) {
    if (c.size() != 3) continue;
    for (int sign : {1, -1}) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
          Vertex u = literal_node(sign * c[i]), v = literal_node(sign * c[j]);
          if (positive[static_cast<std::size_t>(u)] != positive[static_cast<std::size_t>(v)]) continue;
          first_end[static_cast<std::size_t>(std::min(u, v))] = 1;
        }
      }
    }
  }

  TreeBuilder b;
  auto chain = [&](const std::vector<Vertex>& vs) {
    TreeBuilder::Handle h = b.leaf(vs.front());
    for (std::size_t i = 1; i < vs.size(); ++i) h = b.join({h, b.leaf(vs[i])});
    return h;
  };
  auto side = [&](std::uint8_t want) {
    std::vector<Vertex> p1, p2;
    for (Vertex v = 0; v < static_cast<Vertex>(2 * n); ++v) {
      if (positive[static_cast<std::size_t>(v)] != want) continue;
      (first_end[static_cast<std::size_t>(v)] ? p1 : p2).push_back(v);
    }
    if (p1.empty()) return chain(p2);
    return b.join({chain(p1), chain(p2)});
  };
  const auto top_true = side(1);
  const auto top_false = side(0);
  return b.build(b.join({top_true, top_false}));
}

}  // namespace hcost
