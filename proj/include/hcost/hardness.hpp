#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcost/graph.hpp"
#include "hcost/tree.hpp"

namespace hcost {

// Literal +i is x_i and -i is NOT x_i, with variables numbered from 1.
using Literal = std::int32_t;
using Clause = std::vector<Literal>;

struct CnfInstance {
  std::int32_t num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfInstance&, const CnfInstance&) = default;
};

// assignment[i] is the value of x_{i+1}.
using Assignment = std::vector<bool>;

/// DIMACS CNF ("c" comments, "p cnf V C" header, 0-terminated clauses).
/// Clause sizes must be 2 or 3. Throws ParseError with the offending line.
CnfInstance parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfInstance& phi);

/// Literal ranges and clause sizes; throws DataError.
void check_instance(const CnfInstance& phi);

struct NaestarReport {
  bool valid = true;
  std::vector<std::int32_t> violators;  // variables breaking the occurrence pattern
  std::vector<std::string> messages;    // one line per violator or malformed clause
};

/// Every variable must occur exactly once in a 3-clause and twice in
/// 2-clauses, once with each polarity.
NaestarReport validate_naestar(const CnfInstance& phi);

/// Rewrites a 3-clause-only formula so each variable occurrence gets a fresh
/// copy, tied together by an implication cycle. Clauses whose variables occur
/// only once are discarded first (repeatedly). Copies of x_i are numbered
/// consecutively in order of occurrence, variable by variable; the rewritten
/// 3-clauses come first, then the cycles in variable order.
CnfInstance from_naesat(const CnfInstance& phi3);

/// Applies the four redundancy rules until none fires:
///  1. a 3-clause holding both literals of a 2-clause is dropped;
///  2. likewise for a 3-clause holding both negated literals;
///  3. a later 2-clause equal to an earlier one with both polarities flipped
///     is dropped;
///  4. a clause holding a literal and its negation is dropped.
/// Surviving clauses keep their order; num_vars is unchanged.
CnfInstance remove_redundancies(const CnfInstance& phi);
bool is_redundancy_free(const CnfInstance& phi);

/// True iff every clause has a true literal and a false literal.
bool nae_satisfies(const CnfInstance& phi, const Assignment& a);

inline constexpr std::int32_t kMaxBruteVariables = 20;

/// First NAE-satisfying assignment counting upward in binary with x_1 as the
/// most significant bit (false < true), or nullopt.
std::optional<Assignment> naesat_brute(const CnfInstance& phi);

/// Graph node of a literal: x_i -> 2(i-1), NOT x_i -> 2(i-1)+1.
Vertex literal_node(Literal l);
std::string literal_name(Vertex node);

struct Reduction {
  Graph graph;
  std::int64_t M = 0;
  std::int64_t W = 0;
  std::int32_t n = 0;         // variables
  std::int32_t m = 0;         // 3-clauses
  std::int32_t m_prime = 0;   // 2-clauses
  std::vector<std::string> literal_map;  // node -> "x3" / "-x3"
};

/// Triangles on each 3-clause and on its negation, an edge pair per 2-clause
/// (literals and negations), and the heavy edge {x_i, NOT x_i} with weight
/// W = 2nm + 1. M = 10nm + 4nm' + 2n^2 W. Refuses input that is not valid
/// NAESAT* or still contains redundancies.
Reduction reduce_to_graph(const CnfInstance& phi);

/// Two-level tree for a NAE-satisfying assignment: the root splits true
/// literals from false ones, then each side splits once so that every
/// remaining triangle edge is cut; the parts below are caterpillars.
ClusterTree assignment_to_tree(const CnfInstance& phi, const Assignment& a);

}  // namespace hcost
