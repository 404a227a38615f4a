#pragma once

#include <map>
#include <optional>

#include "pancyclic/graph.hpp"
#include "pancyclic/paths.hpp"

namespace pancyclic {

// Reference answers: "none" is exact (the search ran to completion),
// "unknown" means the node budget ran out first.
enum class OracleAnswer { found, none, unknown };

struct OracleResult {
  OracleAnswer answer = OracleAnswer::unknown;
  std::optional<OrientedCycle> cycle;
  long long nodes = 0;
};

// Anchored DFS: each round fixes the smallest cycle vertex and walks only
// larger ones, pruned by BFS distance back to the anchor.
OracleResult brute_find_cycle(const Graph& g, int ell, long long budget = 50'000'000);

struct PancyclicReport {
  std::map<int, OracleAnswer> per_length;
  bool all_found() const;
  bool any_unknown() const;
};

PancyclicReport is_pancyclic_brute(const Graph& g, long long budget_per_length = 50'000'000);

// Number of ell-cycles by trace inclusion-exclusion over induced subsets;
// exact, exponential in n, meant for n <= 10.
long long count_cycles_trace(const Graph& g, int ell);

}  // namespace pancyclic
