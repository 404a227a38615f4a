#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pancyclic/graph.hpp"
#include "pancyclic/util.hpp"
#include "pancyclic/vertex_set.hpp"

namespace pancyclic {

inline constexpr long long kDefaultAlphaBudget = 100'000'000;

struct ConditionProfile {
  int alpha = 0;
  int kappa = 0;
  int min_degree = 0;
};

// Exact via branch and bound with a greedy clique-cover bound.
// Throws BudgetError once node_budget expansions are spent.
int independence_number(const Graph& g, long long node_budget = kDefaultAlphaBudget);

// Largest independent set inside `within` (exact, same engine).
VertexSet max_independent_set_in(const Graph& g, const VertexSet& within,
                                 long long node_budget = kDefaultAlphaBudget);

// Exact: max-flow over the vertex-split digraph, sinks ranging over
// non-neighbors of a fixed minimum-degree source plus its neighbor pairs.
// Complete graphs give n-1; disconnected 0.
int vertex_connectivity(const Graph& g);

ConditionProfile condition_profile(const Graph& g,
                                   long long node_budget = kDefaultAlphaBudget);

struct BfsLayers {
  int source = -1;
  std::vector<VertexSet> layers;   // layers[0] = {source}
  std::vector<int> depth;          // -1 for unreachable / excluded
};
BfsLayers bfs_layers(const Graph& g, int source, const VertexSet& forbidden);
BfsLayers bfs_layers(const Graph& g, int source);

// Lexicographically least edge with both ends in s, if any.
std::optional<std::pair<int, int>> find_edge_in(const Graph& g, const VertexSet& s);

struct DisjointPathsResult {
  std::vector<std::vector<int>> paths;  // each from an a-vertex to a b-vertex
  std::optional<VertexSet> cut;         // present iff fewer than k paths exist
};

// Up to k paths from a to b, pairwise internally vertex-disjoint, interiors
// avoiding a, b and forbidden. A singleton side may host several paths; a
// multi-vertex side hosts at most one per vertex. Menger-exact: when fewer
// than k are returned, `cut` separates a from b in g - forbidden.
DisjointPathsResult disjoint_paths(const Graph& g, const VertexSet& a,
                                   const VertexSet& b, int k,
                                   const VertexSet& forbidden);

// Maximum matching (general graphs, blossom contraction) restricted to `within`.
std::vector<std::pair<int, int>> max_matching_in(const Graph& g, const VertexSet& within);

}  // namespace pancyclic
