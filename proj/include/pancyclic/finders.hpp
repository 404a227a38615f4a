#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pancyclic/graph.hpp"
#include "pancyclic/invariants.hpp"
#include "pancyclic/paths.hpp"
#include "pancyclic/util.hpp"

namespace pancyclic {

namespace detail {

enum class SearchStatus { found, exhausted, budget };

struct CycleSearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<OrientedCycle> cycle;
  long long nodes = 0;
};

// Edge-anchored exact-length cycle search. Edges are processed in
// degree-sum-descending order and deleted once processed, so "exhausted"
// certifies absence. Pruned by BFS distance to the anchor.
CycleSearchResult bounded_cycle_search(const Graph& g, int target_len,
                                       long long node_budget);

}  // namespace detail

struct ShortCycle {
  OrientedCycle cycle;
  bool fallback = false;  // true when the case ladder gave up and plain search won
};

// Cycle of length exactly ell in 3..7 under min_degree > alpha, by the
// neighborhood path / matching / triangle case ladder, with a bounded
// search fallback when the cases' slack fails at small scale.
Expected<ShortCycle> find_short_cycle(const Graph& g, int ell);
Expected<ShortCycle> find_short_cycle(const Graph& g, int ell,
                                      const ConditionProfile& profile);

struct AnchoredEdge {
  int a = -1, b = -1;          // edge of the host graph H
  OrientedCycle anchor;        // 3- or 5-cycle through ab meeting X only in {a,b}
};

struct OddAnchorSubgraph {
  VertexSet host_vertices;              // the sampled set X = V(H)
  std::vector<AnchoredEdge> edges;
  Graph host;                           // H in the original vertex id space

  OddAnchorSubgraph() : host_vertices(0), host(0) {}
};

// Builds the anchored subgraph H: classify vertices by neighborhood
// matchings and triangles, assemble the tuple family F, then sample X at
// density 1/2 (seeded; retried up to 64 times) until the surviving pair set
// is at least |F|/32.
Expected<OddAnchorSubgraph> odd_anchor_subgraph(const Graph& g, std::uint64_t seed);
Expected<OddAnchorSubgraph> odd_anchor_subgraph(const Graph& g, std::uint64_t seed,
                                                const ConditionProfile& profile);

// ceil(((ell-2)(s^(1/x)+2)+1)(s-1)) with x = floor((ell-1)/2).
long long ramsey_bound_erdos(int ell, int s);

struct RamseyBound {
  long long bound = 0;
  bool in_regime = false;
};

// (ell-1)(s-1)+1; in_regime when s >= 3 and ell >= ln(s)/ln(ln(s)).
RamseyBound ramsey_bound_keevash(int ell, int s);

struct CycleOrIndep {
  std::optional<OrientedCycle> cycle;
  std::optional<VertexSet> independent;  // exactly s vertices when present

  bool neither() const { return !cycle && !independent; }
};

// Either a cycle of length ell or an independent set of size s; both
// searches exact within budget. Returns honest "neither" only when both
// searches ran to completion.
Expected<CycleOrIndep> find_cycle_or_independent_set(const Graph& g, int ell, int s,
                                                     long long node_budget = 20'000'000);

// ceil(max(20 ell n^(1+1/ell), 200 n ell)).
long long even_cycle_threshold(int ell, long long n);

// Cycle of length exactly two_ell (even, >= 4) by the anchored search.
// Guaranteed when e(g) meets even_cycle_threshold; otherwise may honestly
// report absence or budget exhaustion.
Expected<OrientedCycle> find_even_cycle(const Graph& g, int two_ell,
                                        long long node_budget = 20'000'000);

}  // namespace pancyclic
