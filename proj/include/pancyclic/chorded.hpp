#pragma once

#include "pancyclic/graph.hpp"
#include "pancyclic/invariants.hpp"
#include "pancyclic/paths.hpp"
#include "pancyclic/util.hpp"

namespace pancyclic {

// Builds a short path carrying k pairwise non-intersecting chords of span 2
// or 3 (at least one of span 2). Grows three vertices at a time at the
// active end: triangle at the end, triangle at a neighbor, or an edge
// between the end's and a neighbor's private neighborhoods.
// Needs min_degree > alpha and 1 <= k <= alpha/6.
Expected<ChordedPath> build_chorded_path(const Graph& g, int k);
Expected<ChordedPath> build_chorded_path(const Graph& g, int k,
                                         const ConditionProfile& profile);

// Closes a chorded path into a cycle via a shortest end-to-end return path
// that avoids the path's interior. Fails when no return path fits the
// length budget.
Expected<OrientedCycle> extend_to_short_cycle(const Graph& g, const ChordedPath& cp,
                                              int len_budget);

}  // namespace pancyclic
