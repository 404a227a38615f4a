#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pancyclic/chorded.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/invariants.hpp"
#include "pancyclic/paths.hpp"
#include "pancyclic/util.hpp"
#include "pancyclic/vertex_set.hpp"

namespace pancyclic {

struct PipelineParams {
  double delta = 0.01;
  double eta = 0.1;                       // delta < eta < 1
  long long fallback_budget = 5'000'000;  // plain bounded cycle search nodes
  long long search_budget = 20'000'000;   // ramsey / even-cycle search nodes
  long long alpha_budget = kDefaultAlphaBudget;
  long long shorten_budget = 4000;        // reversal states per shortening call
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

// Which range drivers claim target length ell. Lower and upper come from the
// case split's own inequalities; middle closes the gap between them, so the
// three windows cover every ell in [3, n].
struct DispatchWindows {
  bool lower = false;
  bool middle = false;
  bool upper = false;
};
DispatchWindows dispatch_windows(long long n, int alpha, int ell, double delta);

// Path on `order` vertices inside `within`, lexicographically least start,
// DFS. nullopt when no such path exists.
std::optional<Path> find_path_of_order(const Graph& g, const VertexSet& within,
                                       int order);

// Same-ends strictly shorter path. Shortfall stays under ceil(20n/min_degree),
// n and min_degree taken over the non-isolated vertices of g. Chord skips
// first, then a bounded breadth search over segment reversals.
Expected<Path> shorten_path_mindeg(const Graph& g, const Path& p,
                                   long long state_budget = 4000);

// Same engine with the independence-number window ceil(20*alpha^2/|p|).
Expected<Path> shorten_path_indep(const Graph& g, const Path& p, int alpha,
                                  long long state_budget = 4000);

// Structure of a connected graph with no path on five vertices: complete on
// four vertices, a tree, or a single apex whose removal leaves a forest.
struct P5Structure {
  enum class Kind { k4, tree, apex };
  Kind kind = Kind::tree;
  int apex = -1;     // apex kind only
  VertexSet rest;    // tree: all of h; k4: all of h; apex: h minus the apex
  P5Structure() : rest(0) {}
};
Expected<P5Structure> p5free_structure(const Graph& g, const VertexSet& h);

// Absorbs part of component h into the cycle, growing it by at most 4 and
// missing at most 4 old edges, so that what is left of h is a nonempty
// forest. h must be a P5-free component of g minus the cycle.
Expected<OrientedCycle> extend_keeping_forest(const Graph& g,
                                              const OrientedCycle& c,
                                              const VertexSet& h, int alpha);

// Turns a chord-rich cycle shorter than ell into a cycle of length exactly
// ell, assuming everything off the cycle is P5-free. Three rounds of
// forest-keeping extension, then a final case split on the length reached.
Expected<OrientedCycle> length3_remainder(const Graph& g,
                                          const OrientedCycle& c0, int ell,
                                          const PipelineParams& params,
                                          const ConditionProfile& profile);

// Improvement loop: grows c0 while some off-cycle component still has a path
// on five vertices and |C| < ell. Keeps p0's edges on the cycle when it can;
// once a move drops one, every later cycle must carry enough span-2 chords.
// Stalls are reported, not patched.
Expected<OrientedCycle> lemma_long(const Graph& g, const OrientedCycle& c0,
                                   const ChordedPath& p0, int ell,
                                   const PipelineParams& params,
                                   const ConditionProfile& profile);

struct RangeOutcome {
  OrientedCycle cycle;
  std::string provenance;  // driver that produced the cycle; "fallback" inside
                           // the tag marks plain bounded search
};

// Long targets: chorded path, short closure, improvement loop, then either
// the length-3 remainder finisher or shorten-and-contract.
Expected<RangeOutcome> upper_range(const Graph& g, int ell,
                                   const PipelineParams& params);
Expected<RangeOutcome> upper_range(const Graph& g, int ell,
                                   const PipelineParams& params,
                                   const ConditionProfile& profile);

// Two same-ends paths with disjoint interiors: a short chorded one and a
// longer return, total length at most about n/alpha. Shortcut branch when a
// short return path exists; otherwise the layered construction.
Expected<std::pair<ChordedPath, Path>> n_over_alpha_paths(
    const Graph& g, const PipelineParams& params);
Expected<std::pair<ChordedPath, Path>> n_over_alpha_paths(
    const Graph& g, const PipelineParams& params,
    const ConditionProfile& profile);

// Same-ends path longer by 1..r: auxiliary cycle of length floor(r/2) off p,
// a fan of disjoint induced paths onto p, then detour through the cycle
// (short fan paths) or through an edge between far fan vertices (long ones).
Expected<Path> mid_range_extend(const Graph& g, const Path& p, int r,
                                int alpha,
                                long long search_budget = 20'000'000);

// Middle targets: n_over_alpha_paths, grow the return path in steps of at
// most r, then contract the chorded path to land exactly on ell.
Expected<RangeOutcome> middle_range(const Graph& g, int ell,
                                    const PipelineParams& params);
Expected<RangeOutcome> middle_range(const Graph& g, int ell,
                                    const PipelineParams& params,
                                    const ConditionProfile& profile);

// Short targets: the 3..7 case ladder, then either the Ramsey-style search
// (cycle or impossible independent set) or, in the dense branch, an even
// cycle in the anchored subgraph with an odd splice.
Expected<RangeOutcome> lower_range(const Graph& g, int ell,
                                   const PipelineParams& params);
Expected<RangeOutcome> lower_range(const Graph& g, int ell,
                                   const PipelineParams& params,
                                   const ConditionProfile& profile);

struct Certificate {
  int n = 0;
  ConditionProfile profile;
  std::map<int, OrientedCycle> cycles;      // length -> validated cycle
  std::map<int, std::string> provenance;    // length -> producing driver
  std::vector<int> missing;                 // lengths in [3, n] with no cycle

  bool hypothesis_holds() const { return profile.kappa > profile.alpha; }
  bool pancyclic() const;
  std::string to_json() const;
};

// Certificate for every length in [3, n]: Hamilton step, the n >= 4*alpha^2
// shortcut, or the three range drivers per dispatch_windows; every failure
// retried by bounded search and every gap recorded.
Certificate certify_pancyclic(const Graph& g, const PipelineParams& params = {});

namespace detail {

// First index i in [lo, hi] with sizes[i..i+6] all <= cap (and in range).
std::optional<int> find_layer_window(const std::vector<int>& sizes, int lo,
                                     int hi, int cap);

// Non-shortcut branch of n_over_alpha_paths, callable directly: BFS layers
// from pinit's front, seven thin consecutive layers, inter-layer matchings,
// and the chain of chorded pieces walked through them. frac plays the
// fraction role the caller chose for the lemma.
Expected<std::pair<ChordedPath, Path>> layer_branch(const Graph& g,
                                                    const Path& pinit,
                                                    double frac, double eta,
                                                    int alpha);

// n_over_alpha_paths with an explicit fraction (middle_range passes eta).
Expected<std::pair<ChordedPath, Path>> n_over_alpha_with(
    const Graph& g, const PipelineParams& params, double frac,
    const ConditionProfile& profile);

// Dense lower branch: anchored subgraph, even cycle of the matched length in
// the heavier half, odd targets spliced through one anchor.
Expected<RangeOutcome> lower_dense_route(const Graph& g, int ell,
                                         const PipelineParams& params,
                                         const ConditionProfile& profile);

}  // namespace detail

}  // namespace pancyclic
