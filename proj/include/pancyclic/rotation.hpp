#pragma once

#include <optional>

#include "pancyclic/invariants.hpp"
#include "pancyclic/paths.hpp"

namespace pancyclic {

// Cycle rewiring moves. Preconditions are checked eagerly and violations come
// back as failures with a precise report; callers probe many candidates.

struct RotationConfig {
  OrientedCycle cycle;
  int u = -1, v = -1;
  Path bridge;  // runs from x to y; x attaches to v, y attaches to u
};

// C' = u ..forward.. v-  v- u- edge  u- ..backward.. v  v x u.
// Needs x off-cycle adjacent to u and v, and the edge u- v-. Length +1.
Expected<OrientedCycle> rotate_c1(const Graph& g, const OrientedCycle& c, int u, int v,
                                  int x);

// Same rewiring with a bridge path x..y replacing the single vertex:
// C' = u ..forward.. v-  u- ..backward.. v  x ..bridge.. y  u. Length + |bridge|.
Expected<OrientedCycle> rotate_c2(const Graph& g, const RotationConfig& cfg);

// Replace the forward arc u -> v (interior dropped) by the bridge:
// C' = u ..backward.. v  x ..bridge.. y  u. Needs uy, vx.
// Length - |dropped interior| + |bridge|.
Expected<OrientedCycle> rotate_c3(const Graph& g, const OrientedCycle& c, int u, int v,
                                  int x, int y, const Path& bridge);

// Chord u- v-3 variant: drops v-, v-2; needs cycle-distance(u, v) >= 4.
// Length - 2 + |bridge|.
Expected<OrientedCycle> rotate_c4(const Graph& g, const RotationConfig& cfg);

// Chord u-3 v-3 variant: drops v-, v-2, u-, u-2; distance >= 4.
// Length - 4 + |bridge|.
Expected<OrientedCycle> rotate_c5(const Graph& g, const RotationConfig& cfg);

// Strictly longer cycle absorbing a path of component h that contains u and
// avoids v, missing at most two edges of c. Requires kappa(g) > alpha(g).
Expected<OrientedCycle> extend_into_component(const Graph& g, const OrientedCycle& c,
                                              const VertexSet& h, int u, int v);

namespace detail {
// Core of the extension argument; `avoid` absent allows kappa == alpha.
Expected<OrientedCycle> extend_with_anchor(const Graph& g, const OrientedCycle& c, int u,
                                           std::optional<int> avoid, int alpha);
}  // namespace detail

// Hamilton cycle under kappa >= alpha via repeated extension; bootstraps from
// a triangle or, failing that, a shortest cycle.
Expected<OrientedCycle> ce_hamilton(const Graph& g);
Expected<OrientedCycle> ce_hamilton(const Graph& g, const ConditionProfile& profile);

}  // namespace pancyclic
