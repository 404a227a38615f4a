#pragma once

#include <cstdint>
#include <functional>

#include "pancyclic/graph.hpp"
#include "pancyclic/invariants.hpp"
#include "pancyclic/util.hpp"

namespace pancyclic {

// Every labeled graph on n vertices (2^(n(n-1)/2) of them), edge-mask order.
// Sharding keeps masks with mask % shards == shard.
void for_each_graph(int n, const std::function<void(const Graph&, uint64_t)>& fn,
                    int shards = 1, int shard = 0);

// G(n,p) with raw 53-bit draws so the stream is stable across platforms.
Graph random_graph(int n, double p, uint64_t seed);

enum class ConditionTarget { kappa_gt_alpha, mindeg_gt_alpha };

struct ConditionInstance {
  Graph graph;
  ConditionProfile profile;
};

// Rejection-samples G(n,p), sweeping p upward, until the exact profile
// meets the target. Fails when the attempt budget runs out.
Expected<ConditionInstance> random_condition_graph(int n, ConditionTarget target,
                                                   uint64_t seed, int attempts = 400);

}  // namespace pancyclic
