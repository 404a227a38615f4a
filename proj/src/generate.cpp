#include "pancyclic/generate.hpp"

#include <random>
#include <string>
#include <vector>

namespace pancyclic {

void for_each_graph(int n, const std::function<void(const Graph&, uint64_t)>& fn,
                    int shards, int shard) {
  if (n < 0 || n > 7)
    throw std::invalid_argument("for_each_graph: exhaustive mode covers n <= 7 only");
  if (shards < 1 || shard < 0 || shard >= shards)
    throw std::invalid_argument("for_each_graph: bad shard spec");
  int bits = n * (n - 1) / 2;
  uint64_t count = 1ull << bits;
  for (uint64_t mask = 0; mask < count; ++mask) {
    if ((int)(mask % (uint64_t)shards) != shard) continue;
    fn(Graph::from_edge_mask(n, mask), mask);
  }
}

Graph random_graph(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((double)(rng() >> 11) * 0x1p-53 < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Expected<ConditionInstance> random_condition_graph(int n, ConditionTarget target,
                                                   uint64_t seed, int attempts) {
  using E = Expected<ConditionInstance>;
  if (n < 1) return E::fail("random_condition_graph: need at least one vertex");
  for (int a = 0; a < attempts; ++a) {
    // sweep density upward as attempts burn; denser graphs shrink alpha
    double p = 0.45 + 0.5 * (double)a / std::max(1, attempts - 1);
    Graph g = random_graph(n, p, seed * 0x100000001b3ull + (uint64_t)a);
    ConditionProfile prof;
    try {
      prof = condition_profile(g);
    } catch (const BudgetError&) {
      continue;
    }
    bool ok = target == ConditionTarget::kappa_gt_alpha ? prof.kappa > prof.alpha
                                                        : prof.min_degree > prof.alpha;
    if (ok) return E::ok(ConditionInstance{std::move(g), prof});
  }
  return E::fail("random_condition_graph: rejection budget exhausted after " +
                 std::to_string(attempts) + " attempts at n=" + std::to_string(n));
}

}  // namespace pancyclic
