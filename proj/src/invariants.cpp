#include "pancyclic/invariants.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace pancyclic {

namespace {

// Max independent set by branch and bound. Bound: greedy partition of the
// candidate set into cliques, each contributing at most one vertex.
struct MisSolver {
  const Graph& g;
  long long budget;
  long long nodes = 0;
  VertexSet best;

  MisSolver(const Graph& g_, long long b) : g(g_), budget(b), best(g_.n()) {}

  int clique_cover_bound(const VertexSet& cand) const {
    int bound = 0;
    VertexSet left = cand;
    while (!left.empty()) {
      int v = left.first();
      left.remove(v);
      VertexSet clique = g.neighbors(v) & left;  // candidates joinable to v's clique
      while (!clique.empty()) {
        int u = clique.first();
        left.remove(u);
        clique &= g.neighbors(u);
        clique &= left;
      }
      ++bound;
    }
    return bound;
  }

  void expand(VertexSet chosen, int chosen_size, VertexSet cand) {
    if (++nodes > budget)
      throw BudgetError("independence search budget exhausted (graph too large for exact alpha)");
    if (cand.empty()) {
      if (chosen_size > best.count()) best = chosen;
      return;
    }
    if (chosen_size + clique_cover_bound(cand) <= best.count()) return;
    // branch on a max-degree candidate: include it or discard it
    int pick = cand.first(), dmax = -1;
    for (int v = cand.first(); v != -1; v = cand.next(v)) {
      int d = (g.neighbors(v) & cand).count();
      if (d > dmax) dmax = d, pick = v;
    }
    VertexSet with = chosen;
    with.add(pick);
    VertexSet cand_with = cand;
    cand_with.remove(pick);
    cand_with -= g.neighbors(pick);
    expand(with, chosen_size + 1, cand_with);
    cand.remove(pick);
    expand(chosen, chosen_size, cand);
  }
};

}  // namespace

VertexSet max_independent_set_in(const Graph& g, const VertexSet& within,
                                 long long node_budget) {
  MisSolver s(g, node_budget);
  s.expand(VertexSet(g.n()), 0, within);
  return s.best;
}

int independence_number(const Graph& g, long long node_budget) {
  return max_independent_set_in(g, VertexSet::full(g.n()), node_budget).count();
}

namespace {

// Unit-capacity Dinic on the vertex-split digraph. Node 2v = v_in, 2v+1 = v_out;
// source/sink are extra nodes appended at the end.
struct FlowNet {
  struct Arc {
    int to, cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;
  std::vector<int> level, it;
  int nn;

  explicit FlowNet(int nodes) : out(nodes), nn(nodes) {}

  int add(int u, int v, int cap) {
    out[u].push_back((int)arcs.size());
    arcs.push_back({v, cap});
    out[v].push_back((int)arcs.size());
    arcs.push_back({u, 0});
    return (int)arcs.size() - 2;
  }

  bool bfs(int s, int t) {
    level.assign(nn, -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int ai : out[u]) {
        const Arc& a = arcs[ai];
        if (a.cap > 0 && level[a.to] == -1) {
          level[a.to] = level[u] + 1;
          q.push(a.to);
        }
      }
    }
    return level[t] != -1;
  }

  int dfs(int u, int t, int f) {
    if (u == t) return f;
    for (int& i = it[u]; i < (int)out[u].size(); ++i) {
      int ai = out[u][i];
      Arc& a = arcs[ai];
      if (a.cap > 0 && level[a.to] == level[u] + 1) {
        int got = dfs(a.to, t, std::min(f, a.cap));
        if (got > 0) {
          a.cap -= got;
          arcs[ai ^ 1].cap += got;
          return got;
        }
      }
    }
    return 0;
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      it.assign(nn, 0);
      int f;
      while (flow < limit && (f = dfs(s, t, limit - flow)) > 0) flow += f;
    }
    return flow;
  }

  VertexSet reachable_from(int s) const {
    VertexSet r(nn);
    std::vector<int> stack{s};
    r.add(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int ai : out[u]) {
        const Arc& a = arcs[ai];
        if (a.cap > 0 && !r.contains(a.to)) {
          r.add(a.to);
          stack.push_back(a.to);
        }
      }
    }
    return r;
  }
};

// Min vertex cut between non-adjacent s,t (both kept out of the cut).
int st_vertex_connectivity(const Graph& g, int s, int t, int limit) {
  int n = g.n();
  FlowNet net(2 * n);
  for (int v = 0; v < n; ++v)
    if (v != s && v != t) net.add(2 * v, 2 * v + 1, 1);
  net.add(2 * s, 2 * s + 1, limit + 1);
  net.add(2 * t, 2 * t + 1, limit + 1);
  for (auto [u, v] : g.edges()) {
    net.add(2 * u + 1, 2 * v, limit + 1);
    net.add(2 * v + 1, 2 * u, limit + 1);
  }
  return net.max_flow(2 * s + 1, 2 * t, limit + 1);
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  int n = g.n();
  if (n <= 1) return 0;
  int src = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(src)) src = v;
  int best = n - 1;  // complete graph answer; also an upper bound
  VertexSet nonnb = VertexSet::full(n);
  nonnb.remove(src);
  nonnb -= g.neighbors(src);
  for (int t = nonnb.first(); t != -1; t = nonnb.next(t))
    best = std::min(best, st_vertex_connectivity(g, src, t, best));
  auto nb = g.neighbors(src).to_vector();
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (!g.has_edge(nb[i], nb[j]))
        best = std::min(best, st_vertex_connectivity(g, nb[i], nb[j], best));
  return best;
}

ConditionProfile condition_profile(const Graph& g, long long node_budget) {
  ConditionProfile p;
  p.alpha = independence_number(g, node_budget);
  p.kappa = vertex_connectivity(g);
  p.min_degree = g.min_degree();
  if (p.kappa > p.min_degree)
    throw std::logic_error("connectivity exceeded minimum degree");
  return p;
}

BfsLayers bfs_layers(const Graph& g, int source, const VertexSet& forbidden) {
  BfsLayers out;
  out.source = source;
  out.depth.assign(g.n(), -1);
  if (source < 0 || source >= g.n() || forbidden.contains(source)) return out;
  VertexSet frontier(g.n());
  frontier.add(source);
  out.depth[source] = 0;
  VertexSet seen = frontier;
  while (!frontier.empty()) {
    out.layers.push_back(frontier);
    VertexSet next(g.n());
    for (int u = frontier.first(); u != -1; u = frontier.next(u)) next |= g.neighbors(u);
    next -= seen;
    next -= forbidden;
    for (int v = next.first(); v != -1; v = next.next(v))
      out.depth[v] = (int)out.layers.size();
    seen |= next;
    frontier = next;
  }
  return out;
}

BfsLayers bfs_layers(const Graph& g, int source) {
  return bfs_layers(g, source, VertexSet(g.n()));
}

std::optional<std::pair<int, int>> find_edge_in(const Graph& g, const VertexSet& s) {
  for (int u = s.first(); u != -1; u = s.next(u)) {
    VertexSet row = g.neighbors(u) & s;
    int v = row.next(u);
    if (v != -1) return std::make_pair(u, v);
  }
  return std::nullopt;
}

DisjointPathsResult disjoint_paths(const Graph& g, const VertexSet& a,
                                   const VertexSet& b, int k,
                                   const VertexSet& forbidden) {
  int n = g.n();
  DisjointPathsResult res;
  if (k <= 0) return res;
  FlowNet net(2 * n + 2);
  int S = 2 * n, T = 2 * n + 1;
  int a_cap = a.count() == 1 ? k : 1;
  int b_cap = b.count() == 1 ? k : 1;
  for (int v = 0; v < n; ++v) {
    if (forbidden.contains(v)) continue;
    if (a.contains(v)) {
      net.add(S, 2 * v + 1, a_cap);      // paths may start here; no pass-through
    } else if (b.contains(v)) {
      net.add(2 * v, T, b_cap);
    } else {
      net.add(2 * v, 2 * v + 1, 1);
    }
  }
  for (auto [u, v] : g.edges()) {
    if (forbidden.contains(u) || forbidden.contains(v)) continue;
    if (a.contains(u) && a.contains(v)) continue;
    if (b.contains(u) && b.contains(v)) continue;
    if (!a.contains(v) && !(b.contains(u))) net.add(2 * u + 1, 2 * v, k);
    if (!a.contains(u) && !(b.contains(v))) net.add(2 * v + 1, 2 * u, k);
  }
  int flow = net.max_flow(S, T, k);

  // decompose: walk flow arcs from S, erasing loops as we go
  for (int p = 0; p < flow; ++p) {
    std::vector<int> path;
    int node = S;
    while (node != T) {
      int chosen = -1;
      for (int ai : net.out[node]) {
        if (ai & 1) continue;
        if (net.arcs[ai ^ 1].cap > 0) {  // forward arc with flow
          chosen = ai;
          break;
        }
      }
      if (chosen == -1) throw std::logic_error("flow decomposition stuck");
      net.arcs[chosen ^ 1].cap -= 1;
      net.arcs[chosen].cap += 1;
      node = net.arcs[chosen].to;
      if (node != T && node % 2 == 0) {
        int v = node / 2;
        auto it = std::find(path.begin(), path.end(), v);
        if (it != path.end()) path.erase(it + 1, path.end());  // loop erasure
        else path.push_back(v);
      } else if (node != T && node % 2 == 1) {
        int v = node / 2;
        if (path.empty() || path.back() != v) {
          auto it = std::find(path.begin(), path.end(), v);
          if (it != path.end()) path.erase(it + 1, path.end());
          else path.push_back(v);
        }
      }
    }
    res.paths.push_back(path);
  }

  if (flow < k) {
    VertexSet reach = net.reachable_from(S);
    VertexSet cut(n);
    for (int v = 0; v < n; ++v)
      if (!forbidden.contains(v) && !a.contains(v) && !b.contains(v) &&
          reach.contains(2 * v) && !reach.contains(2 * v + 1))
        cut.add(v);
    res.cut = cut;
  }
  return res;
}

std::vector<std::pair<int, int>> max_matching_in(const Graph& g, const VertexSet& within) {
  // classic blossom-shrinking augmenting search, O(V^3) on the restricted graph
  int n = g.n();
  std::vector<int> match(n, -1), parent(n), base(n);
  std::vector<char> used(n), blossom(n);

  auto adj = [&](int u) { return g.neighbors(u) & within; };

  auto lca = [&](int a, int b) {
    std::vector<char> mark(n, 0);
    while (true) {
      a = base[a];
      mark[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (mark[b]) return b;
      b = parent[match[b]];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = 1;
      blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };

  auto find_aug = [&](int root) -> int {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      VertexSet nb = adj(v);
      for (int to = nb.first(); to != -1; to = nb.next(to)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          q.push(match[to]);
        }
      }
    }
    return -1;
  };

  for (int v = within.first(); v != -1; v = within.next(v)) {
    if (match[v] != -1) continue;
    int u = find_aug(v);
    while (u != -1) {
      int pv = parent[u], ppv = match[pv];
      match[u] = pv;
      match[pv] = u;
      u = ppv;
    }
  }

  std::vector<std::pair<int, int>> out;
  for (int v = within.first(); v != -1; v = within.next(v))
    if (match[v] > v) out.emplace_back(v, match[v]);
  return out;
}

}  // namespace pancyclic
