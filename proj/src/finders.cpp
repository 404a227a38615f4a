#include "pancyclic/finders.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pancyclic {

namespace detail {

CycleSearchResult bounded_cycle_search(const Graph& g, int target_len,
                                       long long node_budget) {
  CycleSearchResult res;
  int n = g.n();
  if (target_len < 3 || target_len > n) {
    res.status = SearchStatus::exhausted;
    return res;
  }
  std::vector<VertexSet> adj;
  adj.reserve(n);
  for (int v = 0; v < n; ++v) adj.push_back(g.neighbors(v));
  auto edges = g.edges();
  std::stable_sort(edges.begin(), edges.end(),
                   [&](const std::pair<int, int>& e1, const std::pair<int, int>& e2) {
                     return g.degree(e1.first) + g.degree(e1.second) >
                            g.degree(e2.first) + g.degree(e2.second);
                   });

  std::vector<int> dist(n);
  std::vector<char> on_path(n, 0);
  std::vector<int> path;
  std::vector<int> queue;
  bool blown = false;

  for (auto [a, b] : edges) {
    adj[a].remove(b);
    adj[b].remove(a);
    std::fill(dist.begin(), dist.end(), n + 1);
    queue.clear();
    queue.push_back(a);
    dist[a] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      if (dist[x] >= target_len - 1) break;
      VertexSet nb = adj[x];
      for (int y = nb.first(); y != -1; y = nb.next(y)) {
        if (dist[y] <= n) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
    if (dist[b] > target_len - 1) continue;

    path.assign(1, b);
    on_path[b] = 1;
    auto go = [&](auto&& self, int cur, int left) -> bool {
      if (left == 1) {
        if (++res.nodes > node_budget) {
          blown = true;
          return false;
        }
        return adj[cur].contains(a);
      }
      VertexSet cand = adj[cur];
      for (int w = cand.first(); w != -1; w = cand.next(w)) {
        if (w == a || on_path[w]) continue;
        if (dist[w] > left - 1) continue;
        if (++res.nodes > node_budget) {
          blown = true;
          return false;
        }
        path.push_back(w);
        on_path[w] = 1;
        bool hit = self(self, w, left - 1);
        if (hit) return true;
        path.pop_back();
        on_path[w] = 0;
        if (blown) return false;
      }
      return false;
    };
    bool found = go(go, b, target_len - 1);
    for (int v : path) on_path[v] = 0;
    if (found) {
      std::vector<int> vs;
      vs.reserve(target_len);
      vs.push_back(a);
      for (int v : path) vs.push_back(v);
      res.cycle = OrientedCycle(vs);
      res.status = SearchStatus::found;
      return res;
    }
    if (blown) {
      res.status = SearchStatus::budget;
      return res;
    }
  }
  res.status = SearchStatus::exhausted;
  return res;
}

}  // namespace detail

namespace {

struct Work {
  long long left;
  bool spend(long long c = 1) {
    left -= c;
    return left >= 0;
  }
  bool dry() const { return left < 0; }
};

// candidate cycle: accepted only if distinct and every edge present
std::optional<OrientedCycle> mk(const Graph& g, const std::vector<int>& vs) {
  if (vs.size() < 3) return std::nullopt;
  VertexSet seen(g.n());
  for (int v : vs) {
    if (v < 0 || v >= g.n() || seen.contains(v)) return std::nullopt;
    seen.add(v);
  }
  for (size_t i = 0; i < vs.size(); ++i)
    if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()])) return std::nullopt;
  return OrientedCycle(vs);
}

struct Ladder {
  const Graph& g;
  int alpha;
  Work work{4'000'000};
  std::vector<std::optional<VertexSet>> icache;
  std::vector<char> ihave;

  Ladder(const Graph& gg, int a) : g(gg), alpha(a), icache(gg.n()), ihave(gg.n(), 0) {}

  // largest independent set in N(u); nullptr once the budget is gone
  const VertexSet* iset(int u) {
    if (!ihave[u]) {
      ihave[u] = 1;
      try {
        icache[u] = max_independent_set_in(g, g.neighbors(u),
                                           std::min(work.left, (long long)500'000));
      } catch (const BudgetError&) {
        icache[u] = std::nullopt;
      }
      work.spend(1000);
    }
    return icache[u] ? &*icache[u] : nullptr;
  }

  std::vector<std::array<int, 3>> triangles(int cap) {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < g.n() && (int)out.size() < cap; ++u) {
      VertexSet nu = g.neighbors(u);
      for (int v = nu.next(u); v != -1 && (int)out.size() < cap; v = nu.next(v)) {
        VertexSet both = nu & g.neighbors(v);
        for (int w = both.next(v); w != -1 && (int)out.size() < cap; w = both.next(w)) {
          if (!work.spend()) return out;
          out.push_back({u, v, w});
        }
      }
    }
    return out;
  }

  // lexicographic least path on `order` vertices inside `within`
  std::optional<std::vector<int>> path_in(const VertexSet& within, int order) {
    std::vector<int> verts = within.to_vector();
    std::vector<int> path;
    std::vector<char> used(g.n(), 0);
    auto go = [&](auto&& self, int cur) -> bool {
      if ((int)path.size() == order) return true;
      VertexSet nb = g.neighbors(cur) & within;
      for (int w = nb.first(); w != -1; w = nb.next(w)) {
        if (used[w]) continue;
        if (!work.spend()) return false;
        path.push_back(w);
        used[w] = 1;
        if (self(self, w)) return true;
        path.pop_back();
        used[w] = 0;
      }
      return false;
    };
    for (int s : verts) {
      if (work.dry()) return std::nullopt;
      path.assign(1, s);
      std::fill(used.begin(), used.end(), 0);
      used[s] = 1;
      if (go(go, s)) return path;
    }
    return std::nullopt;
  }

  std::vector<std::pair<int, int>> neighborhood_matching(int u) {
    auto m = max_matching_in(g, g.neighbors(u));
    for (auto& e : m)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(m.begin(), m.end());
    work.spend(100);
    return m;
  }
};

std::optional<OrientedCycle> ladder3(Ladder& L) {
  for (int u = 0; u < L.g.n(); ++u) {
    if (!L.work.spend()) return std::nullopt;
    if (auto e = find_edge_in(L.g, L.g.neighbors(u)))
      if (auto c = mk(L.g, {u, e->first, e->second})) return c;
  }
  return std::nullopt;
}

std::optional<OrientedCycle> ladder4(Ladder& L) {
  const Graph& g = L.g;
  // path on 3 vertices inside a neighborhood
  for (int u = 0; u < g.n(); ++u) {
    VertexSet nu = g.neighbors(u);
    for (int v2 = nu.first(); v2 != -1; v2 = nu.next(v2)) {
      if (!L.work.spend()) break;
      VertexSet nn = g.neighbors(v2) & nu;
      int v1 = nn.first();
      if (v1 == -1) continue;
      int v3 = nn.next(v1);
      if (v3 == -1) continue;
      if (auto c = mk(g, {u, v1, v2, v3})) return c;
    }
  }
  // triangle cases
  for (auto [u, v, w] : L.triangles(200)) {
    int tri[3] = {u, v, w};
    for (int pi = 0; pi < 3; ++pi)
      for (int qi = 0; qi < 3; ++qi) {
        if (pi == qi) continue;
        int p = tri[pi], q = tri[qi], t = tri[3 - pi - qi];
        const VertexSet* ip = L.iset(p);
        const VertexSet* iq = L.iset(q);
        if (!ip || !iq) continue;
        VertexSet inter = *ip & *iq;
        for (int x = inter.first(); x != -1; x = inter.next(x)) {
          if (x == t) continue;
          if (!L.work.spend()) break;
          if (auto c = mk(g, {p, x, q, t})) return c;
        }
        for (int x = ip->first(); x != -1; x = ip->next(x)) {
          if (!L.work.spend()) break;
          VertexSet hits = g.neighbors(x) & *iq;
          for (int y = hits.first(); y != -1; y = hits.next(y))
            if (auto c = mk(g, {p, x, y, q})) return c;
        }
      }
    if (L.work.dry()) break;
  }
  return std::nullopt;
}

std::optional<OrientedCycle> ladder5(Ladder& L) {
  const Graph& g = L.g;
  for (int u = 0; u < g.n(); ++u) {
    if (L.work.dry()) break;
    if (auto p = L.path_in(g.neighbors(u), 4))
      if (auto c = mk(g, {u, (*p)[0], (*p)[1], (*p)[2], (*p)[3]})) return c;
  }
  // matching of 4 in a neighborhood
  for (int u = 0; u < g.n(); ++u) {
    if (L.work.dry()) break;
    auto m = L.neighborhood_matching(u);
    if ((int)m.size() < 4) continue;
    m.resize(4);
    VertexSet matched(g.n());
    for (auto [a, b] : m) matched.add(a), matched.add(b);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        for (int oi = 0; oi < 2; ++oi)
          for (int oj = 0; oj < 2; ++oj) {
            int vi = oi ? m[i].second : m[i].first;
            int vj = oj ? m[j].second : m[j].first;
            int wj = oj ? m[j].first : m[j].second;
            const VertexSet* ii = L.iset(vi);
            const VertexSet* ij = L.iset(vj);
            if (!ii || !ij) continue;
            VertexSet inter = *ii & *ij;
            for (int x = inter.first(); x != -1; x = inter.next(x)) {
              if (matched.contains(x) || x == u) continue;
              if (!L.work.spend()) break;
              if (auto c = mk(g, {u, vi, x, vj, wj})) return c;
            }
            for (int x = ii->first(); x != -1; x = ii->next(x)) {
              if (matched.contains(x) || x == u) continue;
              if (!L.work.spend()) break;
              VertexSet hits = g.neighbors(x) & *ij;
              for (int y = hits.first(); y != -1; y = hits.next(y)) {
                if (matched.contains(y) || y == u) continue;
                if (auto c = mk(g, {u, vi, x, y, vj})) return c;
              }
            }
          }
      }
  }
  // triangle cases
  for (auto tri : L.triangles(200)) {
    VertexSet t3 = VertexSet::of(g.n(), {tri[0], tri[1], tri[2]});
    for (int ai = 0; ai < 3; ++ai)
      for (int bi = 0; bi < 3; ++bi) {
        if (ai == bi) continue;
        int a = tri[ai], b = tri[bi], k = tri[3 - ai - bi];
        const VertexSet* ia = L.iset(a);
        const VertexSet* ib = L.iset(b);
        if (!ia || !ib) continue;
        for (int x = ia->first(); x != -1; x = ia->next(x)) {
          if (t3.contains(x)) continue;
          if (!L.work.spend()) break;
          VertexSet hits = g.neighbors(x) & *ib;
          for (int y = hits.first(); y != -1; y = hits.next(y)) {
            if (t3.contains(y)) continue;
            if (auto c = mk(g, {a, x, y, b, k})) return c;
          }
        }
      }
    // x between first two, y between middle and third, per middle choice
    for (int mi = 0; mi < 3; ++mi) {
      int m0 = tri[mi], a = tri[(mi + 1) % 3], b = tri[(mi + 2) % 3];
      const VertexSet* im = L.iset(m0);
      const VertexSet* ia = L.iset(a);
      const VertexSet* ib = L.iset(b);
      if (!im || !ia || !ib) continue;
      VertexSet xs = *ia & *im, ys = *im & *ib;
      for (int x = xs.first(); x != -1; x = xs.next(x)) {
        if (t3.contains(x)) continue;
        if (!L.work.spend()) break;
        for (int y = ys.first(); y != -1; y = ys.next(y)) {
          if (t3.contains(y) || y == x) continue;
          if (auto c = mk(g, {a, x, m0, y, b})) return c;
        }
      }
    }
    if (L.work.dry()) break;
  }
  return std::nullopt;
}

std::optional<OrientedCycle> ladder6(Ladder& L) {
  const Graph& g = L.g;
  for (int u = 0; u < g.n(); ++u) {
    if (L.work.dry()) break;
    if (auto p = L.path_in(g.neighbors(u), 5))
      if (auto c = mk(g, {u, (*p)[0], (*p)[1], (*p)[2], (*p)[3], (*p)[4]})) return c;
  }
  for (int u = 0; u < g.n(); ++u) {
    if (L.work.dry()) break;
    auto m = L.neighborhood_matching(u);
    if ((int)m.size() < 5) continue;
    m.resize(5);
    VertexSet matched(g.n());
    for (auto [a, b] : m) matched.add(a), matched.add(b);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        if (i == j) continue;
        for (int oi = 0; oi < 2; ++oi)
          for (int oj = 0; oj < 2; ++oj) {
            int vi = oi ? m[i].second : m[i].first;
            int wi = oi ? m[i].first : m[i].second;
            int vj = oj ? m[j].second : m[j].first;
            int wj = oj ? m[j].first : m[j].second;
            const VertexSet* ii = L.iset(vi);
            const VertexSet* ij = L.iset(vj);
            if (!ii || !ij) continue;
            VertexSet inter = *ii & *ij;
            for (int x = inter.first(); x != -1; x = inter.next(x)) {
              if (matched.contains(x) || x == u) continue;
              if (!L.work.spend()) break;
              if (auto c = mk(g, {u, wi, vi, x, vj, wj})) return c;
            }
            for (int x = ii->first(); x != -1; x = ii->next(x)) {
              if (matched.contains(x) || x == u) continue;
              if (!L.work.spend()) break;
              VertexSet hits = g.neighbors(x) & *ij;
              for (int y = hits.first(); y != -1; y = hits.next(y)) {
                if (matched.contains(y)) continue;
                if (auto c = mk(g, {u, vi, x, y, vj, wj})) return c;
              }
            }
          }
      }
  }
  for (auto tri : L.triangles(200)) {
    VertexSet t3 = VertexSet::of(g.n(), {tri[0], tri[1], tri[2]});
    const VertexSet* i0 = L.iset(tri[0]);
    const VertexSet* i1 = L.iset(tri[1]);
    const VertexSet* i2 = L.iset(tri[2]);
    if (i0 && i1 && i2) {
      VertexSet xs = *i0 & *i1, ys = *i1 & *i2, zs = *i2 & *i0;
      for (int x = xs.first(); x != -1; x = xs.next(x)) {
        if (t3.contains(x)) continue;
        if (!L.work.spend()) break;
        for (int y = ys.first(); y != -1; y = ys.next(y)) {
          if (t3.contains(y) || y == x) continue;
          for (int z = zs.first(); z != -1; z = zs.next(z)) {
            if (t3.contains(z) || z == x || z == y) continue;
            if (auto c = mk(g, {tri[0], x, tri[1], y, tri[2], z})) return c;
          }
        }
      }
    }
    // cross matching of two edges between two of the independent sets
    for (int ai = 0; ai < 3; ++ai)
      for (int bi = ai + 1; bi < 3; ++bi) {
        int a = tri[ai], b = tri[bi];
        const VertexSet* ia = L.iset(a);
        const VertexSet* ib = L.iset(b);
        if (!ia || !ib) continue;
        for (int x1 = ia->first(); x1 != -1; x1 = ia->next(x1)) {
          if (t3.contains(x1)) continue;
          if (!L.work.spend()) break;
          VertexSet h1 = g.neighbors(x1) & *ib;
          for (int y1 = h1.first(); y1 != -1; y1 = h1.next(y1)) {
            if (t3.contains(y1)) continue;
            for (int x2 = ia->first(); x2 != -1; x2 = ia->next(x2)) {
              if (x2 == x1 || x2 == y1 || t3.contains(x2)) continue;
              VertexSet h2 = g.neighbors(x2) & *ib;
              for (int y2 = h2.first(); y2 != -1; y2 = h2.next(y2)) {
                if (y2 == x1 || y2 == y1 || t3.contains(y2)) continue;
                if (auto c = mk(g, {a, x1, y1, b, y2, x2})) return c;
              }
            }
          }
        }
      }
    if (L.work.dry()) break;
  }
  return std::nullopt;
}

std::optional<OrientedCycle> ladder7(Ladder& L) {
  const Graph& g = L.g;
  for (int u = 0; u < g.n(); ++u) {
    if (L.work.dry()) break;
    if (auto p = L.path_in(g.neighbors(u), 6))
      if (auto c = mk(g, {u, (*p)[0], (*p)[1], (*p)[2], (*p)[3], (*p)[4], (*p)[5]}))
        return c;
  }
  for (int u = 0; u < g.n(); ++u) {
    if (L.work.dry()) break;
    auto m = L.neighborhood_matching(u);
    if ((int)m.size() < 6) continue;
    m.resize(6);
    VertexSet matched(g.n());
    for (auto [a, b] : m) matched.add(a), matched.add(b);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        if (i == j) continue;
        for (int oi = 0; oi < 2; ++oi)
          for (int oj = 0; oj < 2; ++oj) {
            int vi = oi ? m[i].second : m[i].first;
            int wi = oi ? m[i].first : m[i].second;
            int vj = oj ? m[j].second : m[j].first;
            int wj = oj ? m[j].first : m[j].second;
            const VertexSet* ii = L.iset(vi);
            const VertexSet* ij = L.iset(vj);
            if (!ii || !ij) continue;
            for (int x = ii->first(); x != -1; x = ii->next(x)) {
              if (matched.contains(x) || x == u) continue;
              if (!L.work.spend()) break;
              VertexSet hits = g.neighbors(x) & *ij;
              for (int y = hits.first(); y != -1; y = hits.next(y)) {
                if (matched.contains(y) || y == u) continue;
                if (auto c = mk(g, {u, wi, vi, x, y, vj, wj})) return c;
              }
            }
            // shared independent vertices of the two matched ends
            VertexSet inter = *ii & *ij;
            std::vector<int> xs;
            for (int x = inter.first(); x != -1 && (int)xs.size() < 6;
                 x = inter.next(x)) {
              if (x == vi || x == vj || x == wj || x == u) continue;
              xs.push_back(x);
            }
            for (size_t s = 0; s < xs.size(); ++s)
              for (size_t t = 0; t < xs.size(); ++t) {
                if (s == t) continue;
                const VertexSet* is = L.iset(xs[s]);
                const VertexSet* it = L.iset(xs[t]);
                if (!is || !it) continue;
                VertexSet yy = *is & *it;
                for (int y = yy.first(); y != -1; y = yy.next(y)) {
                  if (y == vi || y == vj || y == wj || y == u) continue;
                  if (!L.work.spend()) break;
                  if (auto c = mk(g, {u, vi, xs[s], y, xs[t], vj, wj})) return c;
                }
                for (int y = is->first(); y != -1; y = is->next(y)) {
                  if (y == vi || y == vj || y == wj || y == u) continue;
                  if (!L.work.spend()) break;
                  VertexSet zz = g.neighbors(y) & *it;
                  for (int z = zz.first(); z != -1; z = zz.next(z)) {
                    if (z == vi || z == vj || z == wj || z == u) continue;
                    if (auto c = mk(g, {u, vi, xs[s], y, z, xs[t], vj})) return c;
                  }
                }
              }
          }
      }
  }
  // triangle and connector-path patchwork
  for (auto tri : L.triangles(60)) {
    VertexSet t3 = VertexSet::of(g.n(), {tri[0], tri[1], tri[2]});
    // two length-3 connectors sharing the middle triangle vertex
    for (int bi = 0; bi < 3; ++bi) {
      int b = tri[bi], a = tri[(bi + 1) % 3], c = tri[(bi + 2) % 3];
      VertexSet na = g.neighbors(a) - t3, nb = g.neighbors(b) - t3,
                nc = g.neighbors(c) - t3;
      for (int x1 = na.first(); x1 != -1; x1 = na.next(x1)) {
        if (!L.work.spend()) break;
        VertexSet x2s = g.neighbors(x1) & nb;
        for (int x2 = x2s.first(); x2 != -1; x2 = x2s.next(x2)) {
          if (x2 == x1) continue;
          for (int y1 = nb.first(); y1 != -1; y1 = nb.next(y1)) {
            if (y1 == x1 || y1 == x2) continue;
            VertexSet y2s = g.neighbors(y1) & nc;
            for (int y2 = y2s.first(); y2 != -1; y2 = y2s.next(y2)) {
              if (y2 == x1 || y2 == x2 || y2 == y1) continue;
              if (auto cc = mk(g, {a, x1, x2, b, y1, y2, c})) return cc;
            }
          }
        }
      }
    }
    // one length-3 plus two length-2 connectors
    for (int p0 = 0; p0 < 3 && !L.work.dry(); ++p0)
      for (int d = 1; d <= 2; ++d) {
        int a = tri[p0], b = tri[(p0 + d) % 3], c = tri[(p0 + 2 * d) % 3];
        VertexSet na = g.neighbors(a) - t3, nb = g.neighbors(b) - t3;
        for (int x1 = na.first(); x1 != -1; x1 = na.next(x1)) {
          if (!L.work.spend()) break;
          VertexSet x2s = g.neighbors(x1) & nb;
          for (int x2 = x2s.first(); x2 != -1; x2 = x2s.next(x2)) {
            VertexSet ys = (g.neighbors(b) & g.neighbors(c)) - t3;
            for (int y = ys.first(); y != -1; y = ys.next(y)) {
              if (y == x1 || y == x2) continue;
              VertexSet zs = (g.neighbors(c) & g.neighbors(a)) - t3;
              for (int z = zs.first(); z != -1; z = zs.next(z)) {
                if (z == x1 || z == x2 || z == y) continue;
                if (auto cc = mk(g, {a, x1, x2, b, y, c, z})) return cc;
              }
            }
          }
        }
      }
    // three length-2 connectors, then reroute one of them
    {
      int v1 = tri[0], v2 = tri[1], v3 = tri[2];
      VertexSet u1s = (g.neighbors(v1) & g.neighbors(v2)) - t3;
      for (int u1 = u1s.first(); u1 != -1 && !L.work.dry(); u1 = u1s.next(u1)) {
        VertexSet u2s = (g.neighbors(v2) & g.neighbors(v3)) - t3;
        for (int u2 = u2s.first(); u2 != -1; u2 = u2s.next(u2)) {
          if (u2 == u1) continue;
          VertexSet u3s = (g.neighbors(v3) & g.neighbors(v1)) - t3;
          for (int u3 = u3s.first(); u3 != -1; u3 = u3s.next(u3)) {
            if (u3 == u1 || u3 == u2) continue;
            if (!L.work.spend()) break;
            int hex[2][6] = {{v1, u1, v2, u2, v3, u3}, {v1, u3, v3, u2, v2, u1}};
            for (auto& seq : hex)
              for (int r = 0; r < 3; ++r) {
                int p = seq[2 * r], q = seq[(2 * r + 1) % 6];
                int r2 = seq[(2 * r + 2) % 6], r3 = seq[(2 * r + 3) % 6];
                int r4 = seq[(2 * r + 4) % 6], r5 = seq[(2 * r + 5) % 6];
                VertexSet six = VertexSet::of(g.n(), {p, q, r2, r3, r4, r5});
                VertexSet ws = (g.neighbors(p) & g.neighbors(q)) - six;
                int w = ws.first();
                if (w != -1)
                  if (auto cc = mk(g, {p, w, q, r2, r3, r4, r5})) return cc;
                VertexSet w1s = g.neighbors(p) - six;
                for (int w1 = w1s.first(); w1 != -1; w1 = w1s.next(w1)) {
                  VertexSet w2s = (g.neighbors(w1) & g.neighbors(q)) - six;
                  for (int w2 = w2s.first(); w2 != -1; w2 = w2s.next(w2)) {
                    if (w2 == w1) continue;
                    if (auto cc = mk(g, {p, w1, w2, q, r2, r3, r4})) return cc;
                  }
                }
              }
          }
        }
      }
    }
    if (L.work.dry()) break;
  }
  return std::nullopt;
}

}  // namespace

Expected<ShortCycle> find_short_cycle(const Graph& g, int ell,
                                      const ConditionProfile& profile) {
  using E = Expected<ShortCycle>;
  if (ell < 3 || ell > 7)
    return E::fail("find_short_cycle: ell must be in 3..7, got " + std::to_string(ell));
  if (profile.min_degree <= profile.alpha)
    return E::fail("find_short_cycle: requires min_degree > alpha (delta=" +
                   std::to_string(profile.min_degree) +
                   ", alpha=" + std::to_string(profile.alpha) + ")");
  Ladder lad(g, profile.alpha);
  std::optional<OrientedCycle> hit;
  switch (ell) {
    case 3: hit = ladder3(lad); break;
    case 4: hit = ladder4(lad); break;
    case 5: hit = ladder5(lad); break;
    case 6: hit = ladder6(lad); break;
    case 7: hit = ladder7(lad); break;
  }
  if (hit) {
    if (auto bad = validate_cycle(g, *hit))
      return E::fail("find_short_cycle: internal: " + bad->what);
    if (hit->length() != ell) return E::fail("find_short_cycle: internal length bug");
    return E::ok(ShortCycle{*hit, false});
  }
  auto fb = detail::bounded_cycle_search(g, ell, 5'000'000);
  if (fb.status == detail::SearchStatus::found)
    return E::ok(ShortCycle{*fb.cycle, true});
  if (fb.status == detail::SearchStatus::exhausted)
    return E::fail("find_short_cycle: no cycle of length " + std::to_string(ell) +
                   " exists (exhaustive anchored search, " + std::to_string(fb.nodes) +
                   " expansions)");
  return E::fail("find_short_cycle: search budget exhausted for length " +
                 std::to_string(ell));
}

Expected<ShortCycle> find_short_cycle(const Graph& g, int ell) {
  return find_short_cycle(g, ell, condition_profile(g));
}

namespace {

struct Tuple {
  std::array<int, 5> v{};
  int len = 0;
};

bool tuple_ok(const Graph& g, const Tuple& t) {
  for (int i = 0; i < t.len; ++i)
    for (int j = i + 1; j < t.len; ++j)
      if (t.v[i] == t.v[j]) return false;
  for (int i = 0; i < t.len; ++i)
    if (!g.has_edge(t.v[i], t.v[(i + 1) % t.len])) return false;
  return true;
}

}  // namespace

Expected<OddAnchorSubgraph> odd_anchor_subgraph(const Graph& g, std::uint64_t seed,
                                                const ConditionProfile& profile) {
  using E = Expected<OddAnchorSubgraph>;
  if (profile.min_degree <= profile.alpha)
    return E::fail("odd_anchor_subgraph: requires min_degree > alpha");
  int n = g.n();
  int alpha = profile.alpha;

  std::vector<std::vector<std::pair<int, int>>> mu(n);
  std::vector<VertexSet> iu(n, VertexSet(n));
  std::vector<char> in_u1(n, 0);
  for (int u = 0; u < n; ++u) {
    mu[u] = max_matching_in(g, g.neighbors(u));
    VertexSet rest = g.neighbors(u);
    for (auto [a, b] : mu[u]) rest.remove(a), rest.remove(b);
    iu[u] = rest;
    in_u1[u] = 12 * (int)mu[u].size() >= alpha;
  }

  // u in U2: least triangle (u, v, w) with v outside U1
  std::vector<std::array<int, 2>> u2pick(n, {-1, -1});
  for (int u = 0; u < n; ++u) {
    if (in_u1[u]) continue;
    VertexSet nu = g.neighbors(u);
    for (int v = nu.first(); v != -1 && u2pick[u][0] == -1; v = nu.next(v)) {
      if (in_u1[v]) continue;
      VertexSet ws = nu & g.neighbors(v);
      for (int w = ws.first(); w != -1; w = ws.next(w)) {
        if (w == u || w == v) continue;
        u2pick[u] = {v, w};
        break;
      }
    }
  }
  // u in U3: least (w, v, x) with triangle (v, w, x), v outside U1, uw an edge
  std::vector<std::array<int, 3>> u3pick(n, {-1, -1, -1});
  for (int u = 0; u < n; ++u) {
    if (in_u1[u] || u2pick[u][0] != -1) continue;
    VertexSet nu = g.neighbors(u);
    for (int w = nu.first(); w != -1 && u3pick[u][0] == -1; w = nu.next(w)) {
      VertexSet vs = g.neighbors(w);
      for (int v = vs.first(); v != -1 && u3pick[u][0] == -1; v = vs.next(v)) {
        if (in_u1[v] || v == u) continue;
        VertexSet xs = g.neighbors(v) & g.neighbors(w);
        for (int x = xs.first(); x != -1; x = xs.next(x)) {
          if (x == u) continue;
          u3pick[u] = {v, w, x};
          break;
        }
      }
    }
  }

  std::vector<Tuple> fam;
  std::set<std::pair<int, int>> seen;
  auto add = [&](Tuple t) {
    if (!tuple_ok(g, t)) return;
    if (!seen.insert({t.v[0], t.v[1]}).second) return;
    fam.push_back(t);
  };

  for (int u = 0; u < n; ++u) {
    if (in_u1[u]) {
      for (auto [x, y] : mu[u]) {
        add(Tuple{{u, x, y}, 3});
        add(Tuple{{u, y, x}, 3});
      }
    } else if (u2pick[u][0] != -1) {
      int v = u2pick[u][0], w = u2pick[u][1];
      VertexSet inter = iu[u] & iu[v];
      if (12 * inter.count() >= alpha) {
        for (int x = inter.first(); x != -1; x = inter.next(x))
          add(Tuple{{u, x, v}, 3});
      } else {
        auto m = max_matching_in(g, iu[u] | iu[v]);
        for (auto [x, y] : m) {
          if (!iu[u].contains(x)) std::swap(x, y);
          if (!iu[u].contains(x) || !iu[v].contains(y)) continue;
          add(Tuple{{u, x, y, v, w}, 5});
        }
      }
    } else if (u3pick[u][0] != -1) {
      int v = u3pick[u][0], w = u3pick[u][1], x0 = u3pick[u][2];
      VertexSet inter = iu[u] & iu[v];
      if (12 * inter.count() >= alpha) {
        for (int y = inter.first(); y != -1; y = inter.next(y))
          add(Tuple{{u, y, v, x0, w}, 5});
      } else {
        auto m = max_matching_in(g, iu[u] | iu[v]);
        for (auto [y, z] : m) {
          if (!iu[u].contains(y)) std::swap(y, z);
          if (!iu[u].contains(y) || !iu[v].contains(z)) continue;
          add(Tuple{{u, y, z, v, w}, 5});
        }
      }
    }
  }

  if (fam.empty())
    return E::fail(
        "odd_anchor_subgraph: empty anchor family (no usable triangles or "
        "neighborhood matchings at this scale)");

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    VertexSet x(n);
    for (int v = 0; v < n; ++v)
      if (rng() & 1) x.add(v);
    std::vector<int> surviving;
    for (int ti = 0; ti < (int)fam.size(); ++ti) {
      const Tuple& t = fam[ti];
      if (!x.contains(t.v[0]) || !x.contains(t.v[1])) continue;
      bool rest_out = true;
      for (int i = 2; i < t.len; ++i) rest_out &= !x.contains(t.v[i]);
      if (rest_out) surviving.push_back(ti);
    }
    if (surviving.empty() || 32 * (long long)surviving.size() < (long long)fam.size())
      continue;

    OddAnchorSubgraph out;
    out.host_vertices = x;
    std::set<std::pair<int, int>> have;
    std::vector<std::pair<int, int>> host_edges;
    for (int ti : surviving) {
      const Tuple& t = fam[ti];
      int a = std::min(t.v[0], t.v[1]), b = std::max(t.v[0], t.v[1]);
      if (!have.insert({a, b}).second) continue;
      std::vector<int> cyc(t.v.begin(), t.v.begin() + t.len);
      OrientedCycle anchor(cyc);
      if (auto bad = validate_cycle(g, anchor))
        return E::fail("odd_anchor_subgraph: internal anchor bug: " + bad->what);
      VertexSet meet = anchor.vertex_set(n) & x;
      if (meet != VertexSet::of(n, {t.v[0], t.v[1]}))
        return E::fail("odd_anchor_subgraph: internal: anchor meets X beyond its edge");
      out.edges.push_back(AnchoredEdge{t.v[0], t.v[1], anchor});
      host_edges.emplace_back(a, b);
    }
    out.host = Graph::from_edges(n, host_edges);
    return E::ok(std::move(out));
  }
  return E::fail("odd_anchor_subgraph: sampling retries exhausted (64 draws below the "
                 "|F|/32 pair threshold)");
}

Expected<OddAnchorSubgraph> odd_anchor_subgraph(const Graph& g, std::uint64_t seed) {
  return odd_anchor_subgraph(g, seed, condition_profile(g));
}

long long ramsey_bound_erdos(int ell, int s) {
  if (ell < 3) throw std::invalid_argument("ramsey_bound_erdos: ell must be >= 3");
  if (s < 2) throw std::invalid_argument("ramsey_bound_erdos: s must be >= 2");
  int x = (ell - 1) / 2;
  double val = ((ell - 2) * (std::pow((double)s, 1.0 / x) + 2) + 1) * (double)(s - 1);
  return (long long)std::ceil(val - 1e-9);
}

RamseyBound ramsey_bound_keevash(int ell, int s) {
  if (ell < 3) throw std::invalid_argument("ramsey_bound_keevash: ell must be >= 3");
  if (s < 2) throw std::invalid_argument("ramsey_bound_keevash: s must be >= 2");
  RamseyBound rb;
  rb.bound = (long long)(ell - 1) * (s - 1) + 1;
  rb.in_regime = s >= 3 && (double)ell >= std::log((double)s) / std::log(std::log((double)s)) - 1e-9;
  return rb;
}

Expected<CycleOrIndep> find_cycle_or_independent_set(const Graph& g, int ell, int s,
                                                     long long node_budget) {
  using E = Expected<CycleOrIndep>;
  if (ell < 3) return E::fail("find_cycle_or_independent_set: ell must be >= 3");
  if (s < 1) return E::fail("find_cycle_or_independent_set: s must be >= 1");
  auto cs = detail::bounded_cycle_search(g, ell, node_budget);
  if (cs.status == detail::SearchStatus::found)
    return E::ok(CycleOrIndep{*cs.cycle, std::nullopt});
  try {
    VertexSet mis = max_independent_set_in(g, VertexSet::full(g.n()), node_budget);
    if (mis.count() >= s) {
      VertexSet trimmed(g.n());
      int take = 0;
      for (int v = mis.first(); v != -1 && take < s; v = mis.next(v), ++take)
        trimmed.add(v);
      return E::ok(CycleOrIndep{std::nullopt, trimmed});
    }
    if (cs.status == detail::SearchStatus::exhausted)
      return E::ok(CycleOrIndep{std::nullopt, std::nullopt});  // honest neither
    return E::fail("find_cycle_or_independent_set: cycle search budget exhausted and "
                   "no independent set of size " + std::to_string(s));
  } catch (const BudgetError&) {
    return E::fail("find_cycle_or_independent_set: independence search budget exhausted");
  }
}

long long even_cycle_threshold(int ell, long long n) {
  if (ell < 1) throw std::invalid_argument("even_cycle_threshold: ell must be >= 1");
  if (n < 0) throw std::invalid_argument("even_cycle_threshold: n must be >= 0");
  double a = 20.0 * ell * std::pow((double)n, 1.0 + 1.0 / ell);
  double b = 200.0 * (double)n * ell;
  return (long long)std::ceil(std::max(a, b) - 1e-9);
}

Expected<OrientedCycle> find_even_cycle(const Graph& g, int two_ell,
                                        long long node_budget) {
  using E = Expected<OrientedCycle>;
  if (two_ell < 4 || two_ell % 2 != 0)
    return E::fail("find_even_cycle: length must be even and >= 4");
  auto cs = detail::bounded_cycle_search(g, two_ell, node_budget);
  if (cs.status == detail::SearchStatus::found) return E::ok(*cs.cycle);
  if (cs.status == detail::SearchStatus::exhausted)
    return E::fail("find_even_cycle: no cycle of length " + std::to_string(two_ell) +
                   " exists (exhaustive anchored search)");
  return E::fail("find_even_cycle: search budget exhausted");
}

}  // namespace pancyclic
