#include "pancyclic/oracle.hpp"

#include <algorithm>
#include <deque>
#include <vector>

namespace pancyclic {

namespace {

struct BruteSearch {
  const Graph& g;
  int ell;
  long long budget;
  long long nodes = 0;
  bool over = false;
  int anchor = 0;
  std::vector<int> dist;
  std::vector<char> used;
  std::vector<int> path;
  std::optional<std::vector<int>> out;

  // distance to the anchor inside {anchor, anchor+1, ...}
  void measure() {
    int n = g.n();
    dist.assign(n, -1);
    std::deque<int> q{anchor};
    dist[anchor] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      const VertexSet& nb = g.neighbors(v);
      for (int w = nb.first(); w != -1; w = nb.next(w))
        if (w >= anchor && dist[w] == -1) {
          dist[w] = dist[v] + 1;
          q.push_back(w);
        }
    }
  }

  void dfs() {
    if (out || over) return;
    if (++nodes > budget) {
      over = true;
      return;
    }
    int depth = (int)path.size();
    int v = path.back();
    if (depth == ell) {
      if (g.has_edge(v, anchor)) out = path;
      return;
    }
    const VertexSet& nb = g.neighbors(v);
    for (int w = nb.first(); w != -1; w = nb.next(w)) {
      if (w <= anchor || used[w]) continue;
      if (dist[w] == -1 || dist[w] > ell - depth) continue;
      used[w] = 1;
      path.push_back(w);
      dfs();
      path.pop_back();
      used[w] = 0;
      if (out || over) return;
    }
  }
};

}  // namespace

OracleResult brute_find_cycle(const Graph& g, int ell, long long budget) {
  OracleResult res;
  if (ell < 3 || ell > g.n()) {
    res.answer = OracleAnswer::none;
    return res;
  }
  BruteSearch s{g, ell, budget, 0, false, 0, {}, {}, {}, {}};
  s.used.assign(g.n(), 0);
  for (int a = 0; a + ell <= g.n() && !s.out; ++a) {
    s.anchor = a;
    s.measure();
    s.path = {a};
    std::fill(s.used.begin(), s.used.end(), 0);
    s.used[a] = 1;
    s.dfs();
    if (s.over) break;
  }
  res.nodes = s.nodes;
  if (s.out) {
    res.answer = OracleAnswer::found;
    res.cycle = OrientedCycle(*s.out);
  } else {
    res.answer = s.over ? OracleAnswer::unknown : OracleAnswer::none;
  }
  return res;
}

bool PancyclicReport::all_found() const {
  for (const auto& [ell, a] : per_length)
    if (a != OracleAnswer::found) return false;
  return true;
}

bool PancyclicReport::any_unknown() const {
  for (const auto& [ell, a] : per_length)
    if (a == OracleAnswer::unknown) return true;
  return false;
}

PancyclicReport is_pancyclic_brute(const Graph& g, long long budget_per_length) {
  PancyclicReport rep;
  for (int ell = 3; ell <= g.n(); ++ell)
    rep.per_length[ell] = brute_find_cycle(g, ell, budget_per_length).answer;
  return rep;
}

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long long count_cycles_trace(const Graph& g, int ell) {
  int n = g.n();
  if (ell < 3 || ell > n) return 0;
  long long total = 0;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    int t = __builtin_popcount(mask);
    if (t > ell || t < 1) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) verts.push_back(v);
    // trace of the t-th .. ell-th powers, keeping only the ell-th
    std::vector<long long> a(t * t, 0), p(t * t, 0), tmp(t * t);
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        a[i * t + j] = p[i * t + j] = g.has_edge(verts[i], verts[j]) ? 1 : 0;
    for (int step = 2; step <= ell; ++step) {
      std::fill(tmp.begin(), tmp.end(), 0);
      for (int i = 0; i < t; ++i)
        for (int k = 0; k < t; ++k) {
          long long x = p[i * t + k];
          if (!x) continue;
          for (int j = 0; j < t; ++j) tmp[i * t + j] += x * a[k * t + j];
        }
      p.swap(tmp);
    }
    long long tr = 0;
    for (int i = 0; i < t; ++i) tr += p[i * t + i];
    if (!tr) continue;
    long long term = binomial(n - t, ell - t) * tr;
    total += ((ell - t) % 2 == 0) ? term : -term;
  }
  return total / (2 * ell);
}

}  // namespace pancyclic
