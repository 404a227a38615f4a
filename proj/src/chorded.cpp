#include "pancyclic/chorded.hpp"

#include <algorithm>
#include <sstream>

namespace pancyclic {

namespace {

std::string dump_state(const std::vector<int>& p, const VertexSet& nx,
                       const VertexSet& ny) {
  std::ostringstream os;
  os << "path so far:";
  for (int v : p) os << ' ' << v;
  os << "; N_x {";
  for (int v : nx.to_vector()) os << ' ' << v;
  os << " }; N_y {";
  for (int v : ny.to_vector()) os << ' ' << v;
  os << " }";
  return os.str();
}

std::optional<std::pair<int, int>> edge_between(const Graph& g, const VertexSet& a,
                                                const VertexSet& b) {
  for (int z = a.first(); z != -1; z = a.next(z)) {
    VertexSet hits = g.neighbors(z) & b;
    int w = hits.first();
    if (w != -1) return std::make_pair(z, w);
  }
  return std::nullopt;
}

}  // namespace

Expected<ChordedPath> build_chorded_path(const Graph& g, int k,
                                         const ConditionProfile& profile) {
  using E = Expected<ChordedPath>;
  if (profile.min_degree <= profile.alpha)
    return E::fail("build_chorded_path: requires min_degree > alpha (delta=" +
                   std::to_string(profile.min_degree) +
                   ", alpha=" + std::to_string(profile.alpha) + ")");
  if (k < 1 || 6 * k > profile.alpha)
    return E::fail("build_chorded_path: k must satisfy 1 <= k <= alpha/6, got k=" +
                   std::to_string(k) + " with alpha=" + std::to_string(profile.alpha));

  int n = g.n();
  std::vector<int> p;
  std::vector<std::pair<int, int>> chords;

  // seed: least triangle, laid out as a path with its span-2 chord
  for (int u = 0; u < n && p.empty(); ++u) {
    auto e = find_edge_in(g, g.neighbors(u));
    if (e) {
      p = {u, e->first, e->second};
      chords.emplace_back(u, e->second);
    }
  }
  if (p.empty()) return E::fail("build_chorded_path: graph has no triangle");

  while ((int)chords.size() < k) {
    int x = p.back();
    VertexSet outside = VertexSet::full(n);
    for (int v : p) outside.remove(v);
    VertexSet nx = g.neighbors(x) & outside;

    // (i) triangle at the end: x z y with zy an edge off the path
    if (auto e = find_edge_in(g, nx)) {
      p.push_back(e->first);
      p.push_back(e->second);
      chords.emplace_back(x, e->second);
      continue;
    }

    // (ii) a neighbor y of x inside a triangle that avoids x
    bool grew = false;
    for (int y = nx.first(); y != -1 && !grew; y = nx.next(y)) {
      VertexSet cand = g.neighbors(y) & outside;
      cand.remove(y);
      if (auto e = find_edge_in(g, cand)) {
        p.push_back(y);
        p.push_back(e->first);
        p.push_back(e->second);
        chords.emplace_back(y, e->second);
        grew = true;
      }
    }
    if (grew) continue;

    // (iii) failing both, every nx is independent, so is each neighbor's
    // side, and the two sides are disjoint; an edge between them rides a
    // span-3 chord x..y
    for (int y = nx.first(); y != -1 && !grew; y = nx.next(y)) {
      VertexSet side_x = nx;
      side_x.remove(y);
      VertexSet side_y = g.neighbors(y) & outside;
      side_y.remove(y);
      side_y -= g.neighbors(x);  // shared neighbors would be case (i) triangles
      side_y.remove(x);
      if (auto zw = edge_between(g, side_x, side_y)) {
        p.push_back(zw->first);
        p.push_back(zw->second);
        p.push_back(y);
        chords.emplace_back(x, y);
        grew = true;
      }
    }
    if (grew) continue;

    VertexSet ny_all(n);
    for (int y = nx.first(); y != -1; y = nx.next(y)) ny_all |= g.neighbors(y) & outside;
    return E::fail("build_chorded_path: no qualifying edge at the active end; " +
                   dump_state(p, nx, ny_all));
  }

  Path path(p);
  std::vector<Chord> placed;
  for (auto [a, b] : chords) placed.push_back(chord_on_path(path, a, b));
  ChordedPath cp(path, placed);
  if ((int)cp.chords().size() != k)
    return E::fail("build_chorded_path: chord count mismatch");
  if (path.length() > 3 * k) return E::fail("build_chorded_path: path too long");
  return E::ok(std::move(cp));
}

Expected<ChordedPath> build_chorded_path(const Graph& g, int k) {
  return build_chorded_path(g, k, condition_profile(g));
}

Expected<OrientedCycle> extend_to_short_cycle(const Graph& g, const ChordedPath& cp,
                                              int len_budget) {
  using E = Expected<OrientedCycle>;
  const Path& p = cp.path();
  int n = g.n();
  int x = p.front(), y = p.back();
  VertexSet blocked(n);
  for (int v : p.vertices()) blocked.add(v);
  blocked.remove(x);
  blocked.remove(y);

  // shortest x..y path dodging the interior
  std::vector<int> par(n, -2), dist(n, -1);
  std::vector<int> q{x};
  dist[x] = 0;
  par[x] = -1;
  for (size_t qi = 0; qi < q.size() && dist[y] == -1; ++qi) {
    int a = q[qi];
    VertexSet nb = g.neighbors(a) - blocked;
    for (int b = nb.first(); b != -1; b = nb.next(b)) {
      if (dist[b] != -1) continue;
      dist[b] = dist[a] + 1;
      par[b] = a;
      q.push_back(b);
    }
  }
  if (dist[y] == -1)
    return E::fail("extend_to_short_cycle: ends not reconnectable off the interior");
  int total = p.length() + dist[y];
  if (total > len_budget)
    return E::fail("extend_to_short_cycle: shortest closure gives length " +
                   std::to_string(total) + " > budget " + std::to_string(len_budget));
  std::vector<int> vs = p.vertices();
  for (int a = par[y]; a != x; a = par[a]) vs.push_back(a);
  OrientedCycle c(vs);
  if (auto bad = validate_cycle(g, c))
    return E::fail("extend_to_short_cycle: invalid closure: " + bad->what);
  return E::ok(std::move(c));
}

}  // namespace pancyclic
