#include "pancyclic/rotation.hpp"

#include <algorithm>
#include <sstream>

namespace pancyclic {

namespace {

using EC = Expected<OrientedCycle>;

// Arc of c from `from` to `to` inclusive; from == to gives the single vertex.
std::vector<int> arc(const OrientedCycle& c, int from, int to, Direction dir) {
  if (from == to) return {from};
  return segment(c, from, to, dir).vertices();
}

std::string pair_str(int u, int v) {
  std::ostringstream os;
  os << '(' << u << ',' << v << ')';
  return os.str();
}

EC finish(const Graph& g, std::vector<int> vs, const char* who) {
  OrientedCycle out(std::move(vs));
  if (auto bad = validate_cycle(g, out))
    return EC::fail(std::string(who) + ": construction invalid: " + bad->what);
  return EC::ok(std::move(out));
}

struct CommonPre {
  std::string err;  // empty = fine
};

CommonPre check_uv(const OrientedCycle& c, int u, int v) {
  if (u == v) return {"u == v"};
  if (c.index_of(u) == -1) return {"u not on cycle"};
  if (c.index_of(v) == -1) return {"v not on cycle"};
  return {};
}

CommonPre check_bridge(const Graph& g, const OrientedCycle& c, const Path& bridge) {
  if (bridge.order() == 0) return {"empty bridge"};
  for (int w : bridge.vertices())
    if (c.contains(w)) return {"bridge touches cycle at " + std::to_string(w)};
  if (auto bad = validate_path(g, bridge)) return {"bridge not a path: " + bad->what};
  return {};
}

int forward_distance(const OrientedCycle& c, int u, int v) {
  int pu = c.index_of(u), pv = c.index_of(v);
  int L = c.length();
  return ((pv - pu) % L + L) % L;
}

int cycle_distance(const OrientedCycle& c, int u, int v) {
  int d = forward_distance(c, u, v);
  return std::min(d, c.length() - d);
}

}  // namespace

Expected<OrientedCycle> rotate_c1(const Graph& g, const OrientedCycle& c, int u, int v,
                                  int x) {
  if (auto p = check_uv(c, u, v); !p.err.empty()) return EC::fail("rotate_c1: " + p.err);
  if (c.contains(x)) return EC::fail("rotate_c1: x on cycle");
  if (!g.has_edge(x, u)) return EC::fail("rotate_c1: missing edge xu " + pair_str(x, u));
  if (!g.has_edge(x, v)) return EC::fail("rotate_c1: missing edge xv " + pair_str(x, v));
  int um = predecessor(c, u), vm = predecessor(c, v);
  if (!g.has_edge(um, vm))
    return EC::fail("rotate_c1: missing edge u-v- " + pair_str(um, vm));
  std::vector<int> vs = arc(c, u, vm, Direction::forward);
  for (int w : arc(c, um, v, Direction::backward)) vs.push_back(w);
  vs.push_back(x);
  if ((int)vs.size() != c.length() + 1)
    return EC::fail("rotate_c1: length arithmetic failed");
  return finish(g, std::move(vs), "rotate_c1");
}

Expected<OrientedCycle> rotate_c2(const Graph& g, const RotationConfig& cfg) {
  const OrientedCycle& c = cfg.cycle;
  int u = cfg.u, v = cfg.v;
  if (auto p = check_uv(c, u, v); !p.err.empty()) return EC::fail("rotate_c2: " + p.err);
  if (auto p = check_bridge(g, c, cfg.bridge); !p.err.empty())
    return EC::fail("rotate_c2: " + p.err);
  int x = cfg.bridge.front(), y = cfg.bridge.back();
  if (!g.has_edge(v, x)) return EC::fail("rotate_c2: missing edge vx " + pair_str(v, x));
  if (!g.has_edge(u, y)) return EC::fail("rotate_c2: missing edge uy " + pair_str(u, y));
  int um = predecessor(c, u), vm = predecessor(c, v);
  if (!g.has_edge(um, vm))
    return EC::fail("rotate_c2: missing edge u-v- " + pair_str(um, vm));
  std::vector<int> vs = arc(c, u, vm, Direction::forward);
  for (int w : arc(c, um, v, Direction::backward)) vs.push_back(w);
  for (int w : cfg.bridge.vertices()) vs.push_back(w);
  if ((int)vs.size() != c.length() + cfg.bridge.order())
    return EC::fail("rotate_c2: length arithmetic failed");
  return finish(g, std::move(vs), "rotate_c2");
}

Expected<OrientedCycle> rotate_c3(const Graph& g, const OrientedCycle& c, int u, int v,
                                  int x, int y, const Path& bridge) {
  if (auto p = check_uv(c, u, v); !p.err.empty()) return EC::fail("rotate_c3: " + p.err);
  if (auto p = check_bridge(g, c, bridge); !p.err.empty())
    return EC::fail("rotate_c3: " + p.err);
  if (bridge.front() != x || bridge.back() != y)
    return EC::fail("rotate_c3: bridge must run from x to y");
  if (!g.has_edge(u, y)) return EC::fail("rotate_c3: missing edge uy " + pair_str(u, y));
  if (!g.has_edge(v, x)) return EC::fail("rotate_c3: missing edge vx " + pair_str(v, x));
  std::vector<int> vs = arc(c, u, v, Direction::backward);
  int dropped = c.length() - (int)vs.size();
  for (int w : bridge.vertices()) vs.push_back(w);
  if ((int)vs.size() != c.length() - dropped + bridge.order())
    return EC::fail("rotate_c3: length arithmetic failed");
  if ((int)vs.size() < 3) return EC::fail("rotate_c3: result shorter than a triangle");
  return finish(g, std::move(vs), "rotate_c3");
}

Expected<OrientedCycle> rotate_c4(const Graph& g, const RotationConfig& cfg) {
  const OrientedCycle& c = cfg.cycle;
  int u = cfg.u, v = cfg.v;
  if (auto p = check_uv(c, u, v); !p.err.empty()) return EC::fail("rotate_c4: " + p.err);
  if (cycle_distance(c, u, v) < 4)
    return EC::fail("rotate_c4: cycle-distance(u,v) < 4");
  if (auto p = check_bridge(g, c, cfg.bridge); !p.err.empty())
    return EC::fail("rotate_c4: " + p.err);
  int x = cfg.bridge.front(), y = cfg.bridge.back();
  if (!g.has_edge(v, x)) return EC::fail("rotate_c4: missing edge vx " + pair_str(v, x));
  if (!g.has_edge(u, y)) return EC::fail("rotate_c4: missing edge uy " + pair_str(u, y));
  int um = predecessor(c, u), vm3 = predecessor(c, v, 3);
  if (!g.has_edge(um, vm3))
    return EC::fail("rotate_c4: missing edge u-v-3 " + pair_str(um, vm3));
  std::vector<int> vs = arc(c, u, vm3, Direction::forward);
  for (int w : arc(c, um, v, Direction::backward)) vs.push_back(w);
  for (int w : cfg.bridge.vertices()) vs.push_back(w);
  if ((int)vs.size() != c.length() - 2 + cfg.bridge.order())
    return EC::fail("rotate_c4: length arithmetic failed");
  return finish(g, std::move(vs), "rotate_c4");
}

Expected<OrientedCycle> rotate_c5(const Graph& g, const RotationConfig& cfg) {
  const OrientedCycle& c = cfg.cycle;
  int u = cfg.u, v = cfg.v;
  if (auto p = check_uv(c, u, v); !p.err.empty()) return EC::fail("rotate_c5: " + p.err);
  if (cycle_distance(c, u, v) < 4)
    return EC::fail("rotate_c5: cycle-distance(u,v) < 4");
  if (auto p = check_bridge(g, c, cfg.bridge); !p.err.empty())
    return EC::fail("rotate_c5: " + p.err);
  int x = cfg.bridge.front(), y = cfg.bridge.back();
  if (!g.has_edge(v, x)) return EC::fail("rotate_c5: missing edge vx " + pair_str(v, x));
  if (!g.has_edge(u, y)) return EC::fail("rotate_c5: missing edge uy " + pair_str(u, y));
  int um3 = predecessor(c, u, 3), vm3 = predecessor(c, v, 3);
  if (!g.has_edge(um3, vm3))
    return EC::fail("rotate_c5: missing edge u-3v-3 " + pair_str(um3, vm3));
  std::vector<int> vs = arc(c, u, vm3, Direction::forward);
  for (int w : arc(c, um3, v, Direction::backward)) vs.push_back(w);
  for (int w : cfg.bridge.vertices()) vs.push_back(w);
  if ((int)vs.size() != c.length() - 4 + cfg.bridge.order())
    return EC::fail("rotate_c5: length arithmetic failed");
  return finish(g, std::move(vs), "rotate_c5");
}

namespace detail {

namespace {

// Splice an ear (w .. u .. w-) in place of the cycle edge w- w.
EC splice_ear(const Graph& g, const OrientedCycle& c, int w, int wm,
              const std::vector<int>& to_w, const std::vector<int>& to_wm) {
  std::vector<int> vs = arc(c, w, wm, Direction::forward);  // whole cycle
  // to_w runs u -> ... -> w ; to_wm runs u -> ... -> wm. Interior of the ear
  // from w to wm is: rev(to_w minus w), then to_wm minus {u, wm}.
  std::vector<int> ear;
  for (int i = (int)to_w.size() - 2; i >= 0; --i) ear.push_back(to_w[i]);
  for (size_t i = 1; i + 1 < to_wm.size(); ++i) ear.push_back(to_wm[i]);
  // vs ends at wm; appending the ear reversed walks wm -> ... -> u -> ... -> (w)
  for (int i = (int)ear.size() - 1; i >= 0; --i) vs.push_back(ear[i]);
  return finish(g, std::move(vs), "extend(ear)");
}

}  // namespace

Expected<OrientedCycle> extend_with_anchor(const Graph& g, const OrientedCycle& c, int u,
                                           std::optional<int> avoid, int alpha) {
  int n = g.n();
  if (c.contains(u)) return EC::fail("extend: u already on cycle");
  if (avoid && (*avoid == u || c.contains(*avoid)))
    return EC::fail("extend: avoid vertex unusable");

  VertexSet cyc = c.vertex_set(n);

  // Branch 1: direct ear through u between some consecutive pair w-, w.
  std::vector<int> cyc_sorted = cyc.to_vector();
  for (int w : cyc_sorted) {
    int wm = predecessor(c, w);
    VertexSet forbidden = cyc;
    forbidden.remove(w);
    forbidden.remove(wm);
    if (avoid) forbidden.add(*avoid);
    auto res = disjoint_paths(g, VertexSet::of(n, {u}), VertexSet::of(n, {w, wm}), 2,
                              forbidden);
    if (res.paths.size() == 2) {
      const auto& p0 = res.paths[0];
      const auto& p1 = res.paths[1];
      const auto& to_w = p0.back() == w ? p0 : p1;
      const auto& to_wm = p0.back() == w ? p1 : p0;
      if (to_w.back() != w || to_wm.back() != wm) continue;
      auto out = splice_ear(g, c, w, wm, to_w, to_wm);
      if (out) return out;
    }
  }

  // Branch 2: Menger fan from u to the cycle, then an edge among the
  // predecessors of the attachment points (or u).
  int k_req = std::min(alpha, c.length());
  VertexSet forbidden(n);
  if (avoid) forbidden.add(*avoid);
  auto fan = disjoint_paths(g, VertexSet::of(n, {u}), cyc, k_req, forbidden);
  if ((int)fan.paths.size() < k_req) {
    std::ostringstream os;
    os << "extend: connectivity hypothesis violated: only " << fan.paths.size()
       << " disjoint paths from " << u << " to the cycle";
    if (fan.cut) {
      os << "; cut witness {";
      bool first = true;
      for (int v : fan.cut->to_vector()) os << (first ? "" : ",") << v, first = false;
      os << "}";
      if (avoid) os << " plus avoided vertex " << *avoid;
    }
    return EC::fail(os.str());
  }

  // consecutive attachment points give an ear after all (kept for robustness)
  std::vector<int> ends;
  for (const auto& p : fan.paths) ends.push_back(p.back());
  for (size_t i = 0; i < ends.size(); ++i)
    for (size_t j = 0; j < ends.size(); ++j) {
      if (i == j) continue;
      if (predecessor(c, ends[i]) == ends[j]) {
        auto out = splice_ear(g, c, ends[i], ends[j], fan.paths[i], fan.paths[j]);
        if (out) return out;
      }
    }

  VertexSet s(n);
  s.add(u);
  for (int w : ends) s.add(predecessor(c, w));
  auto e = find_edge_in(g, s);
  if (!e) {
    std::ostringstream os;
    os << "extend: independence hypothesis violated: independent set of size "
       << s.count() << " {";
    bool first = true;
    for (int v : s.to_vector()) os << (first ? "" : ",") << v, first = false;
    os << "}";
    return EC::fail(os.str());
  }
  auto [ea, eb] = *e;
  auto path_ending_before = [&](int wm) -> const std::vector<int>* {
    for (size_t i = 0; i < ends.size(); ++i)
      if (predecessor(c, ends[i]) == wm) return &fan.paths[i];
    return nullptr;
  };
  if (ea == u || eb == u) {
    int wm = ea == u ? eb : ea;
    const auto* p = path_ending_before(wm);
    if (p) {
      int w = successor(c, wm);
      std::vector<int> direct{u, wm};
      auto out = splice_ear(g, c, w, wm, *p, direct);
      if (out) return out;
    }
    return EC::fail("extend: inconsistent fan state (edge into u)");
  }
  const auto* pi = path_ending_before(ea);
  const auto* pj = path_ending_before(eb);
  if (!pi || !pj) return EC::fail("extend: inconsistent fan state");
  int wi = successor(c, ea), wj = successor(c, eb);
  // C' = u  Pi  wi  ->forward-> wj-  wi- <-backward<- wj  Pj reversed  u
  std::vector<int> vs = *pi;  // u .. wi
  {
    auto fwd = arc(c, wi, eb, Direction::forward);
    for (size_t t = 1; t < fwd.size(); ++t) vs.push_back(fwd[t]);
    for (int w : arc(c, ea, wj, Direction::backward)) vs.push_back(w);
    for (int t = (int)pj->size() - 2; t >= 1; --t) vs.push_back((*pj)[t]);
  }
  return finish(g, std::move(vs), "extend(rotation)");
}

}  // namespace detail

Expected<OrientedCycle> extend_into_component(const Graph& g, const OrientedCycle& c,
                                              const VertexSet& h, int u, int v) {
  if (auto bad = validate_cycle(g, c))
    return EC::fail("extend: input cycle invalid: " + bad->what);
  if (u == v) return EC::fail("extend: need distinct u, v in h");
  if (!h.contains(u) || !h.contains(v)) return EC::fail("extend: u or v outside h");
  if (h.intersects(c.vertex_set(g.n()))) return EC::fail("extend: h meets the cycle");
  auto comps = components_of(g, VertexSet::full(g.n()) - c.vertex_set(g.n()));
  bool is_comp = false;
  for (const auto& comp : comps) is_comp |= comp == h;
  if (!is_comp) return EC::fail("extend: h is not a component of g minus the cycle");
  int alpha = independence_number(g);
  auto out = detail::extend_with_anchor(g, c, u, v, alpha);
  if (!out) return out;
  // the absorbed vertices must form the stated path shape: all inside h
  VertexSet absorbed = out->vertex_set(g.n()) - c.vertex_set(g.n());
  if (!absorbed.is_subset_of(h) || !absorbed.contains(u) || absorbed.contains(v))
    return EC::fail("extend: postcondition violated (absorbed set left h)");
  return out;
}

namespace {

Expected<OrientedCycle> shortest_cycle(const Graph& g) {
  int best = -1;
  std::vector<int> best_cyc;
  for (auto [a, b] : g.edges()) {
    // shortest a-b path avoiding the edge ab itself
    std::vector<int> par(g.n(), -2);
    std::vector<int> dist(g.n(), -1);
    std::vector<int> q{a};
    par[a] = -1;
    dist[a] = 0;
    for (size_t qi = 0; qi < q.size(); ++qi) {
      int x = q[qi];
      VertexSet nb = g.neighbors(x);
      for (int y = nb.first(); y != -1; y = nb.next(y)) {
        if (x == a && y == b) continue;
        if (dist[y] != -1) continue;
        dist[y] = dist[x] + 1;
        par[y] = x;
        q.push_back(y);
      }
    }
    if (dist[b] == -1) continue;
    int len = dist[b] + 1;
    if (best != -1 && len >= best) continue;
    std::vector<int> cyc;
    for (int x = b; x != -1; x = par[x]) cyc.push_back(x);
    best = len;
    best_cyc = cyc;
  }
  if (best == -1) return EC::fail("no cycle exists");
  return EC::ok(OrientedCycle(best_cyc));
}

Expected<OrientedCycle> first_triangle(const Graph& g) {
  for (int u = 0; u < g.n(); ++u) {
    auto e = find_edge_in(g, g.neighbors(u));
    if (e) return EC::ok(OrientedCycle({u, e->first, e->second}));
  }
  return EC::fail("no triangle");
}

}  // namespace

Expected<OrientedCycle> ce_hamilton(const Graph& g, const ConditionProfile& profile) {
  if (g.n() < 3) return EC::fail("ce_hamilton: need n >= 3");
  if (profile.kappa < profile.alpha)
    return EC::fail("ce_hamilton: precondition kappa >= alpha fails (kappa=" +
                    std::to_string(profile.kappa) +
                    ", alpha=" + std::to_string(profile.alpha) + ")");
  auto c = first_triangle(g);
  if (!c) c = shortest_cycle(g);
  if (!c) return EC::fail("ce_hamilton: acyclic graph cannot satisfy kappa >= alpha");
  OrientedCycle cur = *c;
  int guard = 0;
  while (cur.length() < g.n()) {
    if (++guard > g.n()) return EC::fail("ce_hamilton: no strict progress");
    VertexSet rest = VertexSet::full(g.n()) - cur.vertex_set(g.n());
    int u = rest.first();
    auto next = detail::extend_with_anchor(g, cur, u, std::nullopt, profile.alpha);
    if (!next) return EC::fail("ce_hamilton stalled: " + next.error());
    if (next->length() <= cur.length())
      return EC::fail("ce_hamilton: move failed to grow the cycle");
    cur = *next;
  }
  return EC::ok(cur);
}

Expected<OrientedCycle> ce_hamilton(const Graph& g) {
  if (g.n() < 3) return EC::fail("ce_hamilton: need n >= 3");
  return ce_hamilton(g, condition_profile(g));
}

}  // namespace pancyclic
