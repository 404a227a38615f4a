#include "pancyclic/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pancyclic/finders.hpp"
#include "pancyclic/rotation.hpp"

namespace pancyclic {

namespace {

using EO = Expected<OrientedCycle>;
using EP = Expected<Path>;
using ER = Expected<RangeOutcome>;
using EPair = Expected<std::pair<ChordedPath, Path>>;

std::string ts(long long v) { return std::to_string(v); }

int edges_within(const Graph& g, const VertexSet& s) {
  int m = 0;
  for (int u = s.first(); u != -1; u = s.next(u)) {
    VertexSet nb = g.neighbors(u);
    nb &= s;
    for (int v = nb.first(); v != -1; v = nb.next(v))
      if (v > u) ++m;
  }
  return m;
}

bool is_forest(const Graph& g, const VertexSet& s) {
  if (s.empty()) return true;
  return edges_within(g, s) == (int)s.count() - (int)components_of(g, s).size();
}

EO mk_cycle(const Graph& g, const std::vector<int>& vs, const std::string& who) {
  if ((int)vs.size() < 3)
    return EO::fail(who + ": cycle would need at least three vertices");
  OrientedCycle c(vs);
  if (auto bad = validate_cycle(g, c)) return EO::fail(who + ": " + bad->what);
  return EO::ok(std::move(c));
}

bool keeps_path_edges(const OrientedCycle& c, const Path& p) {
  for (int i = 0; i + 1 < p.order(); ++i)
    if (!c.has_cycle_edge(p.at(i), p.at(i + 1))) return false;
  return true;
}

struct CycleChord {
  int pos = 0;
  int span = 2;
};

// greedy earliest-end family of non-crossing span-2/3 chords; shared
// endpoints allowed, no wrap past position 0
std::vector<CycleChord> greedy_cycle_chords(const Graph& g, const OrientedCycle& c,
                                            bool allow_span3) {
  int len = c.length();
  std::vector<CycleChord> cand;
  for (int i = 0; i < len; ++i)
    for (int s = 2; s <= (allow_span3 ? 3 : 2); ++s)
      if (i + s < len && g.has_edge(c.at(i), c.at(i + s))) cand.push_back({i, s});
  std::sort(cand.begin(), cand.end(), [](const CycleChord& a, const CycleChord& b) {
    if (a.pos + a.span != b.pos + b.span) return a.pos + a.span < b.pos + b.span;
    return a.span < b.span;
  });
  std::vector<CycleChord> picked;
  int frontier = 0;
  for (const CycleChord& ch : cand) {
    if (ch.pos < frontier) continue;
    picked.push_back(ch);
    frontier = ch.pos + ch.span;
  }
  return picked;
}

int span2_chord_count(const Graph& g, const OrientedCycle& c) {
  return (int)greedy_cycle_chords(g, c, false).size();
}

// removes exactly r vertices by replacing chord intervals with the chords
EO drop_via_chords(const Graph& g, const OrientedCycle& c, int r, const std::string& who) {
  if (r == 0) return EO::ok(c);
  if (r < 0 || c.length() - r < 3)
    return EO::fail(who + ": cannot drop " + ts(r) + " vertices from a cycle of length " +
                    ts(c.length()));
  std::vector<CycleChord> ones, twos;
  for (const CycleChord& ch : greedy_cycle_chords(g, c, true))
    (ch.span == 2 ? ones : twos).push_back(ch);
  int use1 = -1, use2 = 0;
  for (int y = std::min((int)twos.size(), r / 2); y >= 0; --y)
    if (r - 2 * y <= (int)ones.size()) {
      use1 = r - 2 * y;
      use2 = y;
      break;
    }
  if (use1 < 0)
    return EO::fail(who + ": no non-crossing chord family drops exactly " + ts(r) +
                    " vertices");
  std::vector<int> jump(c.length(), 0);
  for (int t = 0; t < use1; ++t) jump[ones[t].pos] = 2;
  for (int t = 0; t < use2; ++t) jump[twos[t].pos] = 3;
  std::vector<int> vs;
  for (int i = 0; i < c.length();) {
    vs.push_back(c.at(i));
    i += jump[i] ? jump[i] : 1;
  }
  return mk_cycle(g, vs, who);
}

int working_size(const Graph& g) {
  int k = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0) ++k;
  return k;
}

int working_min_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0 && (d == 0 || g.degree(v) < d)) d = g.degree(v);
  return d == 0 ? 1 : d;
}

// one chord skip whose drop fits the window; segment reversals (two new
// edges, one segment flipped) unlock chords without changing the length
EP shorten_engine(const Graph& g, const Path& p0, int window, long long state_budget,
                  const std::string& who) {
  if (auto bad = validate_path(g, p0)) return EP::fail(who + ": " + bad->what);
  if (p0.order() < 3) return EP::fail(who + ": nothing between the ends to drop");
  if (window < 1) window = 1;
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  queue.push_back(p0.vertices());
  seen.insert(queue.front());
  long long popped = 0;
  while (!queue.empty()) {
    if (++popped > state_budget)
      return EP::fail(who + ": gave up after " + ts(state_budget) +
                      " reversal states without a shortcut inside the window");
    std::vector<int> vs = queue.front();
    queue.pop_front();
    int len = (int)vs.size();
    for (int i = 0; i + 2 < len; ++i)
      for (int j = i + 2; j < len; ++j) {
        if (j - i - 1 > window) break;
        if (!g.has_edge(vs[i], vs[j])) continue;
        std::vector<int> out(vs.begin(), vs.begin() + i + 1);
        out.insert(out.end(), vs.begin() + j, vs.end());
        Path res(out);
        if (validate_path(g, res)) continue;
        return EP::ok(res);
      }
    for (int i = 0; i + 2 < len; ++i)
      for (int j = i + 2; j + 1 < len; ++j) {
        if (!g.has_edge(vs[i], vs[j]) || !g.has_edge(vs[i + 1], vs[j + 1])) continue;
        std::vector<int> out(vs.begin(), vs.begin() + i + 1);
        for (int t = j; t > i; --t) out.push_back(vs[t]);
        out.insert(out.end(), vs.begin() + j + 1, vs.end());
        if (seen.insert(out).second) queue.push_back(out);
      }
  }
  return EP::fail(who + ": no shortcut exists (search exhausted)");
}

// shortest route between two sets, avoiding `forbidden` entirely
std::optional<std::vector<int>> bfs_route(const Graph& g, const VertexSet& from,
                                          const VertexSet& to, const VertexSet& forbidden) {
  int n = g.n();
  std::vector<int> par(n, -2);
  std::deque<int> q;
  for (int v = from.first(); v != -1; v = from.next(v))
    if (!forbidden.contains(v)) {
      par[v] = -1;
      q.push_back(v);
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (to.contains(v)) {
      std::vector<int> path{v};
      int w = v;
      while (par[w] >= 0) {
        w = par[w];
        path.push_back(w);
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    const VertexSet& nb = g.neighbors(v);
    for (int w = nb.first(); w != -1; w = nb.next(w))
      if (par[w] == -2 && !forbidden.contains(w)) {
        par[w] = v;
        q.push_back(w);
      }
  }
  return std::nullopt;
}

std::optional<Path> find_path_from(const Graph& g, int start, int order,
                                   const VertexSet& allowed, long long step_budget) {
  if (order < 1 || !allowed.contains(start)) return std::nullopt;
  std::vector<int> acc{start};
  VertexSet used(g.n());
  used.add(start);
  long long steps = 0;
  auto dfs = [&](auto&& self) -> bool {
    if ((int)acc.size() == order) return true;
    if (++steps > step_budget) return false;
    VertexSet cand = g.neighbors(acc.back());
    cand &= allowed;
    for (int w = cand.first(); w != -1; w = cand.next(w)) {
      if (used.contains(w)) continue;
      used.add(w);
      acc.push_back(w);
      if (self(self)) return true;
      acc.pop_back();
      used.remove(w);
    }
    return false;
  };
  if (dfs(dfs)) return Path(acc);
  return std::nullopt;
}

// drops interior chords until the sequence is induced; ends stay put
std::vector<int> skip_to_induced(const Graph& g, std::vector<int> q) {
  bool again = true;
  while (again) {
    again = false;
    for (int i = 0; i + 2 < (int)q.size() && !again; ++i)
      for (int j = (int)q.size() - 1; j >= i + 2; --j)
        if (g.has_edge(q[i], q[j])) {
          q.erase(q.begin() + i + 1, q.begin() + j);
          again = true;
          break;
        }
  }
  return q;
}

ER range_fallback(const Graph& g, int ell, const PipelineParams& params,
                  const std::string& tag, const std::string& why) {
  auto r = detail::bounded_cycle_search(g, ell, params.fallback_budget);
  if (r.status == detail::SearchStatus::found && r.cycle) {
    if (r.cycle->length() == ell && !validate_cycle(g, *r.cycle))
      return ER::ok(RangeOutcome{*r.cycle, tag});
    return ER::fail(why + "; fallback produced an invalid cycle");
  }
  if (r.status == detail::SearchStatus::exhausted)
    return ER::fail(why + "; no cycle of length " + ts(ell) +
                    " exists (fallback search exhausted)");
  return ER::fail(why + "; fallback search hit its node budget");
}

// contract k' = l(p0) + l(ret) - ell chord skips out of p0, then close the
// ring with ret's interior
EO contract_and_glue(const Graph& g, const ChordedPath& p0, const Path& ret, int ell,
                     const std::string& who) {
  int kprime = p0.path().length() + ret.length() - ell;
  if (kprime < 0)
    return EO::fail(who + ": the return path is too short to reach the target");
  auto cp = contract_chords(p0, kprime);
  if (!cp) return EO::fail(who + ": " + cp.error());
  Path b = ret;
  if (b.front() != cp->back()) b = b.reversed();
  if (b.front() != cp->back() || b.back() != cp->front())
    return EO::fail(who + ": the two paths do not share their ends");
  std::vector<int> vs = cp->vertices();
  for (int i = 1; i + 1 < b.order(); ++i) vs.push_back(b.at(i));
  auto c = mk_cycle(g, vs, who);
  if (!c) return c;
  if (c->length() != ell) return EO::fail(who + ": glued cycle misses the target length");
  return c;
}

}  // namespace

DispatchWindows dispatch_windows(long long n, int alpha, int ell, double delta) {
  DispatchWindows w;
  double na = (double)n / alpha;
  double lo = std::max(na, delta * alpha);
  double hi = na / (delta * alpha);
  w.lower = (double)ell <= lo + 1e-9;
  w.upper = (double)ell + 1e-9 >= hi;
  w.middle = lo - 1e-9 <= (double)ell && (double)ell <= hi + 1e-9;
  return w;
}

std::optional<Path> find_path_of_order(const Graph& g, const VertexSet& within,
                                       int order) {
  if (order < 1) return std::nullopt;
  for (int s = within.first(); s != -1; s = within.next(s))
    if (auto p = find_path_from(g, s, order, within, 500000)) return p;
  return std::nullopt;
}

Expected<Path> shorten_path_mindeg(const Graph& g, const Path& p, long long state_budget) {
  int n = working_size(g);
  int d = working_min_degree(g);
  int window = (int)std::ceil(20.0 * n / d - 1e-9);
  return shorten_engine(g, p, window, state_budget, "degree shortening");
}

Expected<Path> shorten_path_indep(const Graph& g, const Path& p, int alpha,
                                  long long state_budget) {
  if (alpha < 1) return EP::fail("independence shortening: alpha must be positive");
  if (p.order() <= 4 * alpha)
    return EP::fail("independence shortening: the path must carry more than 4*alpha vertices");
  int window = (int)std::ceil(20.0 * alpha * alpha / p.order() - 1e-9);
  return shorten_engine(g, p, window, state_budget, "independence shortening");
}

Expected<P5Structure> p5free_structure(const Graph& g, const VertexSet& h) {
  using ES = Expected<P5Structure>;
  if (h.empty()) return ES::fail("p5 structure: empty vertex set");
  if (components_of(g, h).size() != 1)
    return ES::fail("p5 structure: the set is not connected");
  if (find_path_of_order(g, h, 5))
    return ES::fail("p5 structure: the graph carries a path on five vertices");
  int cnt = (int)h.count();
  int m = edges_within(g, h);
  P5Structure s;
  if (cnt == 4 && m == 6) {
    s.kind = P5Structure::Kind::k4;
    s.rest = h;
    return ES::ok(s);
  }
  if (m == cnt - 1) {
    s.kind = P5Structure::Kind::tree;
    s.rest = h;
    return ES::ok(s);
  }
  for (int u = h.first(); u != -1; u = h.next(u)) {
    VertexSet rest = h;
    rest.remove(u);
    if (is_forest(g, rest)) {
      s.kind = P5Structure::Kind::apex;
      s.apex = u;
      s.rest = rest;
      return ES::ok(s);
    }
  }
  return ES::fail("p5 structure: no single vertex leaves a forest");
}

Expected<OrientedCycle> extend_keeping_forest(const Graph& g, const OrientedCycle& c,
                                              const VertexSet& h, int alpha) {
  auto st = p5free_structure(g, h);
  if (!st) return EO::fail("forest extension: " + st.error());
  VertexSet overlap = c.vertex_set(g.n());
  overlap &= h;
  if (!overlap.empty())
    return EO::fail("forest extension: the component touches the cycle");
  if (st->kind == P5Structure::Kind::tree) return EO::ok(c);

  auto check = [&](const OrientedCycle& out) -> EO {
    if (out.length() > c.length() + 4)
      return EO::fail("forest extension: the cycle grew by more than four");
    VertexSet rem = h;
    VertexSet cs = out.vertex_set(g.n());
    rem -= cs;
    if (rem.empty() || !is_forest(g, rem))
      return EO::fail("forest extension: remainder is not a nonempty forest");
    return EO::ok(out);
  };

  if (st->kind == P5Structure::Kind::apex) {
    int u = st->apex;
    int v = st->rest.first();
    if (v == -1) return EO::fail("forest extension: apex with nothing to keep out");
    auto ext = detail::extend_with_anchor(g, c, u, v, alpha);
    if (!ext) return EO::fail("forest extension: " + ext.error());
    return check(*ext);
  }

  // complete on four vertices: absorb in one or two rounds
  int u = h.first();
  int v = h.next(u);
  auto e1 = detail::extend_with_anchor(g, c, u, v, alpha);
  if (!e1) return EO::fail("forest extension: " + e1.error());
  VertexSet rem = h;
  {
    VertexSet cs = e1->vertex_set(g.n());
    rem -= cs;
  }
  if ((int)rem.count() >= 3) {
    int u2 = rem.first();
    int v2 = rem.next(u2);
    auto e2 = detail::extend_with_anchor(g, *e1, u2, v2, alpha);
    if (!e2) return EO::fail("forest extension: " + e2.error());
    return check(*e2);
  }
  return check(*e1);
}

Expected<OrientedCycle> length3_remainder(const Graph& g, const OrientedCycle& c0,
                                          int ell, const PipelineParams&,
                                          const ConditionProfile& profile) {
  int n = g.n(), alpha = std::max(1, profile.alpha);
  if (auto bad = validate_cycle(g, c0)) return EO::fail("length remainder: " + bad->what);
  if (c0.length() >= ell)
    return EO::fail("length remainder: the cycle must be shorter than the target");
  if (ell > n) return EO::fail("length remainder: target exceeds the graph");
  if (profile.kappa <= profile.alpha)
    return EO::fail(
        "length remainder: connectivity does not exceed the independence number");
  {
    VertexSet off = VertexSet::full(n);
    off -= c0.vertex_set(n);
    for (const VertexSet& comp : components_of(g, off))
      if (find_path_of_order(g, comp, 5))
        return EO::fail(
            "length remainder: a component off the cycle carries a path on five vertices");
  }

  auto tree_union = [&](const OrientedCycle& c) {
    VertexSet off = VertexSet::full(n);
    off -= c.vertex_set(n);
    VertexSet acc(n);
    for (const VertexSet& comp : components_of(g, off))
      if (edges_within(g, comp) == (int)comp.count() - 1) acc |= comp;
    return acc;
  };
  auto leaf_of = [&](const VertexSet& pool) {
    for (int w = pool.first(); w != -1; w = pool.next(w)) {
      VertexSet nb = g.neighbors(w);
      nb &= pool;
      if ((int)nb.count() <= 1) return w;
    }
    return -1;
  };

  // three forest-keeping rounds
  OrientedCycle cur = c0;
  for (int i = 1; i <= 3; ++i) {
    VertexSet f = tree_union(cur);
    if ((int)f.count() >= i || cur.length() >= ell - (int)f.count()) continue;
    VertexSet off = VertexSet::full(n);
    off -= cur.vertex_set(n);
    std::optional<VertexSet> pick;
    for (const VertexSet& comp : components_of(g, off))
      if (edges_within(g, comp) != (int)comp.count() - 1) {
        pick = comp;
        break;
      }
    if (!pick)
      return EO::fail(
          "length remainder: off-cycle vertices are all in trees yet cannot cover the "
          "target");
    auto ext = extend_keeping_forest(g, cur, *pick, alpha);
    if (!ext) return EO::fail("length remainder: " + ext.error());
    cur = *ext;
  }

  VertexSet f3 = tree_union(cur);

  if (cur.length() > ell) {
    // absorb forest leaves until the overshoot is even, then chord it away
    VertexSet pool = f3;
    int guard = 0;
    while ((cur.length() - ell) % 2 == 1) {
      if (++guard > 4) return EO::fail("length remainder: parity never settled");
      int u = leaf_of(pool);
      if (u == -1) return EO::fail("length remainder: no forest vertex left to absorb");
      auto ext = detail::extend_with_anchor(g, cur, u, std::nullopt, alpha);
      if (!ext) return EO::fail("length remainder: " + ext.error());
      if (ext->length() <= cur.length())
        return EO::fail("length remainder: absorption did not lengthen the cycle");
      cur = *ext;
      VertexSet cs = cur.vertex_set(n);
      pool -= cs;
    }
    return drop_via_chords(g, cur, cur.length() - ell, "length remainder");
  }

  // grow outside the frozen forest, then absorb its leaves one at a time
  int guard = 0;
  while (cur.length() < ell - 3) {
    VertexSet outside = VertexSet::full(n);
    outside -= cur.vertex_set(n);
    outside -= f3;
    if (outside.empty()) break;
    if (++guard > n) return EO::fail("length remainder: growth made no progress");
    auto ext = detail::extend_with_anchor(g, cur, outside.first(), std::nullopt, alpha);
    if (!ext) return EO::fail("length remainder: " + ext.error());
    if (ext->length() <= cur.length() || ext->length() > ell)
      return EO::fail("length remainder: growth step left the window");
    cur = *ext;
  }
  VertexSet pool = f3;
  {
    VertexSet cs = cur.vertex_set(n);
    pool -= cs;
  }
  if (ell - cur.length() > (int)pool.count())
    return EO::fail("length remainder: fewer forest vertices than the remaining deficit");
  int guard2 = 0;
  while (cur.length() < ell) {
    if (++guard2 > n) return EO::fail("length remainder: absorption made no progress");
    int u = leaf_of(pool);
    if (u == -1) return EO::fail("length remainder: leftover set is not a forest");
    auto ext = detail::extend_with_anchor(g, cur, u, std::nullopt, alpha);
    if (!ext) return EO::fail("length remainder: " + ext.error());
    if (ext->length() <= cur.length() || ext->length() > ell)
      return EO::fail("length remainder: absorption overshot the target");
    cur = *ext;
    VertexSet cs = cur.vertex_set(n);
    pool -= cs;
  }
  if (auto bad = validate_cycle(g, cur)) return EO::fail("length remainder: " + bad->what);
  return EO::ok(cur);
}

Expected<OrientedCycle> lemma_long(const Graph& g, const OrientedCycle& c0,
                                   const ChordedPath& p0, int ell,
                                   const PipelineParams& params,
                                   const ConditionProfile& profile) {
  if (auto bad = validate_cycle(g, c0)) return EO::fail("improvement loop: " + bad->what);
  if (c0.length() > ell)
    return EO::fail("improvement loop: the starting cycle already exceeds the target");
  if (!keeps_path_edges(c0, p0.path()))
    return EO::fail("improvement loop: the protected path is not on the starting cycle");
  int n = g.n(), alpha = std::max(1, profile.alpha);
  double cap = (double)ell + (double)n / (params.delta * alpha);
  double chord_need = params.delta * alpha;

  OrientedCycle cur = c0;
  auto count_p5_comps = [&]() {
    VertexSet off = VertexSet::full(n);
    off -= cur.vertex_set(n);
    int k = 0;
    for (const VertexSet& comp : components_of(g, off))
      if (find_path_of_order(g, comp, 5)) ++k;
    return k;
  };

  int guard = 0;
  while (cur.length() < ell) {
    if (++guard > n + 8) return EO::fail("improvement loop: too many rounds");
    VertexSet off = VertexSet::full(n);
    off -= cur.vertex_set(n);
    std::optional<VertexSet> target;
    for (const VertexSet& comp : components_of(g, off))
      if (find_path_of_order(g, comp, 5)) {
        target = comp;
        break;
      }
    if (!target) break;

    std::optional<OrientedCycle> best;
    bool best_kept = false;
    auto consider = [&](const EO& cand) {
      if (!cand) return;
      if (cand->length() <= cur.length()) return;
      if ((double)cand->length() > cap + 1e-9) return;
      bool kept = keeps_path_edges(*cand, p0.path());
      if (!kept && (double)span2_chord_count(g, *cand) + 1e-9 < chord_need) return;
      if (!best || (kept && !best_kept)) {
        best = *cand;
        best_kept = kept;
      }
    };

    for (int u = target->first(); u != -1 && !(best && best_kept); u = target->next(u))
      consider(detail::extend_with_anchor(g, cur, u, std::nullopt, alpha));

    if (!best) {
      // rotation probes through the component
      VertexSet outside = VertexSet::full(n);
      outside -= *target;
      int len = cur.length();
      for (int iu = 0; iu < len && !best; ++iu) {
        int u = cur.at(iu), um = predecessor(cur, u);
        for (int iv = 0; iv < len && !best; ++iv) {
          if (iv == iu) continue;
          int v = cur.at(iv), vm = predecessor(cur, v);
          if (!g.has_edge(um, vm)) continue;
          VertexSet xs = g.neighbors(u) & g.neighbors(v);
          xs &= *target;
          if (int x = xs.first(); x != -1) consider(rotate_c1(g, cur, u, v, x));
          if (best) break;
          VertexSet fromv = g.neighbors(v);
          fromv &= *target;
          VertexSet tou = g.neighbors(u);
          tou &= *target;
          if (fromv.empty() || tou.empty()) continue;
          if (auto br = bfs_route(g, fromv, tou, outside)) {
            RotationConfig cfg;
            cfg.cycle = cur;
            cfg.u = u;
            cfg.v = v;
            cfg.bridge = Path(*br);
            consider(rotate_c2(g, cfg));
          }
        }
      }
    }

    if (!best)
      return EO::fail("improvement loop: stalled at length " + ts(cur.length()) + " of " +
                      ts(ell) + ": " + ts(count_p5_comps()) +
                      " off-cycle components still carry a path on five vertices and no "
                      "lengthening move keeps the protected path or the span-2 chord "
                      "budget");
    cur = *best;
  }

  if ((double)cur.length() > cap + 1e-9)
    return EO::fail("improvement loop: internal: length cap violated");
  if (!keeps_path_edges(cur, p0.path()) &&
      (double)span2_chord_count(g, cur) + 1e-9 < chord_need)
    return EO::fail("improvement loop: internal: chord budget lost");
  return EO::ok(cur);
}

Expected<RangeOutcome> upper_range(const Graph& g, int ell, const PipelineParams& params,
                                   const ConditionProfile& profile) {
  int n = g.n(), alpha = std::max(1, profile.alpha);
  auto fb = [&](const std::string& why) {
    return range_fallback(g, ell, params, "upper:fallback", why);
  };
  if (ell < 3 || ell > n) return ER::fail("upper range: target outside [3, n]");
  if (profile.kappa <= profile.alpha)
    return fb("upper range: connectivity does not exceed the independence number");

  int k = std::max(1, std::min({(int)std::floor(params.eta * alpha + 1e-9), ell / 6,
                                alpha / 6}));
  auto cp = build_chorded_path(g, k, profile);
  if (!cp) return fb("upper range: " + cp.error());
  auto c0 = extend_to_short_cycle(g, *cp, ell);
  if (!c0) return fb("upper range: " + c0.error());
  PipelineParams inner = params;
  inner.delta = params.eta;
  auto c1 = lemma_long(g, *c0, *cp, ell, inner, profile);
  if (!c1) return fb(c1.error());

  if (c1->length() == ell) return ER::ok(RangeOutcome{*c1, "upper"});
  if (c1->length() < ell) {
    auto fin = length3_remainder(g, *c1, ell, params, profile);
    if (!fin) return fb(fin.error());
    return ER::ok(RangeOutcome{*fin, "upper"});
  }

  if (keeps_path_edges(*c1, cp->path())) {
    // shorten the complementary arc, then contract the protected path
    const Path& q = cp->path();
    Direction away =
        successor(*c1, q.front()) == q.at(1) ? Direction::backward : Direction::forward;
    Path ret = segment(*c1, q.front(), q.back(), away);
    if (ret.order() + q.order() != c1->length() + 2)
      return fb("upper range: protected path does not sit as one arc of the cycle");
    VertexSet keep = VertexSet::full(n);
    for (int t = 1; t + 1 < q.order(); ++t) keep.remove(q.at(t));
    Graph g1 = g.restricted_to(keep);
    int lprime = ell - q.length();
    int cap0 = cp->span2_count() + 2 * cp->span3_count();
    int guard = 0;
    while (ret.length() > lprime + cap0) {
      if (++guard > n + 4) return fb("upper range: shortening made no progress");
      auto sh = ret.order() > 4 * alpha
                    ? shorten_path_indep(g1, ret, alpha, params.shorten_budget)
                    : shorten_path_mindeg(g1, ret, params.shorten_budget);
      if (!sh) return fb("upper range: " + sh.error());
      ret = *sh;
    }
    if (ret.length() < lprime) return fb("upper range: shortening overshot the window");
    auto glued = contract_and_glue(g, *cp, ret, ell, "upper range");
    if (!glued) return fb(glued.error());
    return ER::ok(RangeOutcome{*glued, "upper"});
  }

  auto dropped = drop_via_chords(g, *c1, c1->length() - ell, "upper range");
  if (!dropped) return fb(dropped.error());
  return ER::ok(RangeOutcome{*dropped, "upper"});
}

Expected<RangeOutcome> upper_range(const Graph& g, int ell, const PipelineParams& params) {
  return upper_range(g, ell, params, condition_profile(g, params.alpha_budget));
}

namespace detail {

std::optional<int> find_layer_window(const std::vector<int>& sizes, int lo, int hi,
                                     int cap) {
  for (int i = std::max(0, lo); i <= hi; ++i) {
    if (i + 6 >= (int)sizes.size()) break;
    bool ok = true;
    for (int j = i; j <= i + 6 && ok; ++j) ok = sizes[j] >= 1 && sizes[j] <= cap;
    if (ok) return i;
  }
  return std::nullopt;
}

Expected<std::pair<ChordedPath, Path>> layer_branch(const Graph& g, const Path& pinit,
                                                    double frac, double eta, int alpha) {
  auto fail = [](const std::string& m) { return EPair::fail("layer branch: " + m); };
  int n = g.n();
  alpha = std::max(1, alpha);
  if (pinit.order() < 2) return fail("seed path needs at least one edge");
  if (auto bad = validate_path(g, pinit)) return fail(bad->what);
  int x = pinit.front();
  VertexSet pint = pinit.vertex_set(n);
  pint.remove(x);
  pint.remove(pinit.back());
  VertexSet keep = VertexSet::full(n);
  keep -= pint;
  Graph gp = g.restricted_to(keep);

  BfsLayers bl = bfs_layers(g, x, pint);
  std::vector<int> sizes;
  for (const VertexSet& l : bl.layers) sizes.push_back((int)l.count());
  int cap = (int)std::floor((1.0 + eta) * alpha + 1e-9);
  int hi = std::max(3, (int)std::floor(eta * n / alpha + 1e-9));
  auto win = find_layer_window(sizes, 3, hi, cap);
  if (!win) return fail("no run of seven consecutive layers of size at most " + ts(cap));
  int i0 = *win;

  // matchings between consecutive layers, chained across the window
  std::vector<int> fwd(n, -1), bwd(n, -1);
  for (int j = 0; j < 6; ++j) {
    const VertexSet& a = bl.layers[i0 + j];
    const VertexSet& b = bl.layers[i0 + j + 1];
    std::vector<std::pair<int, int>> cross;
    for (int u = a.first(); u != -1; u = a.next(u)) {
      VertexSet nb = g.neighbors(u);
      nb &= b;
      for (int w = nb.first(); w != -1; w = nb.next(w)) cross.emplace_back(u, w);
    }
    Graph layer_pair = Graph::from_edges(n, cross);
    VertexSet both = a;
    both |= b;
    for (auto [ma, mb] : max_matching_in(layer_pair, both)) {
      int u = a.contains(ma) ? ma : mb;
      int w = u == ma ? mb : ma;
      fwd[u] = w;
      bwd[w] = u;
    }
  }

  VertexSet w_all(n);
  std::vector<VertexSet> wj(7, VertexSet(n));
  for (int s = bl.layers[i0].first(); s != -1; s = bl.layers[i0].next(s)) {
    int curv = s;
    bool whole = true;
    for (int j = 0; j < 6 && whole; ++j) {
      curv = fwd[curv];
      whole = curv != -1;
    }
    if (!whole) continue;
    curv = s;
    for (int j = 0; j <= 6; ++j) {
      w_all.add(curv);
      wj[j].add(curv);
      if (j < 6) curv = fwd[curv];
    }
  }
  if (wj[3].empty()) return fail("no complete chain crosses the seven layers");
  VertexSet mid5 = wj[1];
  for (int j = 2; j <= 5; ++j) mid5 |= wj[j];

  auto chain_of = [&](int v) {
    std::vector<int> ch;
    int pos = bl.depth[v] - i0;
    int curv = v;
    for (int t = 0; t < pos; ++t) curv = bwd[curv];
    for (int t = 0; t <= 6; ++t) {
      ch.push_back(curv);
      if (t < 6) curv = fwd[curv];
    }
    return ch;
  };

  std::vector<int> concat;
  VertexSet cset(n);
  std::vector<std::pair<int, int>> chordpos;
  std::vector<int> bounds;
  VertexSet used(n);
  auto mark = [&](int v) {
    if (!w_all.contains(v)) return;
    for (int q : chain_of(v)) used.add(q);
  };
  auto push = [&](int v) {
    concat.push_back(v);
    cset.add(v);
    mark(v);
  };

  // opening triangle centered on the middle layer; if an end lies on the
  // seed path, it leads so the seed prefix can reach it cleanly
  {
    int pu = -1, pv = -1, pw = -1;
    for (int u = wj[3].first(); u != -1 && pu == -1; u = wj[3].next(u)) {
      auto e = find_edge_in(gp, gp.neighbors(u));
      if (!e) continue;
      pu = u;
      pv = e->first;
      pw = e->second;
    }
    if (pu == -1) return fail("no triangle at the middle layer");
    int posv = pinit.position_of(pv), posw = pinit.position_of(pw);
    if (posw != -1 && (posv == -1 || posw < posv)) std::swap(pv, pw);
    push(pv);
    push(pw);
    push(pu);
    chordpos.emplace_back(0, 2);
    bounds.push_back(2);
  }

  int lp = std::max(1, (int)std::floor(frac * n / alpha + 1e-9));
  for (int t = 1; t <= 2 * lp; ++t) {
    int u = concat.back();
    if (!mid5.contains(u))
      return fail("piece " + ts(t) + ": junction left the five inner layers");
    VertexSet freev = w_all;
    freev -= used;
    VertexSet nb = g.neighbors(u);
    nb &= freev;
    int v = nb.first();
    if (v == -1) return fail("piece " + ts(t) + ": no neighbour on a fresh chain");
    auto vch = chain_of(v);
    int vpos = bl.depth[v] - i0;
    std::vector<int> seg{v};
    if (vpos < 3)
      for (int j = vpos + 1; j <= 3; ++j) seg.push_back(vch[j]);
    else
      for (int j = vpos - 1; j >= 3; --j) seg.push_back(vch[j]);
    int w = seg.back();
    VertexSet wpp = freev;
    for (int q : vch) wpp.remove(q);

    // continuation: triangle at w, triangle one step out, or a four-cycle
    std::vector<int> tail;
    int kind = 0;
    VertexSet nw = g.neighbors(w);
    nw &= wpp;
    for (int w1 = nw.first(); w1 != -1 && kind == 0; w1 = nw.next(w1)) {
      VertexSet c2 = g.neighbors(w) & g.neighbors(w1);
      c2 &= wpp;
      for (int w2 = c2.first(); w2 != -1; w2 = c2.next(w2)) {
        if (w2 == w1 || !mid5.contains(w2)) continue;
        tail = {w1, w2};
        kind = 1;
        break;
      }
    }
    for (int w1 = nw.first(); w1 != -1 && kind == 0; w1 = nw.next(w1)) {
      VertexSet n1 = g.neighbors(w1);
      n1 &= wpp;
      for (int w2 = n1.first(); w2 != -1 && kind == 0; w2 = n1.next(w2)) {
        if (w2 == w1) continue;
        VertexSet c3 = g.neighbors(w1) & g.neighbors(w2);
        c3 &= wpp;
        for (int w3 = c3.first(); w3 != -1; w3 = c3.next(w3)) {
          if (w3 == w1 || w3 == w2 || !mid5.contains(w3)) continue;
          tail = {w1, w2, w3};
          kind = 2;
          break;
        }
      }
    }
    for (int w1 = nw.first(); w1 != -1 && kind == 0; w1 = nw.next(w1)) {
      for (int w3 = nw.first(); w3 != -1 && kind == 0; w3 = nw.next(w3)) {
        if (w3 == w1 || !mid5.contains(w3)) continue;
        VertexSet c2 = g.neighbors(w1) & g.neighbors(w3);
        c2 &= wpp;
        for (int w2 = c2.first(); w2 != -1; w2 = c2.next(w2)) {
          if (w2 == w1 || w2 == w3) continue;
          tail = {w1, w2, w3};
          kind = 3;
          break;
        }
      }
    }
    if (kind == 0) return fail("piece " + ts(t) + ": no chorded continuation in fresh chains");

    int base = (int)concat.size();
    for (int q : seg) push(q);
    int wpos = base + (int)seg.size() - 1;
    for (int q : tail) push(q);
    if (kind == 1)
      chordpos.emplace_back(wpos, wpos + 2);
    else if (kind == 2)
      chordpos.emplace_back(wpos + 1, wpos + 3);
    else
      chordpos.emplace_back(wpos, wpos + 3);
    bounds.push_back((int)concat.size() - 1);
  }

  int u0 = concat.front(), ulast = concat.back();
  std::vector<int> q1v;
  {
    VertexSet forb = pint;
    VertexSet rest = cset;
    rest.remove(ulast);
    forb |= rest;
    VertexSet from(n), to(n);
    from.add(x);
    to.add(ulast);
    auto r = bfs_route(g, from, to, forb);
    if (!r) return fail("no connector from the seed front to the last piece");
    q1v = *r;
  }
  std::vector<int> q0v;
  int posu0 = pinit.position_of(u0);
  if (posu0 != -1) {
    for (int t2 = 0; t2 <= posu0; ++t2) q0v.push_back(pinit.at(t2));
  } else {
    VertexSet forb = pint;
    VertexSet rest = cset;
    rest.remove(u0);
    forb |= rest;
    VertexSet from(n), to(n);
    from.add(x);
    to.add(u0);
    auto r = bfs_route(g, from, to, forb);
    if (!r) return fail("no connector from the seed front to the chain start");
    q0v = *r;
  }

  // the connectors may share a prefix; keep only what lies past their last
  // common vertex
  std::set<int> inq1(q1v.begin(), q1v.end());
  int ix = -1;
  for (int t2 = 0; t2 < (int)q0v.size(); ++t2)
    if (inq1.count(q0v[t2])) ix = t2;
  if (ix == -1) return fail("connectors never meet");
  int xp = q0v[ix];
  int iy = -1;
  for (int t2 = 0; t2 < (int)q1v.size(); ++t2)
    if (q1v[t2] == xp) {
      iy = t2;
      break;
    }
  if (iy == -1) return fail("internal: meeting vertex missing from its connector");

  int split = bounds[lp - 1];
  std::vector<int> v0(concat.begin(), concat.begin() + split + 1);
  Path p0path(v0);
  if (auto bad = validate_path(g, p0path))
    return fail("assembled chorded path invalid: " + bad->what);
  std::vector<Chord> cs;
  for (auto [a, b] : chordpos)
    if (b <= split) cs.push_back(chord_on_path(p0path, concat[a], concat[b]));
  if ((int)cs.size() != lp) return fail("internal: chord bookkeeping off the piece count");

  std::vector<int> v1(concat.begin() + split, concat.end());
  for (int t2 = (int)q1v.size() - 2; t2 >= iy; --t2) v1.push_back(q1v[t2]);
  for (int t2 = ix + 1; t2 < (int)q0v.size(); ++t2) v1.push_back(q0v[t2]);
  Path p1(v1);
  if (auto bad = validate_path(g, p1))
    return fail("assembled return path invalid: " + bad->what);

  try {
    ChordedPath p0(p0path, cs);
    return EPair::ok({p0, p1});
  } catch (const std::invalid_argument& e) {
    return fail(std::string("chord family rejected: ") + e.what());
  }
}

Expected<std::pair<ChordedPath, Path>> n_over_alpha_with(const Graph& g,
                                                         const PipelineParams& params,
                                                         double frac,
                                                         const ConditionProfile& profile) {
  int n = g.n(), alpha = std::max(1, profile.alpha);
  if (profile.kappa <= profile.alpha)
    return EPair::fail(
        "n over alpha: connectivity does not exceed the independence number");
  int ktarget = (int)std::floor(frac * n / alpha + 1e-9);
  int k = std::max(1, std::min(ktarget, alpha / 6));
  auto q1 = build_chorded_path(g, k, profile);
  if (!q1) return EPair::fail("n over alpha: " + q1.error());
  const Path& q1p = q1->path();
  int x = q1p.front(), y = q1p.back();

  VertexSet allowed = VertexSet::full(n);
  allowed -= q1p.vertex_set(n);
  allowed.add(y);
  int want = std::max(1, ktarget) + 1;
  auto q2 = find_path_from(g, y, want, allowed, 500000);
  if (!q2)
    return EPair::fail("n over alpha: no attached path of order " + ts(want) +
                       " from the chorded path's end");
  int z = q2->back();
  std::vector<int> pv = q1p.vertices();
  for (int t = 1; t < q2->order(); ++t) pv.push_back(q2->at(t));
  Path pinit(pv);
  if (auto bad = validate_path(g, pinit))
    return EPair::fail("n over alpha: internal: seed path invalid: " + bad->what);

  auto finish = [&](const ChordedPath& p0, const Path& p1) -> EPair {
    bool same = p0.path().front() == p1.front() && p0.path().back() == p1.back();
    bool flip = p0.path().front() == p1.back() && p0.path().back() == p1.front();
    if (!same && !flip)
      return EPair::fail("n over alpha: internal: the two paths do not share ends");
    VertexSet i0 = p0.path().vertex_set(n);
    i0.remove(p0.path().front());
    i0.remove(p0.path().back());
    VertexSet i1 = p1.vertex_set(n);
    i1.remove(p1.front());
    i1.remove(p1.back());
    i0 &= i1;
    if (!i0.empty())
      return EPair::fail("n over alpha: internal: path interiors intersect");
    long long budget = (long long)std::ceil((double)n / alpha - 1e-9);
    long long total = p0.path().length() + p1.length();
    if (total > budget)
      return EPair::fail("n over alpha: the paths total " + ts(total) +
                         ", beyond the length budget " + ts(budget));
    return EPair::ok({p0, p1});
  };

  VertexSet forb = pinit.vertex_set(n);
  forb.remove(x);
  forb.remove(z);
  BfsLayers bl = bfs_layers(g, x, forb);
  double reach = (1.0 - 4.0 * frac) * n / alpha;
  if (z != x && bl.depth[z] >= 0 && (double)bl.depth[z] <= reach + 1e-9) {
    std::vector<int> rp{z};
    int curv = z;
    for (int d = bl.depth[z] - 1; d >= 0; --d) {
      const VertexSet& nb = g.neighbors(curv);
      int nxt = -1;
      for (int w = nb.first(); w != -1; w = nb.next(w))
        if (bl.depth[w] == d) {
          nxt = w;
          break;
        }
      if (nxt == -1) return EPair::fail("n over alpha: internal: layer walk broke");
      rp.push_back(nxt);
      curv = nxt;
    }
    std::vector<int> p1v = q2->vertices();
    for (size_t t = 1; t < rp.size(); ++t) p1v.push_back(rp[t]);
    Path p1(p1v);
    if (auto bad = validate_path(g, p1))
      return EPair::fail("n over alpha: internal: return path invalid: " + bad->what);
    return finish(*q1, p1);
  }

  auto lb = layer_branch(g, pinit, frac, params.eta, alpha);
  if (!lb) return EPair::fail(lb.error());
  return finish(lb->first, lb->second);
}

}  // namespace detail

Expected<std::pair<ChordedPath, Path>> n_over_alpha_paths(const Graph& g,
                                                          const PipelineParams& params,
                                                          const ConditionProfile& profile) {
  return detail::n_over_alpha_with(g, params, params.delta, profile);
}

Expected<std::pair<ChordedPath, Path>> n_over_alpha_paths(const Graph& g,
                                                          const PipelineParams& params) {
  return n_over_alpha_paths(g, params, condition_profile(g, params.alpha_budget));
}

Expected<Path> mid_range_extend(const Graph& g, const Path& p, int r, int alpha,
                                long long search_budget) {
  auto fail = [](const std::string& m) { return EP::fail("mid range: " + m); };
  if (auto bad = validate_path(g, p)) return fail(bad->what);
  if (r < 1 || r > 2 * p.length())
    return fail("growth amount " + ts(r) + " outside [1, " + ts(2 * p.length()) + "]");
  alpha = std::max(1, alpha);
  int n = g.n();
  int clen = r / 2;
  if (clen < 3) return fail("the detour cycle would be shorter than a triangle");

  VertexSet pset = p.vertex_set(n);
  VertexSet off = VertexSet::full(n);
  off -= pset;
  auto aux = find_cycle_or_independent_set(g.restricted_to(off), clen, alpha + 1,
                                           search_budget);
  if (!aux) return fail(aux.error());
  if (aux->independent)
    return fail("found an independent set larger than the independence number off the path");
  if (!aux->cycle) return fail("no detour cycle of length " + ts(clen) + " off the path");
  const OrientedCycle& c = *aux->cycle;

  DisjointPathsResult fan =
      disjoint_paths(g, c.vertex_set(n), pset, clen, VertexSet(n));
  if (fan.cut || (int)fan.paths.size() < clen)
    return fail("only " + ts((long long)fan.paths.size()) +
                " disjoint paths from the detour cycle to the path");
  std::vector<std::vector<int>> q;
  for (const std::vector<int>& raw : fan.paths) q.push_back(skip_to_induced(g, raw));
  std::vector<int> footpos(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    footpos[i] = p.position_of(q[i].back());
    if (footpos[i] == -1) return fail("internal: fan path does not end on the path");
  }
  auto qlen = [&](size_t i) { return (int)q[i].size() - 1; };

  auto try_path = [&](const std::vector<int>& vs) -> std::optional<Path> {
    Path cand(vs);
    if (validate_path(g, cand)) return std::nullopt;
    if (cand.front() != p.front() || cand.back() != p.back()) return std::nullopt;
    if (cand.length() <= p.length() || cand.length() > p.length() + r) return std::nullopt;
    return cand;
  };

  // short fans: ride the detour cycle between two nearby feet
  std::vector<std::pair<int, std::pair<size_t, size_t>>> pairs;
  for (size_t i = 0; i < q.size(); ++i)
    for (size_t j = i + 1; j < q.size(); ++j) {
      if (4 * qlen(i) > r || 4 * qlen(j) > r) continue;
      pairs.push_back({std::abs(footpos[i] - footpos[j]), {i, j}});
    }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& pr : pairs) {
    size_t i = pr.second.first, j = pr.second.second;
    if (footpos[i] > footpos[j]) std::swap(i, j);
    int ci = q[i].front(), cj = q[j].front();
    Path segf = segment(c, ci, cj, Direction::forward);
    Path segb = segment(c, ci, cj, Direction::backward);
    for (int arcpick = 0; arcpick < 2; ++arcpick) {
      const Path& arc =
          (arcpick == 0) == (segf.length() >= segb.length()) ? segf : segb;
      std::vector<int> vs;
      for (int t = 0; t <= footpos[i]; ++t) vs.push_back(p.at(t));
      for (int t = (int)q[i].size() - 2; t >= 0; --t) vs.push_back(q[i][t]);
      for (int t = 1; t < arc.order(); ++t) vs.push_back(arc.at(t));
      for (int t = 1; t < (int)q[j].size(); ++t) vs.push_back(q[j][t]);
      for (int t = footpos[j] + 1; t < p.order(); ++t) vs.push_back(p.at(t));
      if (auto ok = try_path(vs)) return EP::ok(*ok);
    }
  }

  // long fans: hop between two fans through an edge at matched even depths
  int wspan = std::max(1, r / 8);
  int dlo = (r + 7) / 8, dhi = r / 4;
  std::vector<size_t> longs;
  for (size_t i = 0; i < q.size(); ++i)
    if (4 * qlen(i) >= r) longs.push_back(i);
  for (size_t a2 = 0; a2 < longs.size(); ++a2)
    for (size_t b2 = 0; b2 < longs.size(); ++b2) {
      if (a2 == b2) continue;
      size_t i = longs[a2], j = longs[b2];
      if (footpos[i] > footpos[j] || footpos[j] - footpos[i] > wspan) continue;
      for (int di = dlo; di <= dhi; ++di) {
        if (di % 2 || di > qlen(i)) continue;
        int ti = (int)q[i].size() - 1 - di;
        for (int dj = dlo; dj <= dhi; ++dj) {
          if (dj % 2 || dj > qlen(j)) continue;
          int tj = (int)q[j].size() - 1 - dj;
          if (!g.has_edge(q[i][ti], q[j][tj])) continue;
          std::vector<int> vs;
          for (int t = 0; t <= footpos[i]; ++t) vs.push_back(p.at(t));
          for (int t = (int)q[i].size() - 2; t >= ti; --t) vs.push_back(q[i][t]);
          for (int t = tj; t < (int)q[j].size(); ++t) vs.push_back(q[j][t]);
          for (int t = footpos[j] + 1; t < p.order(); ++t) vs.push_back(p.at(t));
          if (auto ok = try_path(vs)) return EP::ok(*ok);
        }
      }
    }
  return fail("no admissible detour found");
}

Expected<RangeOutcome> middle_range(const Graph& g, int ell, const PipelineParams& params,
                                    const ConditionProfile& profile) {
  auto fb = [&](const std::string& why) {
    return range_fallback(g, ell, params, "middle:fallback", why);
  };
  int n = g.n(), alpha = std::max(1, profile.alpha);
  if (ell < 3 || ell > n) return ER::fail("middle range: target outside [3, n]");
  auto built = detail::n_over_alpha_with(g, params, params.eta, profile);
  if (!built) return fb("middle range: " + built.error());
  const ChordedPath& p0 = built->first;
  Path p2 = built->second;
  int lprime = ell - p0.path().length();
  if (lprime < 1) return fb("middle range: the chorded path alone meets the target");
  int capacity = p0.span2_count() + 2 * p0.span3_count();
  int rbase = std::max(1, (int)std::floor(params.eta * n / (2.0 * alpha) + 1e-9));
  int hicap = lprime + std::min(rbase, capacity);
  VertexSet keep = VertexSet::full(n);
  for (int t = 1; t + 1 < p0.path().order(); ++t) keep.remove(p0.path().at(t));
  Graph g1 = g.restricted_to(keep);
  int guard = 0;
  while (p2.length() < lprime) {
    if (++guard > n + 4) return fb("middle range: growth made no progress");
    int reff = std::min({rbase, 2 * p2.length(), hicap - p2.length()});
    if (reff < 1) return fb("middle range: no growth budget left");
    auto grown = mid_range_extend(g1, p2, reff, alpha, params.search_budget);
    if (!grown) return fb("middle range: " + grown.error());
    p2 = *grown;
  }
  auto glued = contract_and_glue(g, p0, p2, ell, "middle range");
  if (!glued) return fb("middle range: " + glued.error());
  return ER::ok(RangeOutcome{*glued, "middle"});
}

Expected<RangeOutcome> middle_range(const Graph& g, int ell, const PipelineParams& params) {
  return middle_range(g, ell, params, condition_profile(g, params.alpha_budget));
}

namespace detail {

Expected<RangeOutcome> lower_dense_route(const Graph& g, int ell,
                                         const PipelineParams& params,
                                         const ConditionProfile& profile) {
  auto fail = [](const std::string& m) { return ER::fail("lower range: " + m); };
  int n = g.n();
  auto oas = odd_anchor_subgraph(g, params.seed, profile);
  if (!oas) return fail(oas.error());
  std::map<std::pair<int, int>, const AnchoredEdge*> by_pair;
  std::vector<std::pair<int, int>> e3, e5;
  for (const AnchoredEdge& ae : oas->edges) {
    std::pair<int, int> key{std::min(ae.a, ae.b), std::max(ae.a, ae.b)};
    by_pair.emplace(key, &ae);
    (ae.anchor.length() == 3 ? e3 : e5).push_back(key);
  }
  int i = (int)e3.size() >= (int)e5.size() ? 3 : 5;
  const auto& ei = i == 3 ? e3 : e5;
  if (ei.empty()) return fail("anchored subgraph has no usable edges");
  Graph host = Graph::from_edges(n, ei);
  int target = ell % 2 == 0 ? ell : ell - i + 2;
  if (target < 4 || target % 2 == 1)
    return fail("no even target length for the anchored search");
  auto ec = find_even_cycle(host, target, params.search_budget);
  if (!ec) return fail(ec.error());
  if (ell % 2 == 0) {
    if (auto bad = validate_cycle(g, *ec))
      return fail("anchored cycle invalid in the graph: " + bad->what);
    return ER::ok(RangeOutcome{*ec, "lower:even"});
  }
  // odd target: reroute one edge the long way around its anchor
  for (int t = 0; t < ec->length(); ++t) {
    int a = ec->at(t), b = successor(*ec, a);
    auto it = by_pair.find({std::min(a, b), std::max(a, b)});
    if (it == by_pair.end()) continue;
    const OrientedCycle& anchor = it->second->anchor;
    Path around = segment(*ec, a, b, Direction::backward);
    Direction da =
        successor(anchor, b) == a ? Direction::backward : Direction::forward;
    Path aw = segment(anchor, b, a, da);
    std::vector<int> vs = around.vertices();
    for (int t2 = 1; t2 + 1 < aw.order(); ++t2) vs.push_back(aw.at(t2));
    auto cyc = mk_cycle(g, vs, "lower range");
    if (!cyc || cyc->length() != ell) continue;
    return ER::ok(RangeOutcome{*cyc, "lower:odd-splice"});
  }
  return fail("no cycle edge carries an anchor for the odd splice");
}

}  // namespace detail

Expected<RangeOutcome> lower_range(const Graph& g, int ell, const PipelineParams& params,
                                   const ConditionProfile& profile) {
  auto fb = [&](const std::string& why) {
    return range_fallback(g, ell, params, "lower:fallback", why);
  };
  int n = g.n(), alpha = std::max(1, profile.alpha);
  if (ell < 3 || ell > n) return ER::fail("lower range: target outside [3, n]");
  if (profile.min_degree <= profile.alpha)
    return ER::fail(
        "lower range: minimum degree does not exceed the independence number");
  if (ell <= 7) {
    auto sc = find_short_cycle(g, ell, profile);
    if (sc)
      return ER::ok(
          RangeOutcome{sc->cycle, sc->fallback ? "lower:short+fallback" : "lower:short"});
    return fb("lower range: " + sc.error());
  }
  if ((double)ell <= (double)n / alpha + 1e-9) {
    auto r = find_cycle_or_independent_set(g, ell, alpha + 1, params.search_budget);
    if (!r) return fb("lower range: " + r.error());
    if (r->cycle) return ER::ok(RangeOutcome{*r->cycle, "lower:ramsey"});
    if (r->independent)
      return ER::fail(
          "lower range: found an independent set larger than the independence number");
    return fb("lower range: neither a cycle nor the impossible independent set inside "
              "the budget");
  }
  auto dense = detail::lower_dense_route(g, ell, params, profile);
  if (dense) return dense;
  return fb(dense.error());
}

Expected<RangeOutcome> lower_range(const Graph& g, int ell, const PipelineParams& params) {
  return lower_range(g, ell, params, condition_profile(g, params.alpha_budget));
}

bool Certificate::pancyclic() const { return (int)cycles.size() == std::max(0, n - 2); }

std::string Certificate::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["alpha"] = profile.alpha;
  j["kappa"] = profile.kappa;
  nlohmann::json jc = nlohmann::json::object();
  for (const auto& [ell, c] : cycles) jc[std::to_string(ell)] = c.vertices();
  j["cycles"] = std::move(jc);
  nlohmann::json jp = nlohmann::json::object();
  for (const auto& [ell, tag] : provenance) jp[std::to_string(ell)] = tag;
  j["provenance"] = std::move(jp);
  j["missing"] = missing;
  return j.dump();
}

Certificate certify_pancyclic(const Graph& g, const PipelineParams& params) {
  Certificate cert;
  cert.n = g.n();
  try {
    cert.profile = condition_profile(g, params.alpha_budget);
  } catch (const BudgetError&) {
    cert.profile.alpha = g.n();
    cert.profile.kappa = 0;
    cert.profile.min_degree = g.n() > 0 ? g.min_degree() : 0;
  }
  int n = cert.n, alpha = std::max(1, cert.profile.alpha);
  auto put = [&](int ell, const OrientedCycle& c, const std::string& tag) {
    if (c.length() != ell) return false;
    if (validate_cycle(g, c)) return false;
    cert.cycles.insert_or_assign(ell, c);
    cert.provenance.insert_or_assign(ell, tag);
    return true;
  };
  auto fallback_fill = [&](int ell, const std::string& tag) {
    auto r = detail::bounded_cycle_search(g, ell, params.fallback_budget);
    return r.status == detail::SearchStatus::found && r.cycle && put(ell, *r.cycle, tag);
  };
  for (int ell = 3; ell <= n; ++ell) {
    bool done = false;
    if (!cert.hypothesis_holds()) {
      done = fallback_fill(ell, "hypothesis-failed:fallback");
    } else if (ell == n) {
      auto h = ce_hamilton(g, cert.profile);
      if (h && put(n, *h, "hamilton:chvatal-erdos"))
        done = true;
      else
        done = fallback_fill(n, "hamilton:fallback");
    } else if ((long long)n >= 4LL * alpha * alpha) {
      done = fallback_fill(ell, "external-theorem fallback");
    } else {
      DispatchWindows w = dispatch_windows(n, alpha, ell, params.delta);
      ER r = (ell <= 7 || w.lower) ? lower_range(g, ell, params, cert.profile)
             : w.upper             ? upper_range(g, ell, params, cert.profile)
                                   : middle_range(g, ell, params, cert.profile);
      if (r && put(ell, r->cycle, r->provenance))
        done = true;
      else
        done = fallback_fill(ell, "fallback");
    }
    if (!done) cert.missing.push_back(ell);
  }
  return cert;
}

}  // namespace pancyclic
