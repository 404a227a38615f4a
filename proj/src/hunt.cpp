#include "pancyclic/hunt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "pancyclic/chorded.hpp"
#include "pancyclic/finders.hpp"
#include "pancyclic/generate.hpp"
#include "pancyclic/io.hpp"
#include "pancyclic/oracle.hpp"
#include "pancyclic/rotation.hpp"

namespace pancyclic {

namespace {

std::string ts(long long v) { return std::to_string(v); }

std::string tag_family(const std::string& tag) {
  auto p = tag.find_first_of(": ");
  return p == std::string::npos ? tag : tag.substr(0, p);
}

void scan_one(const Graph& g, const PipelineParams& params, HuntReport& rep) {
  ++rep.graphs_scanned;
  int alpha = independence_number(g);
  if (g.n() == 0 || g.min_degree() <= alpha) return;  // kappa <= mindeg
  int kappa = vertex_connectivity(g);
  if (kappa <= alpha) return;
  ++rep.hypothesis_hits;

  PancyclicReport oracle = is_pancyclic_brute(g);
  Certificate cert = certify_pancyclic(g, params);
  for (const auto& [ell, tag] : cert.provenance) {
    auto& slot = rep.route_use[tag_family(tag)];
    if (tag.find("fallback") != std::string::npos) ++slot.first;
    ++slot.second;
  }
  bool cert_ok = cert.pancyclic();
  if (cert_ok)
    for (const auto& [ell, c] : cert.cycles)
      if (c.length() != ell || validate_cycle(g, c)) cert_ok = false;
  if (!oracle.all_found() && !oracle.any_unknown())
    rep.counterexamples.push_back(encode_graph6(g));
  else if (oracle.all_found() && !cert_ok)
    rep.disagreements.push_back(encode_graph6(g));
}

}  // namespace

std::string HuntReport::to_json() const {
  nlohmann::json j;
  j["n_range"] = {n_lo, n_hi};
  j["graphs_scanned"] = graphs_scanned;
  j["hypothesis_hits"] = hypothesis_hits;
  j["counterexamples"] = counterexamples;
  j["disagreements"] = disagreements;
  nlohmann::json fr = nlohmann::json::object();
  for (const auto& [fam, cnt] : route_use) {
    nlohmann::json row;
    row["fallback"] = cnt.first;
    row["total"] = cnt.second;
    row["rate"] = cnt.second ? (double)cnt.first / (double)cnt.second : 0.0;
    fr[fam] = row;
  }
  j["fallback_rate"] = fr;
  return j.dump();
}

HuntReport hunt(int n_max, const PipelineParams& params, int jobs) {
  if (n_max < 1 || n_max > 7)
    throw std::invalid_argument("hunt: exhaustive mode covers 1 <= n_max <= 7");
  jobs = std::max(1, jobs);
  HuntReport rep;
  rep.n_lo = 1;
  rep.n_hi = n_max;
  if (jobs == 1) {
    for (int n = 1; n <= n_max; ++n)
      for_each_graph(n, [&](const Graph& g, uint64_t) { scan_one(g, params, rep); });
    return rep;
  }
  std::vector<HuntReport> parts(jobs);
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&, j] {
      for (int n = 1; n <= n_max; ++n)
        for_each_graph(
            n, [&](const Graph& g, uint64_t) { scan_one(g, params, parts[j]); },
            jobs, j);
    });
  for (auto& th : pool) th.join();
  for (const HuntReport& p : parts) {
    rep.graphs_scanned += p.graphs_scanned;
    rep.hypothesis_hits += p.hypothesis_hits;
    rep.counterexamples.insert(rep.counterexamples.end(), p.counterexamples.begin(),
                               p.counterexamples.end());
    rep.disagreements.insert(rep.disagreements.end(), p.disagreements.begin(),
                             p.disagreements.end());
    for (const auto& [fam, cnt] : p.route_use) {
      auto& slot = rep.route_use[fam];
      slot.first += cnt.first;
      slot.second += cnt.second;
    }
  }
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
  std::sort(rep.disagreements.begin(), rep.disagreements.end());
  return rep;
}

HuntReport hunt_file(const std::string& path, const PipelineParams& params) {
  HuntReport rep;
  rep.n_lo = 0;
  rep.n_hi = 0;
  bool first = true;
  for (const Graph& g : load_graph6_file(path)) {
    if (first) {
      rep.n_lo = rep.n_hi = g.n();
      first = false;
    } else {
      rep.n_lo = std::min(rep.n_lo, g.n());
      rep.n_hi = std::max(rep.n_hi, g.n());
    }
    scan_one(g, params, rep);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// lemma tests

namespace {

struct Trial {
  std::mt19937_64 rng;
  LemmaTestResult* res;
  void viol(const std::string& s) {
    ++res->violations;
    note("violation: " + s);
  }
  void stall(const std::string& s) {
    ++res->stalls;
    note("stall: " + s);
  }
  void note(const std::string& s) {
    if (res->notes.size() < 12) res->notes.push_back(s);
  }
  int pick(int lo, int hi) { return lo + (int)(rng() % (uint64_t)(hi - lo + 1)); }
  double unit() { return (double)(rng() >> 11) * 0x1p-53; }
};

Graph planted(int total, std::vector<std::pair<int, int>> must, Trial& t, double noise,
              int noise_cap) {
  for (int j = 1; j < noise_cap; ++j)
    for (int i = 0; i < j; ++i)
      if (t.unit() < noise) must.emplace_back(i, j);
  return Graph::from_edges(total, must);
}

std::vector<std::pair<int, int>> ring_edges(int L) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < L; ++i) e.emplace_back(i, (i + 1) % L);
  return e;
}

std::vector<int> iota_vec(int L) {
  std::vector<int> v(L);
  for (int i = 0; i < L; ++i) v[i] = i;
  return v;
}

std::optional<ConditionInstance> condition_or_note(Trial& t, int n,
                                                   ConditionTarget target) {
  auto inst = random_condition_graph(n, target, t.rng());
  if (!inst) {
    t.note("generator: " + inst.error());
    return std::nullopt;
  }
  return *inst;
}

// greedy non-crossing span-2 chord family along a cycle, earliest end first
int span2_family_size(const Graph& g, const OrientedCycle& c) {
  int len = c.length(), cnt = 0, frontier = 0;
  for (int i = 0; i + 2 < len; ++i) {
    if (i < frontier) continue;
    if (g.has_edge(c.at(i), c.at(i + 2))) {
      ++cnt;
      frontier = i + 2;
    }
  }
  return cnt;
}

void t_path_chords(Trial& t) {
  auto inst = condition_or_note(t, t.pick(30, 60), ConditionTarget::mindeg_gt_alpha);
  if (!inst) return;
  const Graph& g = inst->graph;
  if (inst->profile.alpha < 6) {
    t.note("alpha below 6, no admissible k");
    return;
  }
  int k = t.pick(1, inst->profile.alpha / 6);
  auto cp = build_chorded_path(g, k, inst->profile);
  ++t.res->checked;
  if (!cp) {
    t.stall(cp.error());
    return;
  }
  const Path& p = cp->path();
  if (validate_path(g, p)) t.viol("chorded path is not a path of the graph");
  if ((int)cp->chords().size() != k) t.viol("chord count is not k");
  if (p.order() > 3 * k) t.viol("path order exceeds 3k");
  for (const Chord& ch : cp->chords()) {
    if (ch.span() != 2 && ch.span() != 3) t.viol("chord span outside {2,3}");
    if (!g.has_edge(p.at(ch.pos_a), p.at(ch.pos_b))) t.viol("chord is not an edge");
  }
}

void t_chords_contract(Trial& t) {
  auto inst = condition_or_note(t, t.pick(30, 60), ConditionTarget::mindeg_gt_alpha);
  if (!inst) return;
  const Graph& g = inst->graph;
  if (inst->profile.alpha < 6) {
    t.note("alpha below 6, no admissible k");
    return;
  }
  int k = t.pick(1, inst->profile.alpha / 6);
  auto cp = build_chorded_path(g, k, inst->profile);
  if (!cp) {
    t.stall(cp.error());
    return;
  }
  ++t.res->checked;
  const Path& p = cp->path();
  int capacity = cp->span2_count() + 2 * cp->span3_count();
  for (int kp = 0; kp <= capacity; ++kp) {
    auto q = contract_chords(*cp, kp);
    if (!q) {
      t.viol("contract refused k'=" + ts(kp) + ": " + q.error());
      continue;
    }
    if (q->length() != p.length() - kp) t.viol("contracted length off at k'=" + ts(kp));
    if (validate_path(g, *q)) t.viol("contracted path invalid at k'=" + ts(kp));
    if (q->front() != p.front() || q->back() != p.back())
      t.viol("contracted path moved its ends");
  }
  if (contract_chords(*cp, capacity + 1))
    t.viol("contract accepted k' beyond the chord inventory");
}

void t_rotate_c1(Trial& t) {
  int L = t.pick(4, 40);
  int iu = t.pick(0, L - 1), iv = (iu + t.pick(1, L - 1)) % L;
  int x = L;
  auto must = ring_edges(L);
  must.emplace_back(x, iu);
  must.emplace_back(x, iv);
  must.emplace_back((iu + L - 1) % L, (iv + L - 1) % L);
  Graph g = planted(L + 1, must, t, 0.1, L);
  OrientedCycle c(iota_vec(L));
  ++t.res->checked;
  auto out = rotate_c1(g, c, iu, iv, x);
  if (!out) {
    t.viol("planted config refused: " + out.error());
    return;
  }
  if (out->length() != L + 1) t.viol("length is not |C|+1");
  if (validate_cycle(g, *out)) t.viol("output cycle invalid");
  if (!out->contains(x)) t.viol("x missing from the output");
}

// bridge on ids L..L+b-1, plus the edges each construction demands
struct BridgeJig {
  Graph g;
  OrientedCycle c;
  RotationConfig cfg;
};

BridgeJig bridge_jig(Trial& t, int L, int b, int iu, int iv,
                     const std::vector<std::pair<int, int>>& extra) {
  auto must = ring_edges(L);
  for (int i = 0; i + 1 < b; ++i) must.emplace_back(L + i, L + i + 1);
  must.emplace_back(iv, L);          // v x
  must.emplace_back(iu, L + b - 1);  // u y
  for (auto e : extra) must.push_back(e);
  Graph g = planted(L + b, must, t, 0.08, L);
  RotationConfig cfg;
  cfg.cycle = OrientedCycle(iota_vec(L));
  cfg.u = iu;
  cfg.v = iv;
  std::vector<int> bridge;
  for (int i = 0; i < b; ++i) bridge.push_back(L + i);
  cfg.bridge = Path(bridge);
  return BridgeJig{std::move(g), cfg.cycle, std::move(cfg)};
}

void t_rotate_c2(Trial& t) {
  int L = t.pick(4, 34), b = t.pick(1, 6);
  int iu = t.pick(0, L - 1), iv = (iu + t.pick(1, L - 1)) % L;
  BridgeJig j = bridge_jig(t, L, b, iu, iv,
                           {{(iu + L - 1) % L, (iv + L - 1) % L}});
  ++t.res->checked;
  auto out = rotate_c2(j.g, j.cfg);
  if (!out) {
    t.viol("planted config refused: " + out.error());
    return;
  }
  if (out->length() != L + b) t.viol("length is not |C|+|P|");
  if (validate_cycle(j.g, *out)) t.viol("output cycle invalid");
}

void t_rotate_c3(Trial& t) {
  int L = t.pick(4, 34), b = t.pick(1, 6);
  int iu = t.pick(0, L - 1);
  int fd = t.pick(1, L - 1);
  int iv = (iu + fd) % L;
  BridgeJig j = bridge_jig(t, L, b, iu, iv, {});
  ++t.res->checked;
  auto out = rotate_c3(j.g, j.c, iu, iv, L, L + b - 1, j.cfg.bridge);
  if (!out) {
    t.viol("planted config refused: " + out.error());
    return;
  }
  int dropped = fd - 1;
  if (out->length() != L - dropped + b) t.viol("length is not |C|-|dropped|+|P|");
  if (validate_cycle(j.g, *out)) t.viol("output cycle invalid");
}

void t_rotate_c4(Trial& t) {
  int L = t.pick(8, 34), b = t.pick(1, 6);
  int iu = t.pick(0, L - 1);
  int iv = (iu + t.pick(4, L - 4)) % L;
  BridgeJig j = bridge_jig(t, L, b, iu, iv,
                           {{(iu + L - 1) % L, (iv + L - 3) % L}});
  ++t.res->checked;
  auto out = rotate_c4(j.g, j.cfg);
  if (!out) {
    t.viol("planted config refused: " + out.error());
    return;
  }
  if (out->length() != L - 2 + b) t.viol("length is not |C|-2+|P|");
  if (validate_cycle(j.g, *out)) t.viol("output cycle invalid");
}

void t_rotate_c5(Trial& t) {
  int L = t.pick(8, 34), b = t.pick(1, 6);
  int iu = t.pick(0, L - 1);
  int iv = (iu + t.pick(4, L - 4)) % L;
  BridgeJig j = bridge_jig(t, L, b, iu, iv,
                           {{(iu + L - 3) % L, (iv + L - 3) % L}});
  ++t.res->checked;
  auto out = rotate_c5(j.g, j.cfg);
  if (!out) {
    t.viol("planted config refused: " + out.error());
    return;
  }
  if (out->length() != L - 4 + b) t.viol("length is not |C|-4+|P|");
  if (validate_cycle(j.g, *out)) t.viol("output cycle invalid");
}

int missed_edges(const OrientedCycle& before, const OrientedCycle& after) {
  int missed = 0;
  for (int i = 0; i < before.length(); ++i) {
    int u = before.at(i), v = successor(before, u);
    if (!after.has_cycle_edge(u, v)) ++missed;
  }
  return missed;
}

void t_cycle_extension(Trial& t) {
  auto inst = condition_or_note(t, t.pick(10, 28), ConditionTarget::kappa_gt_alpha);
  if (!inst) return;
  const Graph& g = inst->graph;
  int n = g.n();
  auto sc = find_short_cycle(g, t.pick(3, std::min(6, n - 2)), inst->profile);
  if (!sc) {
    t.note("no starting cycle: " + sc.error());
    return;
  }
  const OrientedCycle& c = sc->cycle;
  VertexSet off = VertexSet::full(n) - c.vertex_set(n);
  if (off.empty()) return;
  std::vector<int> offv = off.to_vector();
  int u = offv[t.pick(0, (int)offv.size() - 1)];
  VertexSet hcomp(n);
  for (const VertexSet& comp : components_of(g, off))
    if (comp.contains(u)) hcomp = comp;
  std::optional<int> avoid;
  if (hcomp.count() >= 2 && t.pick(0, 1)) {
    int v = hcomp.first();
    if (v == u) v = hcomp.next(v);
    avoid = v;
  }
  ++t.res->checked;
  auto out = detail::extend_with_anchor(g, c, u, avoid, inst->profile.alpha);
  if (!out) {
    t.stall(out.error());
    return;
  }
  if (validate_cycle(g, *out)) t.viol("extension invalid");
  if (!out->contains(u)) t.viol("extension dropped u");
  if (out->length() <= c.length()) t.viol("extension did not lengthen the cycle");
  if (avoid && out->contains(*avoid)) t.viol("extension swallowed the avoid vertex");
  if (missed_edges(c, *out) > 2) t.viol("extension missed more than two cycle edges");

  if (hcomp.count() >= 2) {
    int uu = hcomp.first(), vv = hcomp.next(uu);
    auto out2 = extend_into_component(g, c, hcomp, uu, vv);
    if (out2) {
      if (validate_cycle(g, *out2) || !out2->contains(uu) || out2->contains(vv) ||
          out2->length() <= c.length() || missed_edges(c, *out2) > 2)
        t.viol("component extension broke its contract");
    } else {
      t.stall(out2.error());
    }
  }
}

void t_p5_structure(Trial& t) {
  int n = t.pick(4, 9);
  Graph g = random_graph(n, 0.2 + 0.5 * t.unit(), t.rng());
  auto comps = components_of(g, VertexSet::full(n));
  if (comps.empty()) return;
  VertexSet h = comps.front();
  for (const VertexSet& c : comps)
    if (c.count() > h.count()) h = c;
  bool has_p5 = find_path_of_order(g, h, 5).has_value();
  auto st = p5free_structure(g, h);
  ++t.res->checked;
  if (has_p5) {
    if (st) t.viol("accepted a set that carries a five-vertex path");
    return;
  }
  if (!st) {
    t.viol("refused a connected set with no five-vertex path: " + st.error());
    return;
  }
  int cnt = (int)h.count();
  int m = 0;
  for (int u = h.first(); u != -1; u = h.next(u)) {
    VertexSet nb = g.neighbors(u);
    nb &= h;
    for (int v = nb.first(); v != -1; v = nb.next(v))
      if (v > u) ++m;
  }
  if (cnt == 4 && m == 6) {
    if (st->kind != P5Structure::Kind::k4) t.viol("complete four-set not labeled k4");
    return;
  }
  if (st->kind == P5Structure::Kind::k4) t.viol("k4 label on a non-K4 set");
  if (st->kind == P5Structure::Kind::tree) {
    if (m != cnt - 1) t.viol("tree label with wrong edge count");
    return;
  }
  // apex: removing it must leave a forest
  if (!h.contains(st->apex)) t.viol("apex outside the set");
  VertexSet rest = h;
  rest.remove(st->apex);
  int medges = 0, mcomps = (int)components_of(g, rest).size();
  for (int u = rest.first(); u != -1; u = rest.next(u)) {
    VertexSet nb = g.neighbors(u);
    nb &= rest;
    for (int v = nb.first(); v != -1; v = nb.next(v))
      if (v > u) ++medges;
  }
  if (!rest.empty() && medges != (int)rest.count() - mcomps)
    t.viol("apex remainder is not a forest");
}

void t_tree_extension(Trial& t) {
  int L = t.pick(6, 18);
  int type = t.pick(0, 2);
  std::vector<std::pair<int, int>> must = ring_edges(L);
  int sz = 0;
  if (type == 0) {  // star
    sz = 1 + t.pick(1, 4);
    for (int i = 1; i < sz; ++i) must.emplace_back(L, L + i);
  } else if (type == 1) {  // apex over a two-leaf star
    sz = 4;
    int u = L, c = L + 1, l1 = L + 2, l2 = L + 3;
    must.insert(must.end(), {{c, l1}, {c, l2}, {u, c}, {u, l1}, {u, l2}});
  } else {  // complete on four
    sz = 4;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) must.emplace_back(L + i, L + j);
  }
  // each component vertex reaches a consecutive cycle pair plus one more
  for (int i = 0; i < sz; ++i) {
    int w = t.pick(0, L - 1);
    must.emplace_back(L + i, w);
    must.emplace_back(L + i, (w + 1) % L);
    must.emplace_back(L + i, t.pick(0, L - 1));
  }
  Graph g = planted(L + sz, must, t, 0.1, L);
  OrientedCycle c(iota_vec(L));
  VertexSet h(L + sz);
  for (int i = 0; i < sz; ++i) h.add(L + i);
  ++t.res->checked;
  auto out = extend_keeping_forest(g, c, h, 2);
  if (!out) {
    t.stall(out.error());
    return;
  }
  if (validate_cycle(g, *out)) t.viol("extension invalid");
  if (out->length() > c.length() + 4) t.viol("cycle grew by more than four");
  if (type == 0 && !(*out == c)) t.viol("tree component should leave the cycle alone");
  if (type != 0) {
    VertexSet rem = h - out->vertex_set(L + sz);
    if (rem.empty()) t.viol("no remainder kept off the cycle");
    int medges = 0, mcomps = (int)components_of(g, rem).size();
    for (int u = rem.first(); u != -1; u = rem.next(u)) {
      VertexSet nb = g.neighbors(u);
      nb &= rem;
      for (int v = nb.first(); v != -1; v = nb.next(v))
        if (v > u) ++medges;
    }
    if (!rem.empty() && medges != (int)rem.count() - mcomps)
      t.viol("remainder is not a forest");
  }
}

void t_short_cycles(Trial& t) {
  auto inst = condition_or_note(t, t.pick(12, 40), ConditionTarget::mindeg_gt_alpha);
  if (!inst) return;
  const Graph& g = inst->graph;
  for (int ell = 3; ell <= 7 && ell <= g.n(); ++ell) {
    ++t.res->checked;
    auto sc = find_short_cycle(g, ell, inst->profile);
    if (!sc) {
      t.viol("no cycle of length " + ts(ell) + ": " + sc.error());
      continue;
    }
    if (sc->cycle.length() != ell) t.viol("length off at " + ts(ell));
    if (validate_cycle(g, sc->cycle)) t.viol("invalid cycle at " + ts(ell));
    if (sc->fallback) ++t.res->stalls;  // lemma route missed, search rescued
  }
}

void t_odd_anchor(Trial& t) {
  auto inst = condition_or_note(t, t.pick(14, 36), ConditionTarget::mindeg_gt_alpha);
  if (!inst) return;
  const Graph& g = inst->graph;
  int n = g.n();
  auto oas = odd_anchor_subgraph(g, t.rng(), inst->profile);
  ++t.res->checked;
  if (!oas) {
    t.stall(oas.error());
    return;
  }
  for (const AnchoredEdge& ae : oas->edges) {
    int len = ae.anchor.length();
    if (len != 3 && len != 5) t.viol("anchor length outside {3,5}");
    if (validate_cycle(g, ae.anchor)) t.viol("anchor is not a cycle of the graph");
    if (!ae.anchor.has_cycle_edge(ae.a, ae.b)) t.viol("anchor misses its host edge");
    if (!oas->host.has_edge(ae.a, ae.b)) t.viol("host edge absent from host graph");
    VertexSet meet = ae.anchor.vertex_set(n);
    meet &= oas->host_vertices;
    if (meet != VertexSet::of(n, {ae.a, ae.b}))
      t.viol("anchor meets the host set beyond its own edge");
  }
}

void t_mid_range(Trial& t) {
  auto inst = condition_or_note(t, t.pick(24, 44), ConditionTarget::mindeg_gt_alpha);
  if (!inst) return;
  const Graph& g = inst->graph;
  auto p = find_path_of_order(g, VertexSet::full(g.n()), t.pick(5, 11));
  if (!p) {
    t.note("no seed path");
    return;
  }
  int r = 2 * t.pick(3, 5);
  r = std::min(r, 2 * p->length());
  ++t.res->checked;
  auto out = mid_range_extend(g, *p, r, inst->profile.alpha);
  if (!out) {
    t.stall(out.error());
    return;
  }
  if (validate_path(g, *out)) t.viol("extended path invalid");
  if (out->front() != p->front() || out->back() != p->back())
    t.viol("extension moved the ends");
  if (out->length() <= p->length() || out->length() > p->length() + r)
    t.viol("extension left the (l, l+r] window");
}

void t_n_over_alpha(Trial& t) {
  auto inst = condition_or_note(t, t.pick(12, 36), ConditionTarget::kappa_gt_alpha);
  if (!inst) return;
  const Graph& g = inst->graph;
  int n = g.n(), alpha = inst->profile.alpha;
  if (alpha < 6) {
    t.note("alpha below 6, chorded start infeasible");
    return;
  }
  PipelineParams params;
  ++t.res->checked;
  auto pr = n_over_alpha_paths(g, params, inst->profile);
  if (!pr) {
    t.stall(pr.error());
    return;
  }
  const ChordedPath& p0 = pr->first;
  const Path& p1 = pr->second;
  bool same = p0.path().front() == p1.front() && p0.path().back() == p1.back();
  bool flip = p0.path().front() == p1.back() && p0.path().back() == p1.front();
  if (!same && !flip) t.viol("paths do not share their ends");
  VertexSet i0 = p0.path().vertex_set(n);
  i0.remove(p0.path().front());
  i0.remove(p0.path().back());
  VertexSet i1 = p1.vertex_set(n);
  i1.remove(p1.front());
  i1.remove(p1.back());
  if (i0.intersects(i1)) t.viol("interiors intersect");
  long long budget = (long long)std::ceil((double)n / std::max(1, alpha) - 1e-9);
  if (p0.path().length() + p1.length() > budget) t.viol("paths exceed the length budget");
  if (p0.chords().empty()) t.viol("chorded path carries no chords");
  if (validate_path(g, p0.path()) || validate_path(g, p1)) t.viol("paths invalid");
}

void t_shortening(Trial& t) {
  auto inst = condition_or_note(t, t.pick(14, 36), ConditionTarget::mindeg_gt_alpha);
  if (!inst) return;
  const Graph& g = inst->graph;
  int n = g.n();
  auto p = find_path_of_order(g, VertexSet::full(n), std::max(4, (int)(0.6 * n)));
  if (!p) {
    t.note("no seed path");
    return;
  }
  int alpha = inst->profile.alpha;
  int nz = 0, dmin = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 0) {
      ++nz;
      if (dmin == 0 || g.degree(v) < dmin) dmin = g.degree(v);
    }
  int window_mindeg = (int)std::ceil(20.0 * nz / std::max(1, dmin) - 1e-9);
  ++t.res->checked;
  auto s1 = shorten_path_mindeg(g, *p);
  if (s1) {
    if (validate_path(g, *s1)) t.viol("degree shortening produced a non-path");
    if (s1->front() != p->front() || s1->back() != p->back())
      t.viol("degree shortening moved the ends");
    int drop = p->length() - s1->length();
    if (drop < 1 || drop > window_mindeg) t.viol("degree shortening left its window");
  } else {
    t.stall(s1.error());
  }
  if (p->order() > 4 * alpha) {
    int window_ind = (int)std::ceil(20.0 * alpha * alpha / p->order() - 1e-9);
    auto s2 = shorten_path_indep(g, *p, alpha);
    if (s2) {
      int drop = p->length() - s2->length();
      if (validate_path(g, *s2) || s2->front() != p->front() ||
          s2->back() != p->back() || drop < 1 || drop > window_ind)
        t.viol("independence shortening broke its contract");
    } else {
      t.stall(s2.error());
    }
  }
}

void t_length3_remainder(Trial& t) {
  int m = t.pick(12, 30);
  Graph g = Graph::complete(m);
  int rem = t.pick(2, 4);
  int cl = m - rem;
  OrientedCycle c0(iota_vec(cl));
  int ell = t.pick(cl + 1, m);
  PipelineParams params;
  ConditionProfile prof = condition_profile(g);
  ++t.res->checked;
  auto out = length3_remainder(g, c0, ell, params, prof);
  if (!out) {
    t.viol("complete-graph instance failed: " + out.error());
    return;
  }
  if (out->length() != ell) t.viol("landed off the target");
  if (validate_cycle(g, *out)) t.viol("output cycle invalid");
  if (length3_remainder(g, c0, cl, params, prof))
    t.viol("accepted a target equal to the cycle length");
}

void t_lemma_long(Trial& t) {
  auto inst = condition_or_note(t, t.pick(15, 36), ConditionTarget::kappa_gt_alpha);
  if (!inst) return;
  const Graph& g = inst->graph;
  int n = g.n(), alpha = inst->profile.alpha;
  // seed: a triangle laid out as a one-chord path
  std::optional<ChordedPath> p0;
  for (int u = 0; u < n && !p0; ++u)
    if (auto e = find_edge_in(g, g.neighbors(u))) {
      Path base(std::vector<int>{u, e->first, e->second});
      p0 = ChordedPath(base, {chord_on_path(base, u, e->second)});
    }
  if (!p0) {
    t.note("no triangle");
    return;
  }
  int ell = t.pick(4, n);
  auto c0 = extend_to_short_cycle(g, *p0, ell);
  if (!c0) {
    t.note("no short cycle through the seed: " + c0.error());
    return;
  }
  if (c0->length() > ell) {
    t.note("seed cycle already beyond the target");
    return;
  }
  PipelineParams params;
  ++t.res->checked;
  auto c1 = lemma_long(g, *c0, *p0, ell, params, inst->profile);
  if (!c1) {
    t.stall(c1.error());
    return;
  }
  if (validate_cycle(g, *c1)) t.viol("output cycle invalid");
  double cap = (double)ell + (double)n / (params.delta * std::max(1, alpha));
  if ((double)c1->length() > cap + 1e-9) t.viol("length cap violated");
  bool kept = true;
  for (int i = 0; i + 1 < p0->path().order(); ++i)
    if (!c1->has_cycle_edge(p0->path().at(i), p0->path().at(i + 1))) kept = false;
  if (!kept &&
      (double)span2_family_size(g, *c1) + 1e-9 < params.delta * std::max(1, alpha))
    t.viol("neither the protected path nor the chord family survived");
  if (c1->length() < ell) {
    VertexSet off = VertexSet::full(n) - c1->vertex_set(n);
    for (const VertexSet& comp : components_of(g, off))
      if (find_path_of_order(g, comp, 5))
        t.viol("stopped short with a five-vertex path off the cycle");
  }
}

void t_ranges(Trial& t) {
  auto inst = condition_or_note(t, t.pick(10, 26), ConditionTarget::kappa_gt_alpha);
  if (!inst) return;
  const Graph& g = inst->graph;
  int n = g.n(), alpha = inst->profile.alpha;
  PipelineParams params;
  int ell = t.pick(3, n);
  DispatchWindows w = dispatch_windows(n, alpha, ell, params.delta);
  if (!w.lower && !w.middle && !w.upper) {
    t.viol("dispatch gap at n=" + ts(n) + " alpha=" + ts(alpha) + " ell=" + ts(ell));
    return;
  }
  ++t.res->checked;
  Expected<RangeOutcome> r = (ell <= 7 || w.lower)
                                 ? lower_range(g, ell, params, inst->profile)
                             : w.upper ? upper_range(g, ell, params, inst->profile)
                                       : middle_range(g, ell, params, inst->profile);
  if (!r) {
    t.stall(r.error());
  } else {
    if (r->cycle.length() != ell) t.viol("range outcome has the wrong length");
    if (validate_cycle(g, r->cycle)) t.viol("range outcome invalid");
    if (r->provenance.empty()) t.viol("range outcome lacks provenance");
  }

  if (n <= 12) {
    Certificate cert = certify_pancyclic(g, params);
    for (const auto& [l2, c2] : cert.cycles)
      if (c2.length() != l2 || validate_cycle(g, c2))
        t.viol("certificate entry invalid at " + ts(l2));
    for (int l2 : cert.missing)
      if (brute_find_cycle(g, l2).answer == OracleAnswer::found)
        t.viol("certificate missed an existing length " + ts(l2));
  }
}

void t_ce_hamilton(Trial& t) {
  auto inst = condition_or_note(t, t.pick(8, 30), ConditionTarget::kappa_gt_alpha);
  if (!inst) return;
  const Graph& g = inst->graph;
  ++t.res->checked;
  auto h = ce_hamilton(g, inst->profile);
  if (!h) {
    t.viol("stalled on a qualifying graph: " + h.error());
    return;
  }
  if (h->length() != g.n()) t.viol("cycle is not spanning");
  if (validate_cycle(g, *h)) t.viol("cycle invalid");
}

using TestFn = void (*)(Trial&);

const std::vector<std::pair<std::string, TestFn>>& registry() {
  static const std::vector<std::pair<std::string, TestFn>> reg = {
      {"path-chords", t_path_chords},
      {"chords-contract", t_chords_contract},
      {"rotate-c1", t_rotate_c1},
      {"rotate-c2", t_rotate_c2},
      {"rotate-c3", t_rotate_c3},
      {"rotate-c4", t_rotate_c4},
      {"rotate-c5", t_rotate_c5},
      {"cycle-extension", t_cycle_extension},
      {"p5-structure", t_p5_structure},
      {"tree-extension", t_tree_extension},
      {"short-cycles", t_short_cycles},
      {"odd-anchor", t_odd_anchor},
      {"mid-range", t_mid_range},
      {"n-over-alpha", t_n_over_alpha},
      {"shortening-windows", t_shortening},
      {"length3-remainder", t_length3_remainder},
      {"lemma-long", t_lemma_long},
      {"ranges", t_ranges},
      {"ce-hamilton", t_ce_hamilton},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& lemma_test_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::string LemmaTestResult::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["trials"] = trials;
  j["checked"] = checked;
  j["violations"] = violations;
  j["stalls"] = stalls;
  j["notes"] = notes;
  j["pass"] = pass();
  return j.dump();
}

Expected<LemmaTestResult> lemma_test(const std::string& name, long long trials,
                                     uint64_t seed) {
  using E = Expected<LemmaTestResult>;
  TestFn fn = nullptr;
  for (const auto& [id, f] : registry())
    if (id == name) fn = f;
  if (!fn) return E::fail("lemma_test: unknown id '" + name + "'");
  LemmaTestResult res;
  res.name = name;
  res.trials = trials;
  Trial t{std::mt19937_64(seed), &res};
  for (long long i = 0; i < trials; ++i) fn(t);
  return E::ok(std::move(res));
}

}  // namespace pancyclic
