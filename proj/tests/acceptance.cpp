// End-to-end acceptance: ten checks, one verdict line each, nonzero exit on
// any failure. Runs single threaded in a few minutes.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pancyclic/chorded.hpp"
#include "pancyclic/finders.hpp"
#include "pancyclic/generate.hpp"
#include "pancyclic/hunt.hpp"
#include "pancyclic/invariants.hpp"
#include "pancyclic/io.hpp"
#include "pancyclic/oracle.hpp"
#include "pancyclic/paths.hpp"
#include "pancyclic/pipeline.hpp"
#include "pancyclic/rotation.hpp"

using namespace pancyclic;

namespace {

int failures = 0;

void verdict(int idx, const char* name, bool pass, const std::string& detail) {
  printf("criterion %2d %-28s %s  %s\n", idx, name, pass ? "PASS" : "FAIL",
         detail.c_str());
  fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1: every 7-vertex graph with kappa > alpha is pancyclic by the search
//    oracle and fully certified by the pipeline
void c1_exhaustive_seven() {
  auto t0 = std::chrono::steady_clock::now();
  HuntReport rep = hunt(7);
  double el = seconds_since(t0);
  bool pass = rep.graphs_scanned >= (1 << 21) && rep.counterexamples.empty() &&
              rep.disagreements.empty() && el < 600.0;
  char buf[160];
  snprintf(buf, sizeof buf,
           "(scanned %lld, hits %lld, counterexamples %zu, disagreements %zu, %.1fs)",
           rep.graphs_scanned, rep.hypothesis_hits, rep.counterexamples.size(),
           rep.disagreements.size(), el);
  verdict(1, "exhaustive n<=7 scan", pass, buf);
}

// 2: constructive Hamilton cycle on every n<=7 graph with kappa >= alpha
void c2_hamilton() {
  long long hits = 0, stalls = 0, bad = 0;
  for (int n = 3; n <= 7; ++n)
    for_each_graph(n, [&](const Graph& g, uint64_t) {
      int alpha = independence_number(g);
      if (g.min_degree() < alpha) return;  // kappa <= min degree
      int kappa = vertex_connectivity(g);
      if (kappa < alpha) return;
      ++hits;
      ConditionProfile prof{alpha, kappa, g.min_degree()};
      auto h = ce_hamilton(g, prof);
      if (!h)
        ++stalls;
      else if (h->length() != g.n() || validate_cycle(g, *h))
        ++bad;
    });
  char buf[120];
  snprintf(buf, sizeof buf, "(qualifying graphs %lld, stalls %lld, invalid %lld)",
           hits, stalls, bad);
  verdict(2, "hamilton, zero stalls", stalls == 0 && bad == 0 && hits > 0, buf);
}

// 3: chorded path postconditions and the full contraction sweep
void c3_chorded_contract() {
  long long built = 0, viol = 0, skipped = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 30 + (i * 7) % 31;
    auto inst = random_condition_graph(n, ConditionTarget::mindeg_gt_alpha,
                                       0xC3000 + i);
    if (!inst) {
      ++skipped;
      continue;
    }
    const Graph& g = inst->graph;
    int alpha = inst->profile.alpha;
    for (int k = 1; k <= alpha / 6; ++k) {
      auto cp = build_chorded_path(g, k, inst->profile);
      if (!cp) {
        ++viol;
        continue;
      }
      ++built;
      const Path& p = cp->path();
      if (validate_path(g, p) || (int)cp->chords().size() != k ||
          p.order() > 3 * k || cp->span2_count() < 1)
        ++viol;
      for (const Chord& ch : cp->chords())
        if ((ch.span() != 2 && ch.span() != 3) ||
            !g.has_edge(p.at(ch.pos_a), p.at(ch.pos_b)))
          ++viol;
      int cap = cp->span2_count() + 2 * cp->span3_count();
      for (int kp = 0; kp <= std::min(k, cap); ++kp) {
        auto q = contract_chords(*cp, kp);
        if (!q || q->length() != p.length() - kp || validate_path(g, *q) ||
            q->front() != p.front() || q->back() != p.back())
          ++viol;
      }
      if (k > cap) ++viol;  // k chords must cover every k' <= k
    }
  }
  char buf[120];
  snprintf(buf, sizeof buf, "(paths built %lld, violations %lld, unrealized seeds %lld)",
           built, viol, skipped);
  verdict(3, "chorded paths + contraction", viol == 0 && built > 100, buf);
}

// 4: the five rotation constructions on 1000 planted configurations each
void c4_rotations() {
  const char* ids[] = {"rotate-c1", "rotate-c2", "rotate-c3", "rotate-c4",
                       "rotate-c5"};
  long long viol = 0, checked = 0;
  for (const char* id : ids) {
    auto r = lemma_test(id, 1000, 0xC4);
    if (!r) {
      ++viol;
      continue;
    }
    viol += r->violations + r->stalls;  // planted configs must never stall
    checked += r->checked;
  }
  char buf[120];
  snprintf(buf, sizeof buf, "(configs %lld, violations %lld)", checked, viol);
  verdict(4, "rotation length equations", viol == 0 && checked == 5000, buf);
}

// 5: short cycle ladder for every length 3..7 on 500 qualifying graphs
void c5_short_cycles() {
  long long viol = 0, fallback = 0, total = 0, skipped = 0;
  for (int i = 0; i < 500; ++i) {
    int n = 12 + (i * 11) % 49;
    auto inst = random_condition_graph(n, ConditionTarget::mindeg_gt_alpha,
                                       0xC5000 + i);
    if (!inst) {
      ++skipped;
      continue;
    }
    for (int ell = 3; ell <= 7; ++ell) {
      ++total;
      auto sc = find_short_cycle(inst->graph, ell, inst->profile);
      if (!sc || sc->cycle.length() != ell || validate_cycle(inst->graph, sc->cycle))
        ++viol;
      else if (sc->fallback)
        ++fallback;
    }
  }
  char buf[160];
  snprintf(buf, sizeof buf,
           "(lengths tried %lld, violations %lld, lemma-route rate %.3f, unrealized seeds %lld)",
           total, viol, total ? 1.0 - (double)fallback / total : 0.0, skipped);
  verdict(5, "short cycles 3..7", viol == 0 && total >= 2000, buf);
}

// 6: dichotomy never answers neither at the exact ramsey size, and the
//    sharper bound stays below the classical one across the regime
void c6_ramsey() {
  long long neither = 0, errs = 0;
  for (int i = 0; i < 500; ++i) {
    double p = 0.05 + 0.9 * (i % 100) / 99.0;
    Graph g = random_graph(13, p, 0xC6000 + i);
    auto r = find_cycle_or_independent_set(g, 5, 4);
    if (!r) {
      ++errs;
      continue;
    }
    if (r->neither()) ++neither;
    if (r->cycle && (r->cycle->length() != 5 || validate_cycle(g, *r->cycle))) ++errs;
    if (r->independent && r->independent->count() != 4) ++errs;
  }
  long long cross = 0;
  for (int ell = 3; ell <= 50; ++ell)
    for (int s = 3; s <= 50; ++s) {
      RamseyBound kb = ramsey_bound_keevash(ell, s);
      if (kb.in_regime && kb.bound > ramsey_bound_erdos(ell, s)) ++cross;
    }
  char buf[120];
  snprintf(buf, sizeof buf, "(neither %lld, errors %lld, bound crossings %lld)",
           neither, errs, cross);
  verdict(6, "ramsey band at n=13", neither == 0 && errs == 0 && cross == 0, buf);
}

// 7: some window accepts every feasible length across the parameter band
void c7_dispatch() {
  long long gaps = 0, tried = 0;
  for (int alpha = 1; alpha <= 2000; ++alpha) {
    long long nhi = std::min<long long>(2000, 4LL * alpha * alpha);
    for (long long n = alpha; n <= nhi; ++n)
      for (int ell = 3; ell <= n; ++ell) {
        ++tried;
        DispatchWindows w = dispatch_windows(n, alpha, ell, 0.01);
        if (!w.lower && !w.middle && !w.upper) {
          if (gaps == 0)
            printf("  first gap: n=%lld alpha=%d ell=%d\n", n, alpha, ell);
          ++gaps;
        }
      }
  }
  char buf[120];
  snprintf(buf, sizeof buf, "(triples %lld, gaps %lld)", tried, gaps);
  verdict(7, "dispatch totality", gaps == 0, buf);
}

// 8: anchors are 3- or 5-cycles meeting the host exactly in their edge, and
//    the odd splice lands exactly on the target
void c8_odd_anchor() {
  auto r = lemma_test("odd-anchor", 100, 0xC8);
  long long viol = r ? r->violations : 1;
  long long splices = 0, stalls = 0;
  for (int i = 0; i < 100; ++i) {
    int n = 14 + (i * 5) % 27;
    auto inst = random_condition_graph(n, ConditionTarget::mindeg_gt_alpha,
                                       0xC8100 + i);
    if (!inst) continue;
    int ell = 9 + 2 * (i % 4);  // odd targets
    if (ell > inst->graph.n()) continue;
    PipelineParams params;
    auto out = detail::lower_dense_route(inst->graph, ell, params, inst->profile);
    if (!out) {
      ++stalls;
      continue;
    }
    ++splices;
    if (out->cycle.length() != ell || validate_cycle(inst->graph, out->cycle)) ++viol;
  }
  char buf[140];
  snprintf(buf, sizeof buf, "(anchor violations %lld, odd landings %lld, stalls %lld)",
           viol, splices, stalls);
  verdict(8, "odd anchors + splice", viol == 0 && splices > 0, buf);
}

// 9: the DFS oracle and the trace-based counter agree on cycle existence
void c9_oracle_agreement() {
  long long disagree = 0, checked = 0;
  auto compare = [&](const Graph& g) {
    for (int ell = 3; ell <= g.n() && ell <= 8; ++ell) {
      ++checked;
      bool dfs = brute_find_cycle(g, ell).answer == OracleAnswer::found;
      bool trace = count_cycles_trace(g, ell) > 0;
      if (dfs != trace) ++disagree;
    }
  };
  for (int n = 3; n <= 6; ++n)
    for_each_graph(n, [&](const Graph& g, uint64_t) { compare(g); });
  for (int n = 7; n <= 8; ++n)
    for (int i = 0; i < 4096; ++i)
      compare(random_graph(n, 0.05 + 0.9 * (i % 64) / 63.0, 0xC9000 + i));
  char buf[120];
  snprintf(buf, sizeof buf, "(pairs %lld, disagreements %lld)", checked, disagree);
  verdict(9, "two-oracle agreement", disagree == 0 && checked > 100000, buf);
}

// 10: graph6 encode/decode is the identity both ways
void c10_graph6() {
  long long bad = 0, count = 0;
  for (int i = 0; i < 10000; ++i) {
    int n = 1 + (i * 13) % 60;
    Graph g = random_graph(n, (i % 97) / 96.0, 0xCA000 + i);
    ++count;
    std::string s = encode_graph6(g);
    Graph h = decode_graph6(s);
    if (h.n() != g.n() || h.edges() != g.edges() || encode_graph6(h) != s) ++bad;
  }
  for (int n = 1; n <= 5; ++n) {
    uint64_t pairs = (uint64_t)n * (n - 1) / 2;
    for (uint64_t m = 0; m < (1ULL << pairs); ++m) {
      Graph g = Graph::from_edge_mask(n, m);
      ++count;
      std::string s = encode_graph6(g);
      Graph h = decode_graph6(s);
      if (h.n() != g.n() || h.edges() != g.edges() || encode_graph6(h) != s) ++bad;
    }
  }
  char buf[120];
  snprintf(buf, sizeof buf, "(round trips %lld, mismatches %lld)", count, bad);
  verdict(10, "graph6 round trip", bad == 0, buf);
}

}  // namespace

int main(int argc, char** argv) {
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  auto want = [&](int i) { return only == 0 || only == i; };
  auto t0 = std::chrono::steady_clock::now();
  if (want(1)) c1_exhaustive_seven();
  if (want(2)) c2_hamilton();
  if (want(3)) c3_chorded_contract();
  if (want(4)) c4_rotations();
  if (want(5)) c5_short_cycles();
  if (want(6)) c6_ramsey();
  if (want(7)) c7_dispatch();
  if (want(8)) c8_odd_anchor();
  if (want(9)) c9_oracle_agreement();
  if (want(10)) c10_graph6();
  printf("%s (%.1fs total)\n", failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED",
         seconds_since(t0));
  return failures ? 1 : 0;
}
