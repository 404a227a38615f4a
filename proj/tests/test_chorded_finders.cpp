#include "doctest.h"
#include "pancyclic/chorded.hpp"
#include "pancyclic/finders.hpp"
#include "pancyclic/generate.hpp"

using namespace pancyclic;

namespace {

// three parts of size s, all cross edges: alpha = s, min degree = 2s
Graph tripartite(int s) {
  std::vector<std::pair<int, int>> e;
  int n = 3 * s;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / s != v / s) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("chorded path on a dense multipartite graph") {
  Graph g = tripartite(7);
  ConditionProfile prof = condition_profile(g);
  CHECK(prof.alpha == 7);
  CHECK(prof.min_degree == 14);
  auto cp = build_chorded_path(g, 1, prof);
  REQUIRE(cp);
  CHECK(cp->chords().size() == 1);
  CHECK(cp->path().order() <= 3);
  CHECK(cp->span2_count() >= 1);
  CHECK(!validate_path(g, cp->path()));

  auto c = extend_to_short_cycle(g, *cp, 7);
  REQUIRE(c);
  CHECK(c->length() <= 7);
  CHECK(!validate_cycle(g, *c));
}

TEST_CASE("chorded path rejects out-of-range k") {
  Graph g = tripartite(7);
  ConditionProfile prof = condition_profile(g);
  CHECK(!build_chorded_path(g, 0, prof));
  CHECK(!build_chorded_path(g, 2, prof));  // alpha/6 = 1
}

TEST_CASE("short cycles in dense graphs") {
  Graph g = Graph::complete(9);
  ConditionProfile prof = condition_profile(g);
  for (int ell = 3; ell <= 7; ++ell) {
    auto sc = find_short_cycle(g, ell, prof);
    REQUIRE(sc);
    CHECK(sc->cycle.length() == ell);
    CHECK(!validate_cycle(g, sc->cycle));
  }
  CHECK(!find_short_cycle(g, 8, prof));
  CHECK(!find_short_cycle(g, 2, prof));
}

TEST_CASE("ramsey style dichotomy") {
  // C5: has a 5-cycle
  auto r1 = find_cycle_or_independent_set(Graph::cycle(5), 5, 3);
  REQUIRE(r1);
  REQUIRE(r1->cycle);
  CHECK(r1->cycle->length() == 5);
  // triangle-free graph: independent pair instead of a 3-cycle
  auto r2 = find_cycle_or_independent_set(Graph::cycle(5), 3, 2);
  REQUIRE(r2);
  REQUIRE(r2->independent);
  CHECK(r2->independent->count() == 2);
  // empty graph: only the independent side exists
  auto r3 = find_cycle_or_independent_set(Graph(6), 3, 4);
  REQUIRE(r3);
  REQUIRE(r3->independent);
  CHECK(r3->independent->count() == 4);
  // too small for either: honest neither
  auto r4 = find_cycle_or_independent_set(Graph::complete(3), 4, 2);
  REQUIRE(r4);
  CHECK(r4->neither());
}

TEST_CASE("ramsey bounds") {
  CHECK(ramsey_bound_erdos(5, 3) == 25);
  CHECK(ramsey_bound_erdos(3, 2) == 5);
  RamseyBound k54 = ramsey_bound_keevash(5, 4);
  CHECK(k54.bound == 13);
  CHECK(k54.in_regime);
  CHECK(!ramsey_bound_keevash(3, 2).in_regime);  // s too small
  RamseyBound k33 = ramsey_bound_keevash(3, 3);
  CHECK(k33.bound == 5);
}

TEST_CASE("even cycle threshold values") {
  CHECK(even_cycle_threshold(3, 100) == 60000);
  CHECK(even_cycle_threshold(1, 10) == 2000);
}

TEST_CASE("even cycle search") {
  Graph g = Graph::complete(10);
  for (int len = 4; len <= 10; len += 2) {
    auto c = find_even_cycle(g, len);
    REQUIRE(c);
    CHECK(c->length() == len);
    CHECK(!validate_cycle(g, *c));
  }
  CHECK(!find_even_cycle(Graph::cycle(7), 4));
  CHECK(!find_even_cycle(Graph::complete_bipartite(2, 3), 8));
}

TEST_CASE("anchored subgraph on a qualifying graph") {
  auto inst = random_condition_graph(24, ConditionTarget::mindeg_gt_alpha, 5);
  REQUIRE(inst);
  const Graph& g = inst->graph;
  auto oas = odd_anchor_subgraph(g, 17, inst->profile);
  REQUIRE(oas);
  CHECK(!oas->edges.empty());
  for (const AnchoredEdge& ae : oas->edges) {
    bool len_ok = ae.anchor.length() == 3 || ae.anchor.length() == 5;
    CHECK(len_ok);
    CHECK(!validate_cycle(g, ae.anchor));
    CHECK(ae.anchor.has_cycle_edge(ae.a, ae.b));
    CHECK(oas->host.has_edge(ae.a, ae.b));
    VertexSet meet = ae.anchor.vertex_set(g.n());
    meet &= oas->host_vertices;
    CHECK(meet == VertexSet::of(g.n(), {ae.a, ae.b}));
  }
}
