#include "doctest.h"
#include "pancyclic/generate.hpp"
#include "pancyclic/invariants.hpp"
#include "pancyclic/util.hpp"

using namespace pancyclic;

TEST_CASE("independence number anchors") {
  CHECK(independence_number(Graph::complete(5)) == 1);
  CHECK(independence_number(Graph::cycle(5)) == 2);
  CHECK(independence_number(Graph::cycle(6)) == 3);
  CHECK(independence_number(Graph::petersen()) == 4);
  CHECK(independence_number(Graph::complete_bipartite(3, 4)) == 4);
  CHECK(independence_number(Graph(6)) == 6);
}

TEST_CASE("independence set membership") {
  Graph g = Graph::petersen();
  VertexSet s = max_independent_set_in(g, VertexSet::full(10));
  CHECK(s.count() == 4);
  for (int u = s.first(); u != -1; u = s.next(u))
    for (int v = s.next(u); v != -1; v = s.next(v)) CHECK(!g.has_edge(u, v));
  VertexSet half = VertexSet::of(10, {0, 1, 2, 3, 4});  // outer 5-cycle
  CHECK(max_independent_set_in(g, half).count() == 2);
}

TEST_CASE("independence budget") {
  Graph g = random_graph(40, 0.2, 11);
  CHECK_THROWS_AS(independence_number(g, 3), BudgetError);
}

TEST_CASE("vertex connectivity anchors") {
  CHECK(vertex_connectivity(Graph::complete(5)) == 4);
  CHECK(vertex_connectivity(Graph::complete(1)) == 0);
  CHECK(vertex_connectivity(Graph::cycle(7)) == 2);
  CHECK(vertex_connectivity(Graph::path(5)) == 1);
  CHECK(vertex_connectivity(Graph::petersen()) == 3);
  CHECK(vertex_connectivity(Graph::complete_bipartite(3, 3)) == 3);
  CHECK(vertex_connectivity(Graph::from_edges(5, {{0, 1}, {2, 3}})) == 0);
}

TEST_CASE("condition profile") {
  ConditionProfile p = condition_profile(Graph::petersen());
  CHECK(p.alpha == 4);
  CHECK(p.kappa == 3);
  CHECK(p.min_degree == 3);
  ConditionProfile q = condition_profile(Graph::complete(7));
  CHECK(q.kappa > q.alpha);
}

TEST_CASE("bfs layers") {
  BfsLayers l = bfs_layers(Graph::petersen(), 0);
  CHECK(l.layers.size() == 3);
  CHECK(l.layers[1].count() == 3);
  CHECK(l.layers[2].count() == 6);
  VertexSet forb = VertexSet::of(10, {5});
  BfsLayers lf = bfs_layers(Graph::petersen(), 0, forb);
  CHECK(lf.depth[5] == -1);
}

TEST_CASE("disjoint paths fan") {
  Graph g = Graph::petersen();
  VertexSet a = VertexSet::of(10, {0});
  VertexSet b = VertexSet::of(10, {7, 8, 9});
  auto r = disjoint_paths(g, a, b, 3, VertexSet(10));
  CHECK(r.paths.size() == 3);
  CHECK(!r.cut);
  VertexSet seen(10);
  for (const auto& p : r.paths) {
    CHECK(p.front() == 0);
    CHECK(b.contains(p.back()));
    for (size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.has_edge(p[i], p[i + 1]));
    for (size_t i = 1; i + 1 < p.size(); ++i) {
      CHECK(!seen.contains(p[i]));
      seen.add(p[i]);
    }
  }
}

TEST_CASE("disjoint paths cut certificate") {
  // two triangles joined by one vertex
  Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}, {5, 6}});
  auto r = disjoint_paths(g, VertexSet::of(7, {0}), VertexSet::of(7, {6}), 2, VertexSet(7));
  CHECK(r.paths.size() < 2);
  REQUIRE(r.cut);
  CHECK(r.cut->count() < 2);
}

TEST_CASE("matching") {
  auto m1 = max_matching_in(Graph::cycle(9), VertexSet::full(9));
  CHECK(m1.size() == 4);
  auto m2 = max_matching_in(Graph::petersen(), VertexSet::full(10));
  CHECK(m2.size() == 5);
  // blossom case: odd cycle plus a pendant reaching perfect matching
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
  auto m3 = max_matching_in(g, VertexSet::full(6));
  CHECK(m3.size() == 3);
}

TEST_CASE("find edge in set") {
  Graph g = Graph::cycle(6);
  auto e = find_edge_in(g, VertexSet::of(6, {1, 3, 4}));
  REQUIRE(e);
  CHECK(e->first == 3);
  CHECK(e->second == 4);
  CHECK(!find_edge_in(g, VertexSet::of(6, {0, 2, 4})));
}
