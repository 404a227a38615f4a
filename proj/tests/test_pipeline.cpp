#include <cmath>

#include "doctest.h"
#include "pancyclic/generate.hpp"
#include "pancyclic/oracle.hpp"
#include "pancyclic/pipeline.hpp"

using namespace pancyclic;

TEST_CASE("dispatch windows cover the band") {
  // n=100, alpha=5: lo = max(20, 0.05) = 20, hi = 2000
  DispatchWindows w = dispatch_windows(100, 5, 20, 0.01);
  CHECK(w.lower);
  CHECK(dispatch_windows(100, 5, 21, 0.01).middle);
  CHECK(!dispatch_windows(100, 5, 21, 0.01).lower);
  CHECK(dispatch_windows(100, 5, 100, 0.01).middle);
  // tiny ratio: everything long is upper
  CHECK(dispatch_windows(10, 3, 10, 0.5).upper);
}

TEST_CASE("paths of a given order") {
  auto p = find_path_of_order(Graph::petersen(), VertexSet::full(10), 10);
  REQUIRE(p);
  CHECK(p->order() == 10);
  CHECK(!validate_path(Graph::petersen(), *p));
  CHECK(!find_path_of_order(Graph::path(4), VertexSet::full(4), 5));
  CHECK(!find_path_of_order(Graph(5), VertexSet::full(5), 2));
}

TEST_CASE("path shortening via a chord") {
  // path 0-1-2-3 with the chord 0-2
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
  Path p({0, 1, 2, 3});
  auto s = shorten_path_mindeg(g, p);
  REQUIRE(s);
  CHECK(s->length() == 2);
  CHECK(s->front() == 0);
  CHECK(s->back() == 3);
  // chordless: nothing shorter exists
  CHECK(!shorten_path_mindeg(Graph::path(4), Path({0, 1, 2, 3})));
}

TEST_CASE("path shortening via reversal states") {
  // shortcut appears only after reversing the middle segment:
  // 0-1-2-3-4-5 with extra edges 1-3 (reversal pair) and 2-5? keep it simple:
  // reversal needs edges (v1,v3) and (v2,v4); chord then closes the gap
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                  {1, 3}, {2, 4}, {0, 2}});
  Path p({0, 1, 2, 3, 4, 5});
  auto s = shorten_path_mindeg(g, p);
  REQUIRE(s);
  CHECK(s->length() < 5);
  CHECK(s->front() == 0);
  CHECK(s->back() == 5);
}

TEST_CASE("p5 free structure cases") {
  Graph k4 = Graph::complete(4);
  auto s1 = p5free_structure(k4, VertexSet::full(4));
  REQUIRE(s1);
  CHECK(s1->kind == P5Structure::Kind::k4);

  Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto s2 = p5free_structure(star, VertexSet::full(5));
  REQUIRE(s2);
  CHECK(s2->kind == P5Structure::Kind::tree);

  Graph paw = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  auto s3 = p5free_structure(paw, VertexSet::full(4));
  REQUIRE(s3);
  CHECK(s3->kind == P5Structure::Kind::apex);

  Graph p5 = Graph::path(5);
  CHECK(!p5free_structure(p5, VertexSet::full(5)));
}

TEST_CASE("forest keeping extension") {
  // C8 plus a K4 component, every component vertex tied to pair (2,3) and one more
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 8; ++i) e.emplace_back(i, (i + 1) % 8);
  for (int i = 8; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j) e.emplace_back(i, j);
  for (int i = 8; i < 12; ++i) {
    e.emplace_back(i, 2);
    e.emplace_back(i, 3);
    e.emplace_back(i, 6);
  }
  Graph g = Graph::from_edges(12, e);
  OrientedCycle c({0, 1, 2, 3, 4, 5, 6, 7});
  VertexSet h = VertexSet::of(12, {8, 9, 10, 11});
  auto out = extend_keeping_forest(g, c, h, 2);
  REQUIRE(out);
  CHECK(!validate_cycle(g, *out));
  CHECK(out->length() <= c.length() + 4);
  VertexSet rem = h - out->vertex_set(12);
  CHECK(!rem.empty());
}

TEST_CASE("exact landing from a chord rich cycle") {
  Graph g = Graph::complete(30);
  std::vector<int> v;
  for (int i = 0; i < 26; ++i) v.push_back(i);
  OrientedCycle c0(v);
  PipelineParams params;
  ConditionProfile prof = condition_profile(g);
  for (int ell : {27, 28, 30}) {
    auto out = length3_remainder(g, c0, ell, params, prof);
    REQUIRE(out);
    CHECK(out->length() == ell);
    CHECK(!validate_cycle(g, *out));
  }
  CHECK(!length3_remainder(g, c0, 26, params, prof));
}

TEST_CASE("range drivers on a complete graph") {
  Graph g = Graph::complete(20);
  PipelineParams params;
  ConditionProfile prof = condition_profile(g);
  for (int ell : {3, 5, 7}) {
    auto r = lower_range(g, ell, params, prof);
    REQUIRE(r);
    CHECK(r->cycle.length() == ell);
    CHECK(!validate_cycle(g, r->cycle));
    CHECK(!r->provenance.empty());
  }
  auto m = middle_range(g, 12, params, prof);
  REQUIRE(m);
  CHECK(m->cycle.length() == 12);
  auto u = upper_range(g, 18, params, prof);
  REQUIRE(u);
  CHECK(u->cycle.length() == 18);
}

TEST_CASE("same end paths with bounded total length") {
  // alpha = 7 >= 6 with plenty of connectivity, five parts for slack
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 35; ++u)
    for (int v = u + 1; v < 35; ++v)
      if (u / 7 != v / 7) e.emplace_back(u, v);
  Graph g = Graph::from_edges(35, e);
  ConditionProfile prof = condition_profile(g);
  REQUIRE(prof.kappa > prof.alpha);
  PipelineParams params;
  auto pr = n_over_alpha_paths(g, params, prof);
  REQUIRE(pr);
  const Path& a = pr->first.path();
  const Path& b = pr->second;
  bool same = a.front() == b.front() && a.back() == b.back();
  bool flip = a.front() == b.back() && a.back() == b.front();
  CHECK((same || flip));
  CHECK(a.length() + b.length() <= 5);
  VertexSet ia = a.vertex_set(35);
  ia.remove(a.front());
  ia.remove(a.back());
  VertexSet ib = b.vertex_set(35);
  ib.remove(b.front());
  ib.remove(b.back());
  CHECK(!ia.intersects(ib));
}

TEST_CASE("certificates") {
  Certificate k5 = certify_pancyclic(Graph::complete(5));
  CHECK(k5.pancyclic());
  CHECK(k5.missing.empty());
  CHECK(k5.provenance.at(5) == "hamilton:chvatal-erdos");

  Certificate c5 = certify_pancyclic(Graph::cycle(5));
  CHECK(!c5.hypothesis_holds());
  CHECK(!c5.pancyclic());
  CHECK(c5.cycles.count(5) == 1);
  CHECK(c5.missing == std::vector<int>{3, 4});

  Certificate pet = certify_pancyclic(Graph::petersen());
  CHECK(!pet.pancyclic());
  CHECK(pet.missing == std::vector<int>{3, 4, 7, 10});
  for (int ell : {5, 6, 8, 9}) {
    CHECK(pet.cycles.count(ell) == 1);
    CHECK(pet.cycles.at(ell).length() == ell);
    CHECK(!validate_cycle(Graph::petersen(), pet.cycles.at(ell)));
  }
  std::string j = pet.to_json();
  CHECK(j.find("\"missing\"") != std::string::npos);
}

TEST_CASE("certificates cross checked against the oracle") {
  for (int i = 0; i < 30; ++i) {
    Graph g = random_graph(9, 0.3 + 0.02 * i, 4242 + i);
    Certificate cert = certify_pancyclic(g);
    for (const auto& [ell, c] : cert.cycles) {
      CHECK(c.length() == ell);
      CHECK(!validate_cycle(g, c));
    }
    for (int ell : cert.missing)
      CHECK(brute_find_cycle(g, ell).answer == OracleAnswer::none);
  }
}
