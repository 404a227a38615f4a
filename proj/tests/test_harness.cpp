#include <stdexcept>

#include "doctest.h"
#include "pancyclic/generate.hpp"
#include "pancyclic/hunt.hpp"
#include "pancyclic/io.hpp"
#include "pancyclic/oracle.hpp"

using namespace pancyclic;

TEST_CASE("brute cycle finder") {
  CHECK(brute_find_cycle(Graph::cycle(6), 6).answer == OracleAnswer::found);
  CHECK(brute_find_cycle(Graph::cycle(6), 5).answer == OracleAnswer::none);
  CHECK(brute_find_cycle(Graph::cycle(6), 3).answer == OracleAnswer::none);
  auto r5 = brute_find_cycle(Graph::petersen(), 5);
  REQUIRE(r5.answer == OracleAnswer::found);
  REQUIRE(r5.cycle);
  CHECK(r5.cycle->length() == 5);
  CHECK(!validate_cycle(Graph::petersen(), *r5.cycle));
  CHECK(brute_find_cycle(Graph::petersen(), 10).answer == OracleAnswer::none);
  CHECK(brute_find_cycle(Graph::complete(6), 2).answer == OracleAnswer::none);
  // starved budget gives unknown, not none
  CHECK(brute_find_cycle(Graph::petersen(), 10, 3).answer == OracleAnswer::unknown);
}

TEST_CASE("pancyclicity report") {
  PancyclicReport k5 = is_pancyclic_brute(Graph::complete(5));
  CHECK(k5.all_found());
  CHECK(!k5.any_unknown());
  PancyclicReport c6 = is_pancyclic_brute(Graph::cycle(6));
  CHECK(!c6.all_found());
  CHECK(c6.per_length.at(6) == OracleAnswer::found);
  CHECK(c6.per_length.at(4) == OracleAnswer::none);
  PancyclicReport b = is_pancyclic_brute(Graph::complete_bipartite(3, 3));
  CHECK(b.per_length.at(4) == OracleAnswer::found);
  CHECK(b.per_length.at(6) == OracleAnswer::found);
  CHECK(b.per_length.at(3) == OracleAnswer::none);
  CHECK(b.per_length.at(5) == OracleAnswer::none);
}

TEST_CASE("trace based cycle counts") {
  CHECK(count_cycles_trace(Graph::complete(5), 3) == 10);
  CHECK(count_cycles_trace(Graph::complete(5), 4) == 15);
  CHECK(count_cycles_trace(Graph::complete(5), 5) == 12);
  CHECK(count_cycles_trace(Graph::cycle(6), 6) == 1);
  CHECK(count_cycles_trace(Graph::cycle(6), 4) == 0);
  CHECK(count_cycles_trace(Graph::complete_bipartite(3, 3), 4) == 9);
  CHECK(count_cycles_trace(Graph::complete_bipartite(3, 3), 5) == 0);
  CHECK(count_cycles_trace(Graph::complete_bipartite(3, 3), 6) == 6);
  CHECK(count_cycles_trace(Graph::petersen(), 5) == 12);
  CHECK(count_cycles_trace(Graph::petersen(), 6) == 10);
}

TEST_CASE("exhaustive enumeration") {
  long long c3 = 0, c4 = 0;
  for_each_graph(3, [&](const Graph&, uint64_t) { ++c3; });
  for_each_graph(4, [&](const Graph&, uint64_t) { ++c4; });
  CHECK(c3 == 8);
  CHECK(c4 == 64);
  // shards partition the stream
  long long sharded = 0;
  for (int s = 0; s < 3; ++s)
    for_each_graph(4, [&](const Graph&, uint64_t) { ++sharded; }, 3, s);
  CHECK(sharded == 64);
  CHECK_THROWS_AS(for_each_graph(8, [](const Graph&, uint64_t) {}),
                  std::invalid_argument);
}

TEST_CASE("seeded generators are reproducible") {
  Graph a = random_graph(12, 0.4, 99);
  Graph b = random_graph(12, 0.4, 99);
  CHECK(a.edges() == b.edges());
  auto i1 = random_condition_graph(18, ConditionTarget::kappa_gt_alpha, 3);
  auto i2 = random_condition_graph(18, ConditionTarget::kappa_gt_alpha, 3);
  REQUIRE(i1);
  REQUIRE(i2);
  CHECK(i1->graph.edges() == i2->graph.edges());
  CHECK(i1->profile.kappa > i1->profile.alpha);
  auto j = random_condition_graph(20, ConditionTarget::mindeg_gt_alpha, 4);
  REQUIRE(j);
  CHECK(j->profile.min_degree > j->profile.alpha);
  // impossible at n=2: kappa <= 1 <= alpha always
  CHECK(!random_condition_graph(2, ConditionTarget::kappa_gt_alpha, 1, 20));
}

TEST_CASE("hunt scans clean through n=5") {
  HuntReport rep = hunt(5);
  CHECK(rep.graphs_scanned == 1 + 2 + 8 + 64 + 1024);
  CHECK(rep.hypothesis_hits > 0);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.disagreements.empty());
  std::string j = rep.to_json();
  CHECK(j.find("fallback_rate") != std::string::npos);
}

TEST_CASE("hunt from a graph6 corpus") {
  std::string path = "/tmp/hunt_corpus.g6";
  {
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f);
    fprintf(f, "%s\n%s\n", encode_graph6(Graph::complete_bipartite(3, 3)).c_str(),
            encode_graph6(Graph::complete(5)).c_str());
    fclose(f);
  }
  HuntReport rep = hunt_file(path);
  CHECK(rep.graphs_scanned == 2);
  CHECK(rep.hypothesis_hits == 1);  // kappa = alpha excludes K33
  CHECK(rep.counterexamples.empty());
  CHECK(rep.disagreements.empty());
}

TEST_CASE("lemma registry") {
  CHECK(lemma_test_names().size() == 19);
  CHECK(!lemma_test("no-such-lemma", 1, 1));
  auto r = lemma_test("rotate-c1", 25, 7);
  REQUIRE(r);
  CHECK(r->pass());
  CHECK(r->checked == 25);
  CHECK(!r->to_json().empty());
}
