#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "pancyclic/generate.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/io.hpp"

using namespace pancyclic;

TEST_CASE("factories") {
  Graph k5 = Graph::complete(5);
  CHECK(k5.edge_count() == 10);
  CHECK(k5.min_degree() == 4);
  Graph c6 = Graph::cycle(6);
  CHECK(c6.edge_count() == 6);
  CHECK(c6.has_edge(5, 0));
  CHECK(!c6.has_edge(0, 2));
  Graph p4 = Graph::path(4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.min_degree() == 1);
  Graph b = Graph::complete_bipartite(3, 3);
  CHECK(b.edge_count() == 9);
  CHECK(!b.has_edge(0, 1));
  CHECK(b.has_edge(0, 3));
  Graph pet = Graph::petersen();
  CHECK(pet.n() == 10);
  CHECK(pet.edge_count() == 15);
  CHECK(pet.min_degree() == 3);
}

TEST_CASE("edge construction guards") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::cycle(2), std::invalid_argument);
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}});
  CHECK(g.edge_count() == 1);
}

TEST_CASE("edge mask follows colex pair order") {
  Graph t = Graph::from_edge_mask(3, 0b111);
  CHECK(t.edge_count() == 3);
  // bit 1 is the pair (0,2)
  Graph g = Graph::from_edge_mask(3, 0b010);
  CHECK(g.has_edge(0, 2));
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(Graph::from_edge_mask(12, 0), std::invalid_argument);
}

TEST_CASE("restriction and complement") {
  Graph k5 = Graph::complete(5);
  VertexSet s = VertexSet::of(5, {0, 2, 4});
  Graph r = k5.restricted_to(s);
  CHECK(r.n() == 5);
  CHECK(r.edge_count() == 3);
  CHECK(!r.has_edge(0, 1));
  Graph cc = Graph::cycle(5).complement();
  CHECK(cc.edge_count() == 5);
  CHECK(cc.has_edge(0, 2));
  CHECK(!cc.has_edge(0, 1));
}

TEST_CASE("components") {
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}});
  auto comps = components_of(g, VertexSet::full(6));
  CHECK(comps.size() == 3);
  auto sub = components_of(g, VertexSet::of(6, {0, 2, 3, 4}));
  CHECK(sub.size() == 3);  // 0 and 2 split without 1
}

TEST_CASE("graph6 fixed strings") {
  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(encode_graph6(Graph(2)) == "A?");
  CHECK(encode_graph6(Graph::complete(2)) == "A_");
  CHECK(encode_graph6(Graph::complete(5)) == "D~{");
  CHECK(encode_graph6(Graph::cycle(5)) == "Dhc");
  CHECK(decode_graph6("D~{").edge_count() == 10);
  CHECK(decode_graph6(">>graph6<<A_").edge_count() == 1);
}

TEST_CASE("graph6 malformed input") {
  CHECK_THROWS_AS(decode_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(decode_graph6("D~"), std::invalid_argument);
  CHECK_THROWS_AS(decode_graph6("D~{x"), std::invalid_argument);
  CHECK_THROWS_AS(decode_graph6("\x07"), std::invalid_argument);
}

TEST_CASE("graph6 round trip on seeded graphs") {
  for (int i = 0; i < 50; ++i) {
    int n = 1 + i % 40;
    Graph g = random_graph(n, 0.1 + 0.02 * (i % 40), 999 + i);
    std::string s = encode_graph6(g);
    Graph h = decode_graph6(s);
    CHECK(h.n() == g.n());
    CHECK(h.edges() == g.edges());
    CHECK(encode_graph6(h) == s);
  }
}

TEST_CASE("edge list io") {
  Graph g = Graph::petersen();
  std::stringstream ss;
  write_edge_list(ss, g);
  Graph h = read_edge_list(ss);
  CHECK(h.edges() == g.edges());
  std::stringstream bad("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(bad), std::invalid_argument);
}
