#include <stdexcept>

#include "doctest.h"
#include "pancyclic/paths.hpp"

using namespace pancyclic;

TEST_CASE("path basics") {
  Path p({3, 1, 4, 0});
  CHECK(p.order() == 4);
  CHECK(p.length() == 3);
  CHECK(p.front() == 3);
  CHECK(p.back() == 0);
  CHECK(p.at(2) == 4);
  Path s = p.subpath(1, 3);
  CHECK(s.order() == 3);
  CHECK(s.front() == 1);
  CHECK(s.back() == 0);
  CHECK_THROWS_AS(p.subpath(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Path({1, 2, 1}), std::invalid_argument);
}

TEST_CASE("cycle rotation invariance") {
  OrientedCycle a({2, 3, 4, 0});
  OrientedCycle b({0, 2, 3, 4});
  CHECK(a == b);
  CHECK(!(a == OrientedCycle({0, 4, 3, 2})));
  CHECK(a.length() == 4);
  CHECK(a.contains(3));
  CHECK(!a.contains(1));
  CHECK(a.has_cycle_edge(4, 0));
  CHECK(a.has_cycle_edge(0, 2));
  CHECK(!a.has_cycle_edge(2, 4));
}

TEST_CASE("cycle navigation") {
  OrientedCycle c({0, 1, 2, 3, 4, 5});
  CHECK(successor(c, 5) == 0);
  CHECK(predecessor(c, 0) == 5);
  CHECK(predecessor(c, 2, 3) == 5);
  CHECK(successor(c, 1, 2) == 3);
  Path fwd = segment(c, 1, 4, Direction::forward);
  CHECK(fwd.order() == 4);
  CHECK(fwd.at(1) == 2);
  Path bwd = segment(c, 1, 4, Direction::backward);
  CHECK(bwd.order() == 4);
  CHECK(bwd.at(1) == 0);
  CHECK_THROWS_AS(segment(c, 1, 1, Direction::forward), std::invalid_argument);
}

TEST_CASE("chords on a path") {
  Path p({0, 1, 2, 3, 4, 5, 6});
  Chord c = chord_on_path(p, 0, 2);
  CHECK(c.span() == 2);
  CHECK(c.pos_a == 0);
  CHECK(c.pos_b == 2);
  Chord d = chord_on_path(p, 6, 3);
  CHECK(d.span() == 3);
  CHECK_THROWS_AS(chord_on_path(p, 0, 9), std::invalid_argument);
}

TEST_CASE("chorded path validation") {
  Path p({0, 1, 2, 3, 4, 5, 6});
  ChordedPath cp(p, {chord_on_path(p, 0, 2), chord_on_path(p, 3, 6)});
  CHECK(cp.span2_count() == 1);
  CHECK(cp.span3_count() == 1);
  // overlapping interiors rejected
  CHECK_THROWS_AS(ChordedPath(p, {chord_on_path(p, 0, 3), chord_on_path(p, 2, 5)}),
                  std::invalid_argument);
  // span outside 2..3 rejected
  CHECK_THROWS_AS(ChordedPath(p, {chord_on_path(p, 0, 4)}), std::invalid_argument);
}

TEST_CASE("contracting chords") {
  Path p({0, 1, 2, 3, 4, 5, 6});
  ChordedPath cp(p, {chord_on_path(p, 0, 2), chord_on_path(p, 3, 6)});
  for (int kp = 0; kp <= 3; ++kp) {
    auto q = contract_chords(cp, kp);
    REQUIRE(q);
    CHECK(q->length() == 6 - kp);
    CHECK(q->front() == 0);
    CHECK(q->back() == 6);
  }
  auto q3 = contract_chords(cp, 3);
  REQUIRE(q3);
  CHECK(q3->at(1) == 2);  // both chords taken: 0,2,3,6
  CHECK(q3->at(2) == 3);
  CHECK(!contract_chords(cp, 4));
  CHECK(!contract_chords(cp, -1));
}

TEST_CASE("validators") {
  Graph g = Graph::cycle(5);
  CHECK(!validate_cycle(g, OrientedCycle({0, 1, 2, 3, 4})));
  CHECK(validate_cycle(g, OrientedCycle({0, 1, 3})));
  CHECK(!validate_path(g, Path({3, 4, 0, 1})));
  CHECK(validate_path(g, Path({0, 2, 4})));
  CHECK(validate_path(Graph(2), Path({0, 1})));
}

TEST_CASE("json rendering") {
  std::string pj = to_json(Path({0, 1}));
  CHECK(pj.find('[') != std::string::npos);
  std::string cj = to_json(OrientedCycle({5, 6, 7}));
  CHECK(cj.find('5') != std::string::npos);
}
