#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pancyclic/graph.hpp"
#include "pancyclic/util.hpp"

namespace pancyclic {

// Simple path: distinct vertices, consecutive pairs meant to be edges of the
// host graph (checked by validate_path, not at construction).
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<int> vs);

  int order() const { return (int)v_.size(); }
  int length() const { return (int)v_.size() - 1; }  // edge count
  int front() const { return v_.front(); }
  int back() const { return v_.back(); }
  int at(int i) const { return v_[i]; }
  const std::vector<int>& vertices() const { return v_; }
  bool contains(int v) const;
  int position_of(int v) const;  // -1 if absent
  Path reversed() const;
  Path subpath(int i, int j) const;  // inclusive positions, i <= j
  VertexSet vertex_set(int n) const;

 private:
  std::vector<int> v_;
};

// Cycle with a direction. Stored rotated so the minimum vertex comes first;
// the traversal direction is kept exactly as constructed.
class OrientedCycle {
 public:
  OrientedCycle() = default;
  explicit OrientedCycle(std::vector<int> vs);

  int length() const { return (int)v_.size(); }
  int at(int i) const { return v_[i]; }
  const std::vector<int>& vertices() const { return v_; }
  int index_of(int v) const;  // -1 if absent
  bool contains(int v) const { return index_of(v) != -1; }
  VertexSet vertex_set(int n) const;
  bool has_cycle_edge(int u, int v) const;
  OrientedCycle reversed() const;

  bool operator==(const OrientedCycle& o) const { return v_ == o.v_; }

 private:
  std::vector<int> v_;
};

// i-th predecessor of u along c's orientation (i = 1 is the immediate one).
int predecessor(const OrientedCycle& c, int u, int i = 1);
int successor(const OrientedCycle& c, int u, int i = 1);

enum class Direction { forward, backward };

// Subpath of c from u to v: forward leaves u toward its successor, backward
// toward its predecessor. u != v.
Path segment(const OrientedCycle& c, int u, int v, Direction dir);

// Edge between vertices at host-path distance 2 or 3; the span and the
// endpoints' positions are fixed against the host at construction.
struct Chord {
  int a = -1, b = -1;      // endpoints, path order (pos_a < pos_b)
  int pos_a = -1, pos_b = -1;
  int span() const { return pos_b - pos_a; }
};

Chord chord_on_path(const Path& p, int a, int b);

// Path plus pairwise non-intersecting span-2/3 chords (disjoint interiors).
class ChordedPath {
 public:
  ChordedPath(Path p, std::vector<Chord> chords);

  const Path& path() const { return path_; }
  const std::vector<Chord>& chords() const { return chords_; }
  int span2_count() const;
  int span3_count() const;

 private:
  Path path_;
  std::vector<Chord> chords_;
};

// Replaces chord subpaths by the chords themselves to drop exactly k_prime
// vertices, using min(floor(k'/2), span3_count) span-3 chords and the rest
// span-2. Fails if k_prime is not reachable from the chord inventory.
Expected<Path> contract_chords(const ChordedPath& cp, int k_prime);

struct CycleViolation {
  std::string what;
};

// nullopt when c is a genuine cycle of g (length >= 3, distinct vertices,
// every consecutive pair plus the wrap edge present).
std::optional<CycleViolation> validate_cycle(const Graph& g, const OrientedCycle& c);
std::optional<CycleViolation> validate_path(const Graph& g, const Path& p);

std::string to_json(const Path& p);
std::string to_json(const OrientedCycle& c);

}  // namespace pancyclic
