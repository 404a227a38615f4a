#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pancyclic/vertex_set.hpp"

namespace pancyclic {

inline constexpr int kMaxVertices = 4096;

// Simple undirected graph on vertices 0..n-1, immutable after construction.
// Adjacency rows are VertexSets; self-loops and duplicate edges are rejected
// or collapsed at build time, so symmetry and loop-freeness hold throughout.
class Graph {
 public:
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  // n <= 11; bit k of mask is the pair (i,j), i<j, in colex order
  // (0,1),(0,2),(1,2),(0,3),... same order as the graph6 codec.
  static Graph from_edge_mask(int n, uint64_t mask);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph complete_bipartite(int a, int b);
  static Graph petersen();

  int n() const { return n_; }
  long long edge_count() const { return m_; }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  int min_degree() const;

  std::vector<std::pair<int, int>> edges() const;

  // Same vertex id space; keeps only edges with both ends in s.
  Graph restricted_to(const VertexSet& s) const;
  Graph complement() const;

 private:
  void add_edge_unchecked(int u, int v);
  int n_;
  long long m_ = 0;
  std::vector<VertexSet> adj_;
};

// Connected components of g restricted to `within`.
std::vector<VertexSet> components_of(const Graph& g, const VertexSet& within);

}  // namespace pancyclic
