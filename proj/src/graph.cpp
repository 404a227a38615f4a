#include "pancyclic/graph.hpp"

#include <stdexcept>

namespace pancyclic {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph order out of range: " + std::to_string(n));
  adj_.assign(n, VertexSet(n));
}

void Graph::add_edge_unchecked(int u, int v) {
  if (!adj_[u].contains(v)) {
    adj_[u].add(v);
    adj_[v].add(u);
    ++m_;
  }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    g.add_edge_unchecked(u, v);
  }
  return g;
}

Graph Graph::from_edge_mask(int n, uint64_t mask) {
  if (n > 11) throw std::invalid_argument("edge mask form limited to n <= 11");
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1) g.add_edge_unchecked(i, j);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge_unchecked(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge_unchecked(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge_unchecked(v, v + 1);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge_unchecked(u, v);
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge_unchecked(i, (i + 1) % 5);
    g.add_edge_unchecked(i, i + 5);
    g.add_edge_unchecked(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve((size_t)m_);
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
      out.emplace_back(u, v);
  return out;
}

Graph Graph::restricted_to(const VertexSet& s) const {
  Graph g(n_);
  for (int u = s.first(); u != -1; u = s.next(u)) {
    VertexSet row = adj_[u] & s;
    for (int v = row.next(u); v != -1; v = row.next(v)) g.add_edge_unchecked(u, v);
  }
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) g.add_edge_unchecked(u, v);
  return g;
}

std::vector<VertexSet> components_of(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> comps;
  VertexSet left = within;
  while (!left.empty()) {
    int s = left.first();
    VertexSet comp(g.n());
    std::vector<int> stack{s};
    comp.add(s);
    left.remove(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      VertexSet nb = g.neighbors(u) & left;
      for (int v = nb.first(); v != -1; v = nb.next(v)) {
        comp.add(v);
        left.remove(v);
        stack.push_back(v);
      }
    }
    comps.push_back(comp);
  }
  return comps;
}

}  // namespace pancyclic
