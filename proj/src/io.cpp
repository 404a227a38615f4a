#include "pancyclic/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pancyclic {

namespace {

void append_bits(std::string& out, int& acc, int& nbits, int bit) {
  acc = (acc << 1) | bit;
  if (++nbits == 6) {
    out.push_back(char(acc + 63));
    acc = 0;
    nbits = 0;
  }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(char(((n >> 12) & 63) + 63));
    out.push_back(char(((n >> 6) & 63) + 63));
    out.push_back(char((n & 63) + 63));
  } else {
    throw std::invalid_argument("graph6 encoding beyond supported order");
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) append_bits(out, acc, nbits, g.has_edge(i, j) ? 1 : 0);
  if (nbits > 0) {
    acc <<= (6 - nbits);
    out.push_back(char(acc + 63));
  }
  return out;
}

Graph decode_graph6(const std::string& line) {
  std::string s = line;
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("graph6: empty input");

  size_t pos = 0;
  auto byte = [&](size_t i) -> int {
    unsigned char c = s.at(i);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - 63;
  };

  long long n;
  if ((unsigned char)s[0] == 126) {
    if (s.size() >= 2 && (unsigned char)s[1] == 126)
      throw std::invalid_argument("graph6: 8-byte order form not supported");
    if (s.size() < 4) throw std::invalid_argument("graph6: truncated order");
    n = ((long long)byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = byte(0);
    pos = 1;
  }
  if (n > kMaxVertices) throw std::invalid_argument("graph6: order exceeds cap");

  long long bits = n * (n - 1) / 2;
  long long need = (bits + 5) / 6;
  if ((long long)(s.size() - pos) != need)
    throw std::invalid_argument("graph6: wrong body length");

  std::vector<std::pair<int, int>> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int b = byte(pos + k / 6);
      if ((b >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  // trailing pad bits must be zero
  for (long long t = bits; t < need * 6; ++t) {
    int b = byte(pos + t / 6);
    if ((b >> (5 - t % 6)) & 1) throw std::invalid_argument("graph6: nonzero padding");
  }
  return Graph::from_edges((int)n, edges);
}

Graph read_edge_list(std::istream& in) {
  long long n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing header");
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("edge list: bad order");
  std::vector<std::pair<int, int>> edges;
  edges.reserve((size_t)std::max(0LL, m));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
    edges.emplace_back((int)u, (int)v);
  }
  return Graph::from_edges((int)n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  auto es = g.edges();
  out << g.n() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

std::vector<Graph> load_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

Graph load_graph_file(const std::string& path, const std::string& format) {
  if (format == "graph6") {
    auto gs = load_graph6_file(path);
    if (gs.empty()) throw std::invalid_argument("no graphs in " + path);
    return gs.front();
  }
  if (format == "edgelist" || format == "edges") {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_edge_list(in);
  }
  throw std::invalid_argument("unknown format: " + format);
}

}  // namespace pancyclic
