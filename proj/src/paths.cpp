#include "pancyclic/paths.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace pancyclic {

Path::Path(std::vector<int> vs) : v_(std::move(vs)) {
  if (v_.empty()) throw std::invalid_argument("path needs at least one vertex");
  std::unordered_set<int> seen(v_.begin(), v_.end());
  if (seen.size() != v_.size()) throw std::invalid_argument("path vertices not distinct");
}

bool Path::contains(int v) const {
  return std::find(v_.begin(), v_.end(), v) != v_.end();
}

int Path::position_of(int v) const {
  auto it = std::find(v_.begin(), v_.end(), v);
  return it == v_.end() ? -1 : (int)(it - v_.begin());
}

Path Path::reversed() const {
  std::vector<int> r(v_.rbegin(), v_.rend());
  return Path(std::move(r));
}

Path Path::subpath(int i, int j) const {
  if (i < 0 || j >= order() || i > j) throw std::invalid_argument("bad subpath range");
  return Path(std::vector<int>(v_.begin() + i, v_.begin() + j + 1));
}

VertexSet Path::vertex_set(int n) const {
  VertexSet s(n);
  for (int v : v_) s.add(v);
  return s;
}

OrientedCycle::OrientedCycle(std::vector<int> vs) : v_(std::move(vs)) {
  if (v_.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::unordered_set<int> seen(v_.begin(), v_.end());
  if (seen.size() != v_.size()) throw std::invalid_argument("cycle vertices not distinct");
  auto mn = std::min_element(v_.begin(), v_.end());
  std::rotate(v_.begin(), mn, v_.end());
}

int OrientedCycle::index_of(int v) const {
  auto it = std::find(v_.begin(), v_.end(), v);
  return it == v_.end() ? -1 : (int)(it - v_.begin());
}

VertexSet OrientedCycle::vertex_set(int n) const {
  VertexSet s(n);
  for (int v : v_) s.add(v);
  return s;
}

bool OrientedCycle::has_cycle_edge(int u, int v) const {
  int i = index_of(u);
  if (i == -1) return false;
  int L = length();
  return v_[(i + 1) % L] == v || v_[(i + L - 1) % L] == v;
}

OrientedCycle OrientedCycle::reversed() const {
  std::vector<int> r(v_.rbegin(), v_.rend());
  return OrientedCycle(std::move(r));
}

int predecessor(const OrientedCycle& c, int u, int i) {
  int pos = c.index_of(u);
  if (pos == -1) throw std::invalid_argument("predecessor: vertex not on cycle");
  int L = c.length();
  int k = ((pos - i) % L + L) % L;
  return c.at(k);
}

int successor(const OrientedCycle& c, int u, int i) {
  int pos = c.index_of(u);
  if (pos == -1) throw std::invalid_argument("successor: vertex not on cycle");
  return c.at((pos + i) % c.length());
}

Path segment(const OrientedCycle& c, int u, int v, Direction dir) {
  if (u == v) throw std::invalid_argument("segment: equal endpoints");
  int pu = c.index_of(u), pv = c.index_of(v);
  if (pu == -1 || pv == -1) throw std::invalid_argument("segment: vertex not on cycle");
  int L = c.length();
  std::vector<int> out;
  int step = dir == Direction::forward ? 1 : L - 1;
  for (int k = pu; ; k = (k + step) % L) {
    out.push_back(c.at(k));
    if (k == pv) break;
  }
  return Path(std::move(out));
}

Chord chord_on_path(const Path& p, int a, int b) {
  Chord c;
  c.pos_a = p.position_of(a);
  c.pos_b = p.position_of(b);
  if (c.pos_a == -1 || c.pos_b == -1) throw std::invalid_argument("chord endpoint off path");
  if (c.pos_a > c.pos_b) std::swap(c.pos_a, c.pos_b);
  c.a = p.at(c.pos_a);
  c.b = p.at(c.pos_b);
  if (c.span() != 2 && c.span() != 3)
    throw std::invalid_argument("chord span must be 2 or 3");
  return c;
}

ChordedPath::ChordedPath(Path p, std::vector<Chord> chords)
    : path_(std::move(p)), chords_(std::move(chords)) {
  std::sort(chords_.begin(), chords_.end(),
            [](const Chord& x, const Chord& y) { return x.pos_a < y.pos_a; });
  for (size_t i = 0; i < chords_.size(); ++i) {
    const Chord& c = chords_[i];
    if (c.pos_a < 0 || c.pos_b >= path_.order() || path_.at(c.pos_a) != c.a ||
        path_.at(c.pos_b) != c.b)
      throw std::invalid_argument("chord does not match host path");
    if (c.span() != 2 && c.span() != 3) throw std::invalid_argument("bad chord span");
    // interiors must not touch: previous chord ends strictly before this one starts
    if (i > 0 && chords_[i - 1].pos_b > c.pos_a)
      throw std::invalid_argument("chords intersect");
  }
}

int ChordedPath::span2_count() const {
  int c = 0;
  for (const Chord& ch : chords_) c += ch.span() == 2;
  return c;
}

int ChordedPath::span3_count() const {
  int c = 0;
  for (const Chord& ch : chords_) c += ch.span() == 3;
  return c;
}

Expected<Path> contract_chords(const ChordedPath& cp, int k_prime) {
  int a = cp.span2_count(), b = cp.span3_count();
  if (k_prime < 0 || k_prime > a + 2 * b)
    return Expected<Path>::fail("contract_chords: k'=" + std::to_string(k_prime) +
                                " outside [0, a+2b]=[0, " + std::to_string(a + 2 * b) + "]");
  int b_used = std::min(k_prime / 2, b);
  int a_used = k_prime - 2 * b_used;
  if (a_used > a)
    return Expected<Path>::fail("contract_chords: k' parity unreachable (a=" +
                                std::to_string(a) + ", b=" + std::to_string(b) + ")");
  // chords are stored sorted by position; take the first a_used span-2 and
  // b_used span-3 chords
  std::vector<char> use(cp.chords().size(), 0);
  int need2 = a_used, need3 = b_used;
  for (size_t i = 0; i < cp.chords().size(); ++i) {
    int s = cp.chords()[i].span();
    if (s == 2 && need2 > 0) use[i] = 1, --need2;
    if (s == 3 && need3 > 0) use[i] = 1, --need3;
  }
  std::vector<int> out;
  size_t ci = 0;
  int pos = 0;
  while (pos < cp.path().order()) {
    out.push_back(cp.path().at(pos));
    while (ci < cp.chords().size() && cp.chords()[ci].pos_a < pos) ++ci;
    if (ci < cp.chords().size() && cp.chords()[ci].pos_a == pos && use[ci]) {
      pos = cp.chords()[ci].pos_b;  // ride the chord; interior dropped
      ++ci;
    } else {
      ++pos;
    }
  }
  return Expected<Path>::ok(Path(std::move(out)));
}

std::optional<CycleViolation> validate_cycle(const Graph& g, const OrientedCycle& c) {
  if (c.length() < 3) return CycleViolation{"cycle shorter than 3"};
  VertexSet seen(g.n());
  for (int v : c.vertices()) {
    if (v < 0 || v >= g.n()) return CycleViolation{"vertex out of range"};
    if (seen.contains(v)) return CycleViolation{"repeated vertex " + std::to_string(v)};
    seen.add(v);
  }
  int L = c.length();
  for (int i = 0; i < L; ++i) {
    int u = c.at(i), v = c.at((i + 1) % L);
    if (!g.has_edge(u, v))
      return CycleViolation{"missing edge " + std::to_string(u) + "-" + std::to_string(v)};
  }
  return std::nullopt;
}

std::optional<CycleViolation> validate_path(const Graph& g, const Path& p) {
  VertexSet seen(g.n());
  for (int v : p.vertices()) {
    if (v < 0 || v >= g.n()) return CycleViolation{"vertex out of range"};
    if (seen.contains(v)) return CycleViolation{"repeated vertex " + std::to_string(v)};
    seen.add(v);
  }
  for (int i = 0; i + 1 < p.order(); ++i)
    if (!g.has_edge(p.at(i), p.at(i + 1)))
      return CycleViolation{"missing edge " + std::to_string(p.at(i)) + "-" +
                            std::to_string(p.at(i + 1))};
  return std::nullopt;
}

std::string to_json(const Path& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < p.order(); ++i) os << (i ? "," : "") << p.at(i);
  os << ']';
  return os.str();
}

std::string to_json(const OrientedCycle& c) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < c.length(); ++i) os << (i ? "," : "") << c.at(i);
  os << ']';
  return os.str();
}

}  // namespace pancyclic
