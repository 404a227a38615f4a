#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace pancyclic {

// Set of vertex ids in [0, n). Word-packed; n fixed at construction.
class VertexSet {
 public:
  VertexSet() : n_(0) {}
  explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.add(v);
    return s;
  }
  static VertexSet of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.add(v);
    return s;
  }
  static VertexSet of(int n, const std::vector<int>& vs) {
    VertexSet s(n);
    for (int v : vs) s.add(v);
    return s;
  }

  int universe() const { return n_; }

  void add(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] |= uint64_t{1} << (v & 63);
  }
  void remove(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }
  bool contains(int v) const {
    if (v < 0 || v >= n_) return false;
    return (w_[v >> 6] >> (v & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  // Smallest element, or -1 when empty.
  int first() const { return next(-1); }
  // Smallest element > after, or -1.
  int next(int after) const {
    int v = after + 1;
    if (v >= n_) return -1;
    int wi = v >> 6;
    uint64_t w = w_[wi] & (~uint64_t{0} << (v & 63));
    while (true) {
      if (w) return (wi << 6) + __builtin_ctzll(w);
      if (++wi >= (int)w_.size()) return -1;
      w = w_[wi];
    }
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v != -1; v = next(v)) out.push_back(v);
    return out;
  }

 private:
  int n_;
  std::vector<uint64_t> w_;
};

}  // namespace pancyclic
