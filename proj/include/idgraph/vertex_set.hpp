#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace idg {

// Hard cap on graph order; adjacency rows fit in two 64-bit words.
inline constexpr int kMaxVertices = 128;

// Set of vertex indices below kMaxVertices. All operations are word-parallel.
// Value type: copy freely, compare cheaply.
struct VertexSet {
  std::array<std::uint64_t, 2> w{0, 0};

  static VertexSet single(int v) {
    VertexSet s;
    s.add(v);
    return s;
  }

  // {0, 1, ..., n-1}
  static VertexSet first_n(int n) {
    VertexSet s;
    if (n >= 64) {
      s.w[0] = ~std::uint64_t{0};
      s.w[1] = (n == 128) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
    } else {
      s.w[0] = (n == 0) ? 0 : ((n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    return s;
  }

  bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
  void add(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void remove(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void toggle(int v) { w[v >> 6] ^= std::uint64_t{1} << (v & 63); }

  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  bool empty() const { return (w[0] | w[1]) == 0; }

  bool intersects(VertexSet o) const { return ((w[0] & o.w[0]) | (w[1] & o.w[1])) != 0; }
  bool contains(VertexSet o) const { return (o.w[0] & ~w[0]) == 0 && (o.w[1] & ~w[1]) == 0; }

  friend VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet{{a.w[0] & b.w[0], a.w[1] & b.w[1]}};
  }
  friend VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet{{a.w[0] | b.w[0], a.w[1] | b.w[1]}};
  }
  friend VertexSet operator^(VertexSet a, VertexSet b) {
    return VertexSet{{a.w[0] ^ b.w[0], a.w[1] ^ b.w[1]}};
  }
  // a \ b
  VertexSet minus(VertexSet o) const { return VertexSet{{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }

  bool operator==(const VertexSet&) const = default;
  // total order as a 128-bit integer, for deterministic tie-breaking
  friend bool operator<(VertexSet a, VertexSet b) {
    return a.w[1] != b.w[1] ? a.w[1] < b.w[1] : a.w[0] < b.w[0];
  }

  // smallest set bit, or -1
  int lowest() const {
    if (w[0]) return std::countr_zero(w[0]);
    if (w[1]) return 64 + std::countr_zero(w[1]);
    return -1;
  }

  // smallest set bit strictly above v, or -1
  int next(int v) const {
    ++v;
    if (v < 64) {
      std::uint64_t m = w[0] >> v;
      if (m) return v + std::countr_zero(m);
      v = 64;
    }
    if (v < 128) {
      std::uint64_t m = w[1] >> (v - 64);
      if (m) return v + std::countr_zero(m);
    }
    return -1;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (int word = 0; word < 2; ++word) {
      std::uint64_t m = w[word];
      while (m) {
        int b = std::countr_zero(m);
        fn(64 * word + b);
        m &= m - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int v) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    });
    out += "}";
    return out;
  }
};

// A△B
inline VertexSet symmetric_difference(VertexSet a, VertexSet b) { return a ^ b; }

}  // namespace idg
