#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace shellforge {

/// A subset of {0..63}, one bit per vertex.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) noexcept { return VertexSet{1} << v; }

constexpr VertexSet low_bits(int n) noexcept {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int popcount(VertexSet s) noexcept { return std::popcount(s); }

constexpr bool contains(VertexSet s, int v) noexcept { return (s >> v) & 1U; }

constexpr bool is_subset(VertexSet a, VertexSet b) noexcept { return (a & ~b) == 0; }

/// Calls fn(v) for every member of s in increasing order.
template <class Fn>
constexpr void for_each_bit(VertexSet s, Fn&& fn) {
  while (s != 0) {
    int v = std::countr_zero(s);
    fn(v);
    s &= s - 1;
  }
}

inline std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  for_each_bit(s, [&](int v) { out.push_back(v); });
  return out;
}

}  // namespace shellforge
