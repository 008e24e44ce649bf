#pragma once

// Test-only reference implementations. Each one is written straight from a
// definition and shares no search code with the library.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "shellforge/complex.hpp"
#include "shellforge/graph.hpp"

namespace oracle {

using shellforge::Clutter;
using shellforge::Face;
using shellforge::Graph;

/// Cliques containing both endpoints that no further vertex extends,
/// found by trying every vertex subset.
inline int maximal_cliques_containing(const Graph& g, shellforge::Edge e) {
  const int n = g.order();
  int count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if ((s & e.mask()) != e.mask()) continue;
    bool clique = true;
    for (int a = 0; a < n && clique; ++a) {
      for (int b = a + 1; b < n && clique; ++b) {
        if (((s >> a) & 1) && ((s >> b) & 1) && !g.has_edge(a, b)) clique = false;
      }
    }
    if (!clique) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if ((s >> v) & 1) continue;
      bool joins = true;
      for (int a = 0; a < n && joins; ++a) {
        if (((s >> a) & 1) && !g.has_edge(a, v)) joins = false;
      }
      if (joins) maximal = false;
    }
    if (maximal) ++count;
  }
  return count;
}

/// Intersection of the new facet with the union of earlier ones, by faces:
/// pure of dimension k-2 means every face of f lying in an earlier facet
/// lies in a (k-1)-face of f that lies in an earlier facet, and one exists.
inline bool step_by_definition(const std::vector<Face>& earlier, Face f) {
  if (earlier.empty()) return true;
  auto in_earlier = [&](Face s) {
    return std::any_of(earlier.begin(), earlier.end(), [&](Face g) { return (s & ~g) == 0; });
  };
  std::vector<Face> ridges;
  for (int v = 0; v < 64; ++v) {
    if (((f >> v) & 1) && in_earlier(f & ~(Face{1} << v))) ridges.push_back(f & ~(Face{1} << v));
  }
  if (ridges.empty()) return false;
  for (Face s = f;; s = (s - 1) & f) {
    if (s != f && in_earlier(s)) {
      bool covered = std::any_of(ridges.begin(), ridges.end(), [&](Face r) { return (s & ~r) == 0; });
      if (!covered) return false;
    }
    if (s == 0) break;
  }
  return true;
}

/// Depth-first over orders with no memoization.
inline bool completes(const Clutter& c, std::vector<Face>& order, std::vector<bool>& used) {
  if (order.size() == c.size()) return true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (used[i] || !step_by_definition(order, c.facets()[i])) continue;
    used[i] = true;
    order.push_back(c.facets()[i]);
    if (completes(c, order, used)) return true;
    order.pop_back();
    used[i] = false;
  }
  return false;
}

inline bool shellable(const Clutter& c) {
  std::vector<Face> order;
  std::vector<bool> used(c.size(), false);
  return completes(c, order, used);
}

/// Literal extendability: every partial shelling (enumerated as an order)
/// completes. Exponential; only for a handful of facets.
inline bool extendable_rec(const Clutter& c, std::vector<Face>& order, std::vector<bool>& used) {
  {
    std::vector<Face> copy = order;
    std::vector<bool> used_copy = used;
    if (!completes(c, copy, used_copy)) return false;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (used[i] || !step_by_definition(order, c.facets()[i])) continue;
    used[i] = true;
    order.push_back(c.facets()[i]);
    bool ok = extendable_rec(c, order, used);
    order.pop_back();
    used[i] = false;
    if (!ok) return false;
  }
  return true;
}

inline bool extendably_shellable(const Clutter& c) {
  std::vector<Face> order;
  std::vector<bool> used(c.size(), false);
  return extendable_rec(c, order, used);
}

}  // namespace oracle
