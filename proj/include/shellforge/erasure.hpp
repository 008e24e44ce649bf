#pragma once

#include <cstdint>
#include <vector>

#include "shellforge/graph.hpp"

namespace shellforge {

enum class ErasureKind { Facet, Proper };

/// Ordered edge removals starting from `base`.
struct ErasureSequence {
  Graph base;
  std::vector<Edge> edges;

  /// Graph left after removing every edge in order.
  Graph result() const;
  /// Kind of each removal, evaluated at its removal time. Throws ArgumentError
  /// when the sequence is not an erasure sequence.
  std::vector<ErasureKind> kinds() const;
};

/// True iff every edge is (properly, when require_proper) exposed in the
/// graph left by its predecessors. Duplicates and missing edges give false.
bool is_erasure_sequence(const Graph& base, const std::vector<Edge>& seq,
                         bool require_proper = false);

/// First edge of E(g) \ E(h), in canonical order, that is exposed in g.
/// Requires g, h chordal on the same vertex set with E(h) a proper subset.
Edge find_exposed_in_difference(const Graph& g, const Graph& h);

/// Exposed-edge removals turning chordal g into its chordal spanning
/// subgraph h.
ErasureSequence erasure_sequence_between(const Graph& g, const Graph& h);

/// erasure_sequence_between(K_n, h).
ErasureSequence erasure_from_complete(const Graph& h);

/// Removes uniformly random exposed edges from K_n until `target_edges`
/// remain. Deterministic for a fixed seed.
Graph random_chordal(int n, std::size_t target_edges, std::uint64_t seed);

}  // namespace shellforge
