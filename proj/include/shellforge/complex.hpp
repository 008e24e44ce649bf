#pragma once

#include <optional>
#include <span>
#include <vector>

#include "shellforge/bits.hpp"
#include "shellforge/graph.hpp"

namespace shellforge {

/// A face of a complex, as a vertex mask. The empty face is mask 0.
using Face = VertexSet;

constexpr int dimension(Face f) noexcept { return popcount(f) - 1; }

/// A set of k-subsets of {0..n-1}. The generated complex (all subsets of
/// facets) is implicit. Facets are kept sorted by mask value.
class Clutter {
 public:
  Clutter() = default;
  /// Throws ArgumentError on wrong-size, out-of-range or repeated facets.
  Clutter(int n, int k, std::vector<Face> facets);

  int vertex_count() const noexcept { return n_; }
  int facet_size() const noexcept { return k_; }
  std::span<const Face> facets() const noexcept { return facets_; }
  std::size_t size() const noexcept { return facets_.size(); }
  bool empty() const noexcept { return facets_.empty(); }

  bool has_facet(Face f) const;
  /// Position of f in facets(), or -1.
  int index_of(Face f) const;

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Face> facets_;
};

/// Ridges of one facet that lie in the complex of its predecessors.
struct RestrictedSet {
  Face facet = 0;
  std::vector<Face> ridges;
};

bool generated_complex_contains(const Clutter& c, Face f);

/// Shelling-step test of candidate `e` against the complex generated by
/// `placed`. Returns the unique minimal new face when e meets that complex
/// in a pure (k-2)-dimensional subcomplex, otherwise nullopt. With nothing
/// placed the step is unconditional and the minimal new face is empty.
std::optional<Face> shelling_step_over(std::span<const Face> placed, Face e);

/// Shelling-step test of e against a nonempty clutter that does not
/// contain e; returns the minimal new face or nullopt.
std::optional<Face> is_shelling_step(const Clutter& c, Face e);

/// Reference route for is_shelling_step: lists every face of e outside the
/// complex and checks that they form an interval [d, e].
std::optional<Face> shelling_step_by_enumeration(const Clutter& c, Face e);

/// Second reference route: the faces of e's boundary that lie in the complex
/// form a pure complex of dimension k-2 (every one sits in a ridge of e
/// that lies in the complex) and at least one ridge is present.
bool shelling_step_is_pure(const Clutter& c, Face e);

RestrictedSet restricted_set(std::span<const Face> prefix, Face f);

/// True iff every facet after the first is a shelling step over its
/// predecessors. Facets must be distinct k-subsets of {0..n-1}.
bool is_shelling_order(std::span<const Face> order, int n, int k);

/// The (n-2)-clutter {V \ e : e in E(g)}.
Clutter clutter_from_graph(const Graph& g);
/// Inverse of clutter_from_graph; requires k = n - 2.
Graph graph_from_clutter(const Clutter& c);

/// One removal in K_n viewed from both sides of the graph/complex dictionary.
struct TransportStep {
  Edge edge;
  Face facet = 0;
  ExposureStatus exposure = ExposureStatus::NotExposed;
  bool shelling_step = false;
  int restricted_size = 0;
};

/// Walks edges as removals from K_n and facets [n] \ e as shelling steps,
/// reporting both sides. Throws InvariantViolation if the sides disagree.
std::vector<TransportStep> transport_removals(int n, std::span<const Edge> edges);

}  // namespace shellforge
