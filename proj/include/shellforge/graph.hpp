#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

#include "shellforge/bits.hpp"

namespace shellforge {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 1;

  Edge() = default;
  /// Accepts the endpoints in either order. Throws ArgumentError on a loop.
  Edge(int a, int b);

  VertexSet mask() const noexcept { return bit(u) | bit(v); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class ExposureStatus { NotExposed, FacetEdge, ProperlyExposed };

std::string_view to_string(ExposureStatus s);

constexpr bool is_exposed(ExposureStatus s) noexcept {
  return s != ExposureStatus::NotExposed;
}

/// Simple undirected graph on {0..n-1}, n <= 64, adjacency as bit rows.
///
/// Graphs are values: every mutator-like operation returns a new graph.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);

  /// Graph whose edges are selected by `bits` from the canonical edge list
  /// of K_n (see canonical_edges). Requires n(n-1)/2 <= 64.
  static Graph from_edge_bits(int n, std::uint64_t bits);

  int order() const noexcept { return n_; }
  VertexSet vertices() const noexcept { return low_bits(n_); }
  std::size_t edge_count() const noexcept;

  bool has_edge(int a, int b) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  /// Neighbor row of v without range checking.
  VertexSet row(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }

  /// All edges in canonical (lexicographic) order.
  std::vector<Edge> edges() const;
  /// Inverse of from_edge_bits.
  std::uint64_t edge_bits() const;

  Graph with_edge(Edge e) const;
  Graph without_edge(Edge e) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Edges of K_n in canonical order: (0,1),(0,2),...,(0,n-1),(1,2),...
std::vector<Edge> canonical_edges(int n);

VertexSet neighborhood(const Graph& g, int v);
bool is_clique(const Graph& g, VertexSet s);
bool is_simplicial_vertex(const Graph& g, int v);

/// Classifies e through the common neighborhood N(u) ∩ N(v).
ExposureStatus exposure_status(const Graph& g, Edge e);

/// Classifies e by enumerating the maximal cliques of g that contain it.
/// Independent of exposure_status; used as its oracle.
ExposureStatus exposure_status_by_cliques(const Graph& g, Edge e);

/// Classifies e = xy by asking whether `pivot` (one endpoint) is a simplicial
/// vertex of the subgraph induced on the other endpoint's neighborhood.
ExposureStatus exposure_status_by_link(const Graph& g, Edge e, int pivot);

/// All maximal cliques of g, each as a vertex set, in increasing mask order.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// Brute force over vertex subsets: no induced cycle of length >= 4.
bool is_chordal_cycles(const Graph& g);
/// Simplicial-vertex elimination.
bool is_chordal(const Graph& g);

/// Simplicial vertices of g as a set.
VertexSet simplicial_vertices(const Graph& g);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original_vertex[i] is the vertex of the source graph relabelled to i.
  std::vector<int> original_vertex;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

int connected_components(const Graph& g);
bool is_cut_edge(const Graph& g, Edge e);

/// True when every edge of h is an edge of g and both share a vertex set.
bool is_spanning_subgraph(const Graph& h, const Graph& g);

}  // namespace shellforge
