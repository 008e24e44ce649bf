#include "shellforge/erasure.hpp"

#include <random>
#include <string>

#include "shellforge/errors.hpp"

namespace shellforge {

Graph ErasureSequence::result() const {
  Graph g = base;
  for (const Edge& e : edges) g = g.without_edge(e);
  return g;
}

std::vector<ErasureKind> ErasureSequence::kinds() const {
  std::vector<ErasureKind> out;
  out.reserve(edges.size());
  Graph g = base;
  for (const Edge& e : edges) {
    if (!g.has_edge(e)) throw ArgumentError("sequence removes a missing edge");
    ExposureStatus s = exposure_status(g, e);
    if (!is_exposed(s)) throw ArgumentError("sequence removes an edge that is not exposed");
    out.push_back(s == ExposureStatus::ProperlyExposed ? ErasureKind::Proper : ErasureKind::Facet);
    g = g.without_edge(e);
  }
  return out;
}

bool is_erasure_sequence(const Graph& base, const std::vector<Edge>& seq, bool require_proper) {
  Graph g = base;
  for (const Edge& e : seq) {
    if (e.v >= g.order() || !g.has_edge(e)) return false;
    ExposureStatus s = exposure_status(g, e);
    if (require_proper ? s != ExposureStatus::ProperlyExposed : !is_exposed(s)) return false;
    g = g.without_edge(e);
  }
  return true;
}

namespace {

void require_nested_chordal(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) throw ArgumentError("graphs have different vertex sets");
  if (!is_spanning_subgraph(h, g)) throw ArgumentError("second graph is not a subgraph of the first");
  if (!is_chordal(g)) throw ArgumentError("first graph is not chordal");
  if (!is_chordal(h)) throw ArgumentError("second graph is not chordal");
}

// Scan of E(g) \ E(h) without re-validating the preconditions.
Edge first_exposed_outside(const Graph& g, const Graph& h) {
  for (int u = 0; u < g.order(); ++u) {
    VertexSet extra = g.row(u) & ~h.row(u) & ~low_bits(u + 1);
    for (; extra != 0; extra &= extra - 1) {
      int v = std::countr_zero(extra);
      VertexSet common = g.row(u) & g.row(v);
      bool clique = true;
      for (VertexSet r = common; r != 0 && clique;) {
        int w = std::countr_zero(r);
        r &= r - 1;
        clique = is_subset(r, g.row(w));
      }
      if (clique) return Edge(u, v);
    }
  }
  throw InvariantViolation("no exposed edge in the difference of two nested chordal graphs");
}

}  // namespace

Edge find_exposed_in_difference(const Graph& g, const Graph& h) {
  require_nested_chordal(g, h);
  if (g == h) throw ArgumentError("graphs are equal; the difference is empty");
  return first_exposed_outside(g, h);
}

ErasureSequence erasure_sequence_between(const Graph& g, const Graph& h) {
  require_nested_chordal(g, h);
  ErasureSequence seq{g, {}};
  seq.edges.reserve(g.edge_count() - h.edge_count());
  Graph current = g;
  while (!(current == h)) {
    Edge e = first_exposed_outside(current, h);
    seq.edges.push_back(e);
    current = current.without_edge(e);
#ifndef NDEBUG
    if (current.order() <= 12 && !is_chordal_cycles(current)) {
      throw InvariantViolation("exposed-edge removal produced a non-chordal graph");
    }
#endif
  }
  return seq;
}

ErasureSequence erasure_from_complete(const Graph& h) {
  if (!is_chordal(h)) throw ArgumentError("graph is not chordal");
  return erasure_sequence_between(Graph::complete(h.order()), h);
}

Graph random_chordal(int n, std::size_t target_edges, std::uint64_t seed) {
  const auto total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  if (target_edges > total) {
    throw ArgumentError("target of " + std::to_string(target_edges) + " edges exceeds K_" +
                        std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  Graph g = Graph::complete(n);
  std::vector<Edge> exposed;
  while (g.edge_count() > target_edges) {
    exposed.clear();
    for (const Edge& e : g.edges()) {
      if (is_exposed(exposure_status(g, e))) exposed.push_back(e);
    }
    if (exposed.empty()) throw InvariantViolation("chordal graph with edges has no exposed edge");
    // Plain modulo keeps the stream identical across standard libraries.
    g = g.without_edge(exposed[rng() % exposed.size()]);
  }
  return g;
}

}  // namespace shellforge
