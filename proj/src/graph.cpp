#include "shellforge/graph.hpp"

#include <algorithm>
#include <string>

#include "shellforge/errors.hpp"

namespace shellforge {

Edge::Edge(int a, int b) {
  if (a == b) throw ArgumentError("edge endpoints must differ: " + std::to_string(a));
  if (a < 0 || b < 0) throw ArgumentError("negative vertex index");
  u = a < b ? a : b;
  v = a < b ? b : a;
}

std::string_view to_string(ExposureStatus s) {
  switch (s) {
    case ExposureStatus::NotExposed: return "not-exposed";
    case ExposureStatus::FacetEdge: return "facet-edge";
    case ExposureStatus::ProperlyExposed: return "properly-exposed";
  }
  return "?";
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw ArgumentError("vertex count out of range [0, 64]: " + std::to_string(n));
  }
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const Edge& e : edges) {
    check_vertex(e.v);
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.adj_[v] = low_bits(n) & ~bit(v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) {
    g.adj_[v] |= bit(v + 1);
    g.adj_[v + 1] |= bit(v);
  }
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) {
    g.adj_[0] |= bit(n - 1);
    g.adj_[n - 1] |= bit(0);
  }
  return g;
}

Graph Graph::from_edge_bits(int n, std::uint64_t bits) {
  if (n < 0 || n * (n - 1) / 2 > 64) throw ArgumentError("from_edge_bits requires n <= 11");
  Graph g(n);
  int index = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++index) {
      if ((bits >> index) & 1U) {
        g.adj_[u] |= bit(v);
        g.adj_[v] |= bit(u);
      }
    }
  }
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(popcount(adj_[v]));
  return twice / 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range for graph on " +
                        std::to_string(n_) + " vertices");
  }
}

bool Graph::has_edge(int a, int b) const {
  check_vertex(a);
  check_vertex(b);
  return contains(adj_[a], b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_bit(adj_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

std::uint64_t Graph::edge_bits() const {
  if (n_ * (n_ - 1) / 2 > 64) throw ArgumentError("edge_bits requires n <= 11");
  std::uint64_t bits = 0;
  int index = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v, ++index) {
      if (contains(adj_[u], v)) bits |= std::uint64_t{1} << index;
    }
  }
  return bits;
}

Graph Graph::with_edge(Edge e) const {
  check_vertex(e.v);
  Graph g = *this;
  g.adj_[e.u] |= bit(e.v);
  g.adj_[e.v] |= bit(e.u);
  return g;
}

Graph Graph::without_edge(Edge e) const {
  check_vertex(e.v);
  Graph g = *this;
  g.adj_[e.u] &= ~bit(e.v);
  g.adj_[e.v] &= ~bit(e.u);
  return g;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  if (a.n_ != b.n_) return false;
  for (int v = 0; v < a.n_; ++v) {
    if (a.adj_[v] != b.adj_[v]) return false;
  }
  return true;
}

std::vector<Edge> canonical_edges(int n) {
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
  }
  return out;
}

VertexSet neighborhood(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw ArgumentError("vertex out of range: " + std::to_string(v));
  return g.row(v);
}

bool is_clique(const Graph& g, VertexSet s) {
  if (!is_subset(s, g.vertices())) throw ArgumentError("vertex set exceeds graph");
  VertexSet rest = s;
  while (rest != 0) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (!is_subset(rest, g.row(v))) return false;
  }
  return true;
}

bool is_simplicial_vertex(const Graph& g, int v) { return is_clique(g, neighborhood(g, v)); }

namespace {

void require_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) {
    throw ArgumentError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                        " is not in the graph");
  }
}

// Bron–Kerbosch with pivoting. r is the current clique, p the candidates,
// x the already-processed vertices.
template <class Fn>
void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, Fn& emit) {
  if (p == 0 && x == 0) {
    emit(r);
    return;
  }
  VertexSet px = p | x;
  int pivot = std::countr_zero(px);
  int best = -1;
  for_each_bit(px, [&](int u) {
    int c = popcount(p & g.row(u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  VertexSet candidates = p & ~g.row(pivot);
  for_each_bit(candidates, [&](int v) {
    bron_kerbosch(g, r | bit(v), p & g.row(v), x & g.row(v), emit);
    p &= ~bit(v);
    x |= bit(v);
  });
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  auto emit = [&](VertexSet c) { out.push_back(c); };
  if (g.order() > 0) bron_kerbosch(g, 0, g.vertices(), 0, emit);
  std::sort(out.begin(), out.end());
  return out;
}

ExposureStatus exposure_status(const Graph& g, Edge e) {
  require_edge(g, e);
  VertexSet common = g.row(e.u) & g.row(e.v);
  if (!is_clique(g, common)) return ExposureStatus::NotExposed;
  return common == 0 ? ExposureStatus::FacetEdge : ExposureStatus::ProperlyExposed;
}

ExposureStatus exposure_status_by_cliques(const Graph& g, Edge e) {
  require_edge(g, e);
  int containing = 0;
  VertexSet clique = 0;
  for (VertexSet c : maximal_cliques(g)) {
    if (is_subset(e.mask(), c)) {
      ++containing;
      clique = c;
    }
  }
  if (containing != 1) return ExposureStatus::NotExposed;
  return clique == e.mask() ? ExposureStatus::FacetEdge : ExposureStatus::ProperlyExposed;
}

ExposureStatus exposure_status_by_link(const Graph& g, Edge e, int pivot) {
  require_edge(g, e);
  if (pivot != e.u && pivot != e.v) throw ArgumentError("pivot must be an endpoint of the edge");
  int other = pivot == e.u ? e.v : e.u;
  InducedSubgraph link = induced_subgraph(g, neighborhood(g, other));
  int local = 0;
  for (; link.original_vertex[static_cast<std::size_t>(local)] != pivot; ++local) {
  }
  if (!is_simplicial_vertex(link.graph, local)) return ExposureStatus::NotExposed;
  return link.graph.row(local) == 0 ? ExposureStatus::FacetEdge
                                    : ExposureStatus::ProperlyExposed;
}

namespace {

bool induces_cycle(const Graph& g, VertexSet s) {
  // Every vertex of s has exactly two neighbors inside s, and s is connected.
  VertexSet rest = s;
  while (rest != 0) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (popcount(g.row(v) & s) != 2) return false;
  }
  VertexSet seen = bit(std::countr_zero(s));
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.row(v) & s; });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == s;
}

}  // namespace

bool is_chordal_cycles(const Graph& g) {
  const int n = g.order();
  if (n < 4) return true;
  if (n > 30) throw ArgumentError("cycle oracle is limited to n <= 30");
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (popcount(s) >= 4 && induces_cycle(g, s)) return false;
  }
  return true;
}

bool is_chordal(const Graph& g) {
  VertexSet alive = g.vertices();
  while (alive != 0) {
    int found = -1;
    for (VertexSet rest = alive; rest != 0; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      VertexSet nb = g.row(v) & alive;
      bool clique = true;
      for (VertexSet r = nb; r != 0 && clique;) {
        int w = std::countr_zero(r);
        r &= r - 1;
        clique = is_subset(r, g.row(w));
      }
      if (clique) {
        found = v;
        break;
      }
    }
    if (found < 0) return false;
    alive &= ~bit(found);
  }
  return true;
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (is_simplicial_vertex(g, v)) out |= bit(v);
  }
  return out;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!contains(g.row(u), v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.order(), edges);
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!is_subset(s, g.vertices())) throw ArgumentError("vertex set exceeds graph");
  InducedSubgraph out{Graph(popcount(s)), members(s)};
  std::vector<Edge> edges;
  const auto& orig = out.original_vertex;
  for (std::size_t i = 0; i < orig.size(); ++i) {
    for (std::size_t j = i + 1; j < orig.size(); ++j) {
      if (contains(g.row(orig[i]), orig[j])) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  out.graph = Graph(popcount(s), edges);
  return out;
}

int connected_components(const Graph& g) {
  int count = 0;
  VertexSet unseen = g.vertices();
  while (unseen != 0) {
    ++count;
    VertexSet comp = bit(std::countr_zero(unseen));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.row(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
  }
  return count;
}

bool is_cut_edge(const Graph& g, Edge e) {
  require_edge(g, e);
  return connected_components(g.without_edge(e)) > connected_components(g);
}

bool is_spanning_subgraph(const Graph& h, const Graph& g) {
  if (h.order() != g.order()) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!is_subset(h.row(v), g.row(v))) return false;
  }
  return true;
}

}  // namespace shellforge
