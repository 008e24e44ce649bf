#include "shellforge/complex.hpp"

#include <algorithm>
#include <string>

#include "shellforge/errors.hpp"
#include "shellforge/kernels.hpp"

namespace shellforge {

Clutter::Clutter(int n, int k, std::vector<Face> facets) : n_(n), k_(k), facets_(std::move(facets)) {
  if (n < 0 || n > kMaxVertices) throw ArgumentError("vertex count out of range: " + std::to_string(n));
  if (k < 0 || k > n) throw ArgumentError("facet size out of range: " + std::to_string(k));
  for (Face f : facets_) {
    if (popcount(f) != k || !is_subset(f, low_bits(n))) {
      throw ArgumentError("facet does not have " + std::to_string(k) + " vertices in range");
    }
  }
  std::sort(facets_.begin(), facets_.end());
  if (std::adjacent_find(facets_.begin(), facets_.end()) != facets_.end()) {
    throw ArgumentError("repeated facet");
  }
}

bool Clutter::has_facet(Face f) const { return index_of(f) >= 0; }

int Clutter::index_of(Face f) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), f);
  if (it == facets_.end() || *it != f) return -1;
  return static_cast<int>(it - facets_.begin());
}

bool generated_complex_contains(const Clutter& c, Face f) {
  return kernels::any_superset(c.facets(), f);
}

std::optional<Face> shelling_step_over(std::span<const Face> placed, Face e) {
  if (placed.empty()) return Face{0};
  // A face of e is new iff it meets e \ G for every facet G. The new faces
  // form an interval exactly when the forced vertices (those whose removal
  // from e leaves an old ridge) already meet every e \ G; the forced set is
  // then the minimal new face.
  Face forced = kernels::ridge_support(placed, e);
  if (!kernels::every_facet_meets(placed, e, forced)) return std::nullopt;
  return forced;
}

namespace {

void check_candidate(const Clutter& c, Face e) {
  if (c.empty()) throw ArgumentError("shelling step needs a nonempty clutter");
  if (popcount(e) != c.facet_size() || !is_subset(e, low_bits(c.vertex_count()))) {
    throw ArgumentError("candidate has the wrong size or leaves the vertex range");
  }
  if (c.has_facet(e)) throw ArgumentError("candidate is already a facet");
}

// Calls fn(s) for every subset s of e, including 0 and e.
template <class Fn>
void for_each_subset(Face e, Fn&& fn) {
  Face s = 0;
  do {
    fn(s);
    s = (s - e) & e;
  } while (s != 0);
}

}  // namespace

std::optional<Face> is_shelling_step(const Clutter& c, Face e) {
  check_candidate(c, e);
  return shelling_step_over(c.facets(), e);
}

std::optional<Face> shelling_step_by_enumeration(const Clutter& c, Face e) {
  check_candidate(c, e);
  std::vector<Face> fresh;
  for_each_subset(e, [&](Face s) {
    if (!generated_complex_contains(c, s)) fresh.push_back(s);
  });
  // The minimal candidate is the intersection of all new faces; the set is
  // an interval iff that intersection is itself new and the count matches.
  Face low = e;
  for (Face s : fresh) low &= s;
  if (generated_complex_contains(c, low)) return std::nullopt;
  const std::size_t interval = std::size_t{1} << popcount(e & ~low);
  if (fresh.size() != interval) return std::nullopt;
  return low;
}

bool shelling_step_is_pure(const Clutter& c, Face e) {
  check_candidate(c, e);
  std::vector<Face> ridges;
  for_each_bit(e, [&](int v) {
    if (generated_complex_contains(c, e & ~bit(v))) ridges.push_back(e & ~bit(v));
  });
  if (ridges.empty()) return false;
  bool pure = true;
  for_each_subset(e, [&](Face s) {
    if (!pure || s == e || !generated_complex_contains(c, s)) return;
    pure = std::any_of(ridges.begin(), ridges.end(), [&](Face r) { return is_subset(s, r); });
  });
  return pure;
}

RestrictedSet restricted_set(std::span<const Face> prefix, Face f) {
  RestrictedSet out{f, {}};
  if (prefix.empty()) return out;
  for_each_bit(f, [&](int v) {
    if (kernels::any_superset(prefix, f & ~bit(v))) out.ridges.push_back(f & ~bit(v));
  });
  std::sort(out.ridges.begin(), out.ridges.end());
  return out;
}

bool is_shelling_order(std::span<const Face> order, int n, int k) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    Face f = order[i];
    if (popcount(f) != k || !is_subset(f, low_bits(n))) return false;
    auto prefix = order.first(i);
    if (std::find(prefix.begin(), prefix.end(), f) != prefix.end()) return false;
    if (!shelling_step_over(prefix, f)) return false;
  }
  return true;
}

Clutter clutter_from_graph(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw ArgumentError("graph/clutter correspondence needs at least 3 vertices");
  std::vector<Face> facets;
  for (const Edge& e : g.edges()) facets.push_back(low_bits(n) & ~e.mask());
  return Clutter(n, n - 2, std::move(facets));
}

Graph graph_from_clutter(const Clutter& c) {
  const int n = c.vertex_count();
  if (n < 3 || c.facet_size() != n - 2) {
    throw ArgumentError("graph correspondence needs facets of size n - 2");
  }
  std::vector<Edge> edges;
  for (Face f : c.facets()) {
    auto ends = members(low_bits(n) & ~f);
    edges.emplace_back(ends[0], ends[1]);
  }
  return Graph(n, edges);
}

std::vector<TransportStep> transport_removals(int n, std::span<const Edge> edges) {
  if (n < 3) throw ArgumentError("graph/clutter correspondence needs at least 3 vertices");
  std::vector<TransportStep> out;
  std::vector<Face> placed;
  Graph g = Graph::complete(n);
  for (const Edge& e : edges) {
    if (e.v >= n) throw ArgumentError("edge outside K_n");
    if (!g.has_edge(e)) throw ArgumentError("repeated edge in removal list");
    TransportStep step;
    step.edge = e;
    step.facet = low_bits(n) & ~e.mask();
    step.exposure = exposure_status(g, e);
    step.shelling_step = shelling_step_over(placed, step.facet).has_value();
    step.restricted_size = static_cast<int>(restricted_set(placed, step.facet).ridges.size());
    if (is_exposed(step.exposure) != step.shelling_step) {
      throw InvariantViolation("exposure and shelling-step verdicts disagree");
    }
    if (step.shelling_step &&
        (step.exposure == ExposureStatus::ProperlyExposed) != (step.restricted_size < n - 2)) {
      throw InvariantViolation("proper exposure disagrees with restricted-set size");
    }
    out.push_back(step);
    placed.push_back(step.facet);
    g = g.without_edge(e);
  }
  return out;
}

}  // namespace shellforge
