#include "shellforge/kernels.hpp"

namespace shellforge::kernels::scalar {

VertexSet ridge_support(std::span<const VertexSet> facets, VertexSet e) {
  VertexSet out = 0;
  for (VertexSet g : facets) {
    VertexSet missing = e & ~g;
    if (missing != 0 && (missing & (missing - 1)) == 0) out |= missing;
  }
  return out;
}

bool every_facet_meets(std::span<const VertexSet> facets, VertexSet e, VertexSet required) {
  for (VertexSet g : facets) {
    if ((e & ~g & required) == 0) return false;
  }
  return true;
}

bool any_superset(std::span<const VertexSet> facets, VertexSet face) {
  for (VertexSet g : facets) {
    if ((face & ~g) == 0) return true;
  }
  return false;
}

}  // namespace shellforge::kernels::scalar
