#pragma once

// Bulk bit-mask sweeps over a facet array. These are the inner loops of
// every shelling-step test, so they come in a scalar reference version and
// vector versions chosen once at startup from the host CPU.

#include <span>
#include <string_view>

#include "shellforge/bits.hpp"

namespace shellforge::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b);

/// Whether the host can execute `b`.
bool available(Backend b);

/// Backend currently used by the dispatching entry points below.
Backend active_backend();

/// Forces a backend (tests, benchmarking). Throws ArgumentError when the
/// host cannot run it. Not thread-safe against concurrent kernel calls.
void set_backend(Backend b);

/// Union of e \ G over the facets G that miss exactly one vertex of e.
/// Equivalently, the vertices v of e whose ridge e - v lies in the complex.
VertexSet ridge_support(std::span<const VertexSet> facets, VertexSet e);

/// True iff (e \ G) meets `required` for every facet G.
bool every_facet_meets(std::span<const VertexSet> facets, VertexSet e, VertexSet required);

/// True iff some facet contains `face`.
bool any_superset(std::span<const VertexSet> facets, VertexSet face);

namespace scalar {
VertexSet ridge_support(std::span<const VertexSet> facets, VertexSet e);
bool every_facet_meets(std::span<const VertexSet> facets, VertexSet e, VertexSet required);
bool any_superset(std::span<const VertexSet> facets, VertexSet face);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define SHELLFORGE_HAVE_AVX2_KERNELS 1
namespace avx2 {
VertexSet ridge_support(std::span<const VertexSet> facets, VertexSet e);
bool every_facet_meets(std::span<const VertexSet> facets, VertexSet e, VertexSet required);
bool any_superset(std::span<const VertexSet> facets, VertexSet face);
}  // namespace avx2
#else
#define SHELLFORGE_HAVE_AVX2_KERNELS 0
#endif

}  // namespace shellforge::kernels
