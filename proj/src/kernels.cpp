#include "shellforge/kernels.hpp"

#include "shellforge/errors.hpp"

namespace shellforge::kernels {

namespace {

struct Table {
  Backend backend;
  VertexSet (*ridge_support)(std::span<const VertexSet>, VertexSet);
  bool (*every_facet_meets)(std::span<const VertexSet>, VertexSet, VertexSet);
  bool (*any_superset)(std::span<const VertexSet>, VertexSet);
};

constexpr Table kScalar{Backend::Scalar, scalar::ridge_support, scalar::every_facet_meets,
                        scalar::any_superset};
#if SHELLFORGE_HAVE_AVX2_KERNELS
constexpr Table kAvx2{Backend::Avx2, avx2::ridge_support, avx2::every_facet_meets,
                      avx2::any_superset};
#endif

const Table* detect() {
#if SHELLFORGE_HAVE_AVX2_KERNELS
  if (available(Backend::Avx2)) return &kAvx2;
#endif
  return &kScalar;
}

const Table*& active() {
  static const Table* table = detect();
  return table;
}

}  // namespace

std::string_view to_string(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool available(Backend b) {
  if (b == Backend::Scalar) return true;
#if SHELLFORGE_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() { return active()->backend; }

void set_backend(Backend b) {
  if (!available(b)) throw ArgumentError("kernel backend not supported on this CPU");
#if SHELLFORGE_HAVE_AVX2_KERNELS
  active() = b == Backend::Avx2 ? &kAvx2 : &kScalar;
#else
  active() = &kScalar;
#endif
}

VertexSet ridge_support(std::span<const VertexSet> facets, VertexSet e) {
  return active()->ridge_support(facets, e);
}

bool every_facet_meets(std::span<const VertexSet> facets, VertexSet e, VertexSet required) {
  return active()->every_facet_meets(facets, e, required);
}

bool any_superset(std::span<const VertexSet> facets, VertexSet face) {
  return active()->any_superset(facets, face);
}

}  // namespace shellforge::kernels
