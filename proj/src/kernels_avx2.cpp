#include "shellforge/kernels.hpp"

#if SHELLFORGE_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cstddef>

#define SF_AVX2 __attribute__((target("avx2")))

namespace shellforge::kernels::avx2 {

namespace {

SF_AVX2 inline __m256i load4(const VertexSet* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

SF_AVX2 inline VertexSet or_lanes(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i x = _mm_or_si128(lo, hi);
  return static_cast<VertexSet>(_mm_cvtsi128_si64(x)) |
         static_cast<VertexSet>(_mm_extract_epi64(x, 1));
}

}  // namespace

SF_AVX2 VertexSet ridge_support(std::span<const VertexSet> facets, VertexSet e) {
  const std::size_t n = facets.size();
  const __m256i ev = _mm256_set1_epi64x(static_cast<long long>(e));
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi64x(1);
  __m256i acc = zero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // missing = e & ~g, kept where missing is a single bit.
    __m256i missing = _mm256_andnot_si256(load4(facets.data() + i), ev);
    __m256i below = _mm256_and_si256(missing, _mm256_sub_epi64(missing, one));
    __m256i single = _mm256_andnot_si256(_mm256_cmpeq_epi64(missing, zero),
                                         _mm256_cmpeq_epi64(below, zero));
    acc = _mm256_or_si256(acc, _mm256_and_si256(missing, single));
  }
  VertexSet out = or_lanes(acc);
  return out | scalar::ridge_support(facets.subspan(i), e);
}

SF_AVX2 bool every_facet_meets(std::span<const VertexSet> facets, VertexSet e, VertexSet required) {
  const std::size_t n = facets.size();
  const __m256i mask = _mm256_set1_epi64x(static_cast<long long>(e & required));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i hit = _mm256_andnot_si256(load4(facets.data() + i), mask);
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi64(hit, zero)) != 0) return false;
  }
  return scalar::every_facet_meets(facets.subspan(i), e, required);
}

SF_AVX2 bool any_superset(std::span<const VertexSet> facets, VertexSet face) {
  const std::size_t n = facets.size();
  const __m256i fv = _mm256_set1_epi64x(static_cast<long long>(face));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i outside = _mm256_andnot_si256(load4(facets.data() + i), fv);
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi64(outside, zero)) != 0) return true;
  }
  return scalar::any_superset(facets.subspan(i), face);
}

}  // namespace shellforge::kernels::avx2

#endif
