#include <immintrin.h>

#include "internal.hpp"

#ifndef __AVX2__
#error "pearson_avx2.cpp must be compiled with -mavx2"
#endif

namespace locarec::kernels::detail {

namespace {

// Each iteration adds at most 2 * 2 * 255 * 255 to a 32-bit lane.
constexpr std::size_t kFlushEvery = 4096;

inline __m256i widen_add(__m256i acc64, __m256i acc32) {
  const __m256i lo = _mm256_cvtepi32_epi64(_mm256_castsi256_si128(acc32));
  const __m256i hi = _mm256_cvtepi32_epi64(_mm256_extracti128_si256(acc32, 1));
  return _mm256_add_epi64(acc64, _mm256_add_epi64(lo, hi));
}

inline std::int64_t hsum_epi64(__m256i v) {
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

PearsonSums pearson_sums_avx2(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) noexcept {
  const __m256i zero = _mm256_setzero_si256();
  __m256i sum_a = zero, sum_b = zero;
  __m256i aa64 = zero, bb64 = zero, ab64 = zero;
  __m256i aa32 = zero, bb32 = zero, ab32 = zero;
  std::int64_t n = 0;

  std::size_t i = 0;
  std::size_t since_flush = 0;
  for (; i + 32 <= len; i += 32) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i skip = _mm256_or_si256(_mm256_cmpeq_epi8(va, zero), _mm256_cmpeq_epi8(vb, zero));
    const __m256i am = _mm256_andnot_si256(skip, va);
    const __m256i bm = _mm256_andnot_si256(skip, vb);

    n += 32 - __builtin_popcount(static_cast<unsigned>(_mm256_movemask_epi8(skip)));
    sum_a = _mm256_add_epi64(sum_a, _mm256_sad_epu8(am, zero));
    sum_b = _mm256_add_epi64(sum_b, _mm256_sad_epu8(bm, zero));

    const __m256i alo = _mm256_unpacklo_epi8(am, zero);
    const __m256i ahi = _mm256_unpackhi_epi8(am, zero);
    const __m256i blo = _mm256_unpacklo_epi8(bm, zero);
    const __m256i bhi = _mm256_unpackhi_epi8(bm, zero);
    aa32 = _mm256_add_epi32(aa32, _mm256_add_epi32(_mm256_madd_epi16(alo, alo), _mm256_madd_epi16(ahi, ahi)));
    bb32 = _mm256_add_epi32(bb32, _mm256_add_epi32(_mm256_madd_epi16(blo, blo), _mm256_madd_epi16(bhi, bhi)));
    ab32 = _mm256_add_epi32(ab32, _mm256_add_epi32(_mm256_madd_epi16(alo, blo), _mm256_madd_epi16(ahi, bhi)));

    if (++since_flush == kFlushEvery) {
      aa64 = widen_add(aa64, aa32);
      bb64 = widen_add(bb64, bb32);
      ab64 = widen_add(ab64, ab32);
      aa32 = bb32 = ab32 = zero;
      since_flush = 0;
    }
  }
  aa64 = widen_add(aa64, aa32);
  bb64 = widen_add(bb64, bb32);
  ab64 = widen_add(ab64, ab32);

  const PearsonSums tail = pearson_sums_scalar({a + i, len - i}, {b + i, len - i});
  return {n + tail.n,
          hsum_epi64(sum_a) + tail.sum_a,
          hsum_epi64(sum_b) + tail.sum_b,
          hsum_epi64(aa64) + tail.sum_aa,
          hsum_epi64(bb64) + tail.sum_bb,
          hsum_epi64(ab64) + tail.sum_ab};
}

}  // namespace locarec::kernels::detail
