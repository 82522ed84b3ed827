#include <immintrin.h>

#include "staircase/kernels.hpp"

namespace staircase::kernels::avx2 {

void eval_batch(const FormTerms& form, const std::int32_t* soa, std::size_t stride,
                std::size_t count, std::int32_t* out) {
  std::size_t k = 0;
  for (; k + 8 <= count; k += 8) {
    __m256i acc = _mm256_setzero_si256();
    for (int v = 0; v < form.n; ++v) {
      const __m256i xv = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(soa + static_cast<std::size_t>(v) * stride + k));
      __m256i t = xv;
      for (std::int32_t e = form.row_begin[v]; e < form.row_begin[v + 1]; ++e) {
        const __m256i xu = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(
            soa + static_cast<std::size_t>(form.column[e]) * stride + k));
        t = _mm256_add_epi32(t, _mm256_mullo_epi32(_mm256_set1_epi32(form.coefficient[e]), xu));
      }
      acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(xv, t));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), acc);
  }
  if (k < count) {
    // Tail lanes go through the reference path on a shifted view.
    scalar::eval_batch(form, soa + k, stride, count - k, out + k);
  }
}

void polar_apply(const PolarMatrix& p, const std::int32_t* x, std::int32_t* out) {
  for (int v = 0; v < p.n; ++v) {
    const std::int32_t* row = p.entries.data() + static_cast<std::size_t>(v) * p.stride;
    __m256i acc = _mm256_setzero_si256();
    for (int u = 0; u < p.stride; u += 8) {
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + u));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + u));
      acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(a, b));
    }
    __m128i lo = _mm256_castsi256_si128(acc);
    __m128i hi = _mm256_extracti128_si256(acc, 1);
    __m128i s = _mm_add_epi32(lo, hi);
    s = _mm_hadd_epi32(s, s);
    s = _mm_hadd_epi32(s, s);
    out[v] = _mm_cvtsi128_si32(s);
  }
}

}  // namespace staircase::kernels::avx2
