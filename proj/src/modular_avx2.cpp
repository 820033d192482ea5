#include "hochlab/modular.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace hochlab::modular {

namespace {

// Barrett reduction of eight lanes below 2^31 with m = floor(2^32 / p).
__attribute__((target("avx2"))) inline __m256i reduce_lanes(__m256i x, __m256i m, __m256i p) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, m), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), m);
  const __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  const __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

}  // namespace

__attribute__((target("avx2"))) void row_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src,
                                                   std::uint32_t factor, std::uint32_t p, std::size_t n) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>((1ULL << 32) / p)));
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vf));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce_lanes(x, vm, vp));
  }
  row_axpy_scalar(dst + i, src + i, factor, p, n - i);
}

}  // namespace hochlab::modular
#endif
