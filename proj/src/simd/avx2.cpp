#include "singclass/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace singclass::simd {

namespace {

// Residues below 2^15 keep dst + factor * src below 2^31, so the quotient is
// exact enough in double precision and one correction step suffices.
constexpr std::uint32_t kVectorPrimeLimit = 1U << 15;

__m256i reduce8(__m256i x, __m256d inv_p, __m256i p) {
  const __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(x));
  const __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(x, 1));
  const __m128i qlo = _mm256_cvttpd_epi32(_mm256_floor_pd(_mm256_mul_pd(lo, inv_p)));
  const __m128i qhi = _mm256_cvttpd_epi32(_mm256_floor_pd(_mm256_mul_pd(hi, inv_p)));
  const __m256i q = _mm256_set_m128i(qhi, qlo);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, p));
  r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), r), p));
  const __m256i pm1 = _mm256_sub_epi32(p, _mm256_set1_epi32(1));
  r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, pm1), p));
  return r;
}

void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                   std::size_t len) {
  std::size_t i = 0;
  if (p < kVectorPrimeLimit) {
    const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    for (; i + 8 <= len; i += 8) {
      const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      const __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vf));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce8(x, inv, vp));
    }
  }
  const std::uint64_t f = factor;
  for (; i < len; ++i) dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
}

std::size_t find_divisor_avx2(const Monomial::Lanes* lanes, std::size_t count, const Monomial::Lanes& target) {
  const __m128i t128 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(target.data()));
  const __m256i t = _mm256_set_m128i(t128, t128);
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lanes[i].data()));
    const auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(_mm256_max_epu8(a, t), t)));
    if ((mask & 0xFFFFU) == 0xFFFFU) return i;
    if ((mask >> 16) == 0xFFFFU) return i + 1;
  }
  if (i < count) {
    const __m128i a = _mm_loadu_si128(reinterpret_cast<const __m128i*>(lanes[i].data()));
    if (_mm_movemask_epi8(_mm_cmpeq_epi8(_mm_max_epu8(a, t128), t128)) == 0xFFFF) return i;
  }
  return count;
}

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels k{"avx2", axpy_mod_avx2, find_divisor_avx2};
  return __builtin_cpu_supports("avx2") ? &k : nullptr;
}

}  // namespace singclass::simd

#else

namespace singclass::simd {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace singclass::simd

#endif
