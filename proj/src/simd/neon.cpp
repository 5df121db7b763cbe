#include "singclass/simd/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace singclass::simd {

namespace {

void axpy_mod_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                   std::size_t len) {
  std::size_t i = 0;
  if (p < (1U << 15)) {
    const uint32x4_t vp = vdupq_n_u32(p);
    const float64x2_t inv = vdupq_n_f64(1.0 / static_cast<double>(p));
    for (; i + 4 <= len; i += 4) {
      const uint32x4_t x = vmlaq_n_u32(vld1q_u32(dst + i), vld1q_u32(src + i), factor);
      const float64x2_t lo = vcvtq_f64_u64(vmovl_u32(vget_low_u32(x)));
      const float64x2_t hi = vcvtq_f64_u64(vmovl_high_u32(x));
      const uint64x2_t qlo = vcvtq_u64_f64(vrndmq_f64(vmulq_f64(lo, inv)));
      const uint64x2_t qhi = vcvtq_u64_f64(vrndmq_f64(vmulq_f64(hi, inv)));
      const uint32x4_t q = vcombine_u32(vmovn_u64(qlo), vmovn_u64(qhi));
      uint32x4_t r = vmlsq_u32(x, q, vp);
      // r may have wrapped below zero or stayed >= p by one multiple of p.
      const uint32x4_t wrapped = vcgtq_u32(r, vdupq_n_u32(0x80000000U));
      r = vaddq_u32(r, vandq_u32(wrapped, vp));
      r = vsubq_u32(r, vandq_u32(vcgeq_u32(r, vp), vp));
      vst1q_u32(dst + i, r);
    }
  }
  const std::uint64_t f = factor;
  for (; i < len; ++i) dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
}

std::size_t find_divisor_neon(const Monomial::Lanes* lanes, std::size_t count, const Monomial::Lanes& target) {
  const uint8x16_t t = vld1q_u8(target.data());
  for (std::size_t i = 0; i < count; ++i) {
    if (vminvq_u8(vcleq_u8(vld1q_u8(lanes[i].data()), t)) == 0xFF) return i;
  }
  return count;
}

}  // namespace

const Kernels* neon_kernels() {
  static const Kernels k{"neon", axpy_mod_neon, find_divisor_neon};
  return &k;
}

}  // namespace singclass::simd

#else

namespace singclass::simd {
const Kernels* neon_kernels() { return nullptr; }
}  // namespace singclass::simd

#endif
