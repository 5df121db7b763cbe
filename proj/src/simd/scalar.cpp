#include "singclass/simd/kernels.hpp"

namespace singclass::simd {

namespace {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                     std::size_t len) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < len; ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
  }
}

std::size_t find_divisor_scalar(const Monomial::Lanes* lanes, std::size_t count, const Monomial::Lanes& target) {
  for (std::size_t i = 0; i < count; ++i) {
    bool divides = true;
    for (std::size_t j = 0; j < kMaxVars; ++j) {
      if (lanes[i][j] > target[j]) {
        divides = false;
        break;
      }
    }
    if (divides) return i;
  }
  return count;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar", axpy_mod_scalar, find_divisor_scalar};
  return k;
}

}  // namespace singclass::simd
