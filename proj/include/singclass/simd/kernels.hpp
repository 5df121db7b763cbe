#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "singclass/monomial.hpp"

namespace singclass::simd {

/// Hot loops with one scalar reference implementation and optional vector
/// variants. All variants must produce identical results.
struct Kernels {
  std::string_view name;
  /// dst[i] = (dst[i] + factor * src[i]) mod p, operands already reduced.
  void (*axpy_mod)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                   std::size_t len);
  /// Index of the first entry of `lanes` that divides `target`
  /// (componentwise <=), or `count` if none does.
  std::size_t (*find_divisor)(const Monomial::Lanes* lanes, std::size_t count, const Monomial::Lanes& target);
};

const Kernels& scalar_kernels();
/// nullptr when the variant was not compiled in or the CPU lacks support.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

/// Best available variant; SINGCLASS_SIMD=scalar forces the reference path.
const Kernels& active();

}  // namespace singclass::simd
