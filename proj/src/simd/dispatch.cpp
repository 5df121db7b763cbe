#include <cstdlib>
#include <string_view>

#include "singclass/simd/kernels.hpp"

namespace singclass::simd {

const Kernels& active() {
  static const Kernels& chosen = []() -> const Kernels& {
    const char* forced = std::getenv("SINGCLASS_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_kernels();
    if (const Kernels* k = avx2_kernels()) return *k;
    if (const Kernels* k = neon_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace singclass::simd
