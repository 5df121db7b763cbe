#include <cstdlib>
#include <random>
#include <string_view>

#include "doctest.h"
#include "singclass/simd/kernels.hpp"
#include "singclass/stdbasis.hpp"
#include "support.hpp"

using namespace singclass;

TEST_SUITE("simd") {

TEST_CASE("active kernels honour the scalar override") {
  const char* forced = std::getenv("SINGCLASS_SIMD");
  if (forced != nullptr && std::string_view(forced) == "scalar") {
    CHECK(simd::active().name == simd::scalar_kernels().name);
  }
  MESSAGE("kernels: " << simd::active().name);
}

TEST_CASE("vector kernels agree with the scalar reference") {
  std::mt19937_64 rng(17);
  const simd::Kernels& ref = simd::scalar_kernels();
  for (const simd::Kernels* k : {&simd::active(), simd::avx2_kernels(), simd::neon_kernels()}) {
    if (k == nullptr) continue;
    CAPTURE(k->name);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 65521u, 2147483647u}) {
      std::uniform_int_distribution<std::uint32_t> val(0, p - 1);
      for (std::size_t len : {0u, 1u, 3u, 7u, 8u, 9u, 31u, 64u, 101u}) {
        std::vector<std::uint32_t> a(len), b(len), src(len);
        for (std::size_t i = 0; i < len; ++i) {
          a[i] = b[i] = val(rng);
          src[i] = val(rng);
        }
        const std::uint32_t factor = val(rng);
        ref.axpy_mod(a.data(), src.data(), factor, p, len);
        k->axpy_mod(b.data(), src.data(), factor, p, len);
        CHECK(a == b);
      }
    }
    std::uniform_int_distribution<int> ex(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Monomial::Lanes> lanes(static_cast<std::size_t>(trial % 40));
      for (auto& l : lanes)
        for (std::size_t j = 0; j < 5; ++j) l[j] = static_cast<std::uint8_t>(ex(rng));
      Monomial::Lanes target{};
      for (std::size_t j = 0; j < 5; ++j) target[j] = static_cast<std::uint8_t>(ex(rng) + 1);
      CHECK(ref.find_divisor(lanes.data(), lanes.size(), target) ==
            k->find_divisor(lanes.data(), lanes.size(), target));
    }
  }
}

TEST_CASE("quotient dimensions on the active kernels match the dense oracle") {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {2u, 3u, 7u}) {
    const FieldSpec f = testing::field(p);
    for (int trial = 0; trial < 15; ++trial) {
      const Polynomial g = testing::random_poly(rng, f, 2, 2, 6, 5);
      IdealGens ideal = tjurina_ideal(g);
      ideal.push_back(testing::poly("x^7", p, 2));
      ideal.push_back(testing::poly("y^7", p, 2));
      CAPTURE(g.to_string());
      const DimValue d = quotient_dim(ideal, JetBound(14));
      REQUIRE(d.finite);
      CHECK(d.value == jet_quotient_dim_oracle(ideal, JetBound(14)));
    }
  }
}

}
