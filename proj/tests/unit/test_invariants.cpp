#include <random>

#include "doctest.h"
#include "singclass/automorphism.hpp"
#include "singclass/errors.hpp"
#include "singclass/invariants.hpp"
#include "support.hpp"

using namespace singclass;
using testing::poly;

namespace {
const JetBound kCap(64);
}

TEST_CASE("bound schedule") {
  CHECK(bound_schedule(JetBound(64)) == std::vector<int>{10, 20, 40, 64});
  CHECK(bound_schedule(JetBound(15)) == std::vector<int>{10, 15});
  CHECK(bound_schedule(JetBound(5)) == std::vector<int>{5});
}

TEST_CASE("Milnor and Tjurina numbers") {
  CHECK(milnor_number(poly("x^2+y^2", 0, 2), kCap).value == DimValue{true, 1, 10});
  CHECK(tjurina_number(poly("y^2+x^3*y", 2, 2), kCap).value.value == 5);
  CHECK(tjurina_number(poly("x^3+y^4", 0, 2), kCap).value.value == 6);
  CHECK(milnor_number(poly("x^3+y^4", 0, 2), kCap).value.value == 6);
  for (std::uint64_t p : {3, 5, 7}) {
    const Polynomial f = poly("x^" + std::to_string(p) + "+y^" + std::to_string(p - 1), p, 2);
    const auto tau = tjurina_number(f, kCap);
    CHECK(tau.value.finite);
    CHECK(tau.value.value == p * (p - 2));
    const auto mu = milnor_number(f, kCap);
    CHECK_FALSE(mu.value.finite);
    CHECK(mu.value.bound == 64);
    const Polynomial g = mul_truncated(poly("1+x", p, 2), f, JetBound(64));
    CHECK(milnor_number(g, kCap).value.value == p * (p - 2));
  }
  CHECK_THROWS_AS(milnor_number(poly("1+x^2", 0, 1), kCap), Error);
}

TEST_CASE("Milnor number of Brieskorn-Pham sums") {
  for (std::uint64_t p : {0, 3, 7}) {
    CHECK(milnor_number(poly("x^4", p, 1), kCap).value.value == 3);
    CHECK(milnor_number(poly("x^4+y^4", p, 2), kCap).value.value == 9);
    CHECK(milnor_number(poly("x^5+y^5", p == 0 ? 0 : 3, 2), kCap).value.value == 16);
    CHECK(milnor_number(poly("x^3+y^3+z^3", p == 3 ? 5 : p, 3), kCap).value.value == 8);
  }
}

TEST_CASE("Hessian rank") {
  auto h = hessian_rank_corank(poly("x^2+y^3", 0, 2));
  CHECK(h.rank == 1);
  CHECK(h.corank == 1);
  h = hessian_rank_corank(poly("x1*x2+x3*x4", 2, std::vector<std::string>{"x1", "x2", "x3", "x4"}));
  CHECK(h.rank == 4);
  h = hessian_rank_corank(poly("x^2+y^2", 2, 2));
  CHECK(h.rank == 0);
  CHECK(h.corank == 2);
  CHECK(h.square_terms == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(hessian_rank_corank(poly("x+y^2", 0, 2)), Error);
}

TEST_CASE("higher algebras") {
  const Polynomial f = poly("x^2+y^2", 0, 2);
  const auto d0 = higher_algebra_dims(f, 0, kCap);
  CHECK(d0.milnor.value.value == 1);
  CHECK(d0.tjurina.value.value == 1);
  CHECK(higher_algebra_dims(f, 2, kCap).milnor.value.value == 6);
  const Polynomial g = poly("y^2+x^3*y", 2, 2);
  const auto d1 = higher_algebra_dims(g, 1, kCap);
  IdealGens t1 = concat({g}, times_m_power(jacobian_ideal(g), 1));
  CHECK(d1.tjurina.value.value == jet_quotient_dim_oracle(t1, JetBound(8)));
}

TEST_CASE("invariance under random coordinate changes") {
  std::mt19937_64 rng(99);
  for (std::uint64_t p : {0, 2, 3, 5}) {
    const auto fld = testing::field(p);
    for (int i = 0; i < 25; ++i) {
      const Polynomial f = testing::random_poly(rng, fld, 2, 2, 6, 4);
      const auto mu = milnor_number(f, JetBound(20));
      const auto tau = tjurina_number(f, JetBound(20));
      const auto phi = random_automorphism(2, fld, JetBound(20), rng(), false);
      const auto psi = random_automorphism(2, fld, JetBound(20), rng(), true);
      if (mu.value.finite) {
        CHECK(milnor_number(substitute_jet(f, phi), JetBound(20)).value.value == mu.value.value);
      }
      if (tau.value.finite) {
        CHECK(tjurina_number(substitute_jet(f, psi), JetBound(20)).value.value == tau.value.value);
      }
      if (mu.value.finite && tau.value.finite) CHECK(tau.value.value <= mu.value.value);
    }
  }
}

TEST_CASE("coordinate axis certificate") {
  CHECK(contains_coordinate_axis(jacobian_ideal(poly("x^5+y^4", 5, 2))));
  CHECK(contains_coordinate_axis(jacobian_ideal(poly("x^2*y^2", 0, 2))));
  CHECK(contains_coordinate_axis({poly("y*z+x*y", 0, 3), poly("z^2", 0, 3)}));
  CHECK_FALSE(contains_coordinate_axis(jacobian_ideal(poly("x^2+y^3", 0, 2))));
  CHECK_FALSE(contains_coordinate_axis({poly("x+y^2", 0, 2), poly("y^3+x*y", 0, 2)}));
  CHECK_FALSE(contains_coordinate_axis({poly("1+x", 0, 1)}));
  CHECK(contains_coordinate_axis({Polynomial(testing::field(0), 1)}));

  const auto mu = milnor_number(poly("x^5+y^4", 5, 2), JetBound(64));
  CHECK_FALSE(mu.value.finite);
  CHECK(mu.value.bound == 64);
  CHECK(mu.value.value > 0);

  // Whenever the certificate fires, the dense quotient keeps growing with N.
  std::mt19937_64 rng(123);
  int fired = 0;
  for (std::uint64_t p : {0, 2, 3}) {
    for (int i = 0; i < 60; ++i) {
      const std::size_t n = 2 + rng() % 2;
      const IdealGens ideal{testing::random_poly(rng, testing::field(p), n, 1, 4, 3),
                            testing::random_poly(rng, testing::field(p), n, 1, 4, 3)};
      if (!contains_coordinate_axis(ideal)) continue;
      ++fired;
      CHECK(jet_quotient_dim_oracle(ideal, JetBound(7)) < jet_quotient_dim_oracle(ideal, JetBound(8)));
      CHECK_FALSE(adaptive_quotient_dim(ideal, JetBound(30)).finite);
    }
  }
  CHECK(fired > 10);
}
