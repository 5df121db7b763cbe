#include <random>

#include "doctest.h"
#include "singclass/errors.hpp"
#include "singclass/invariants.hpp"
#include "singclass/automorphism.hpp"
#include "singclass/splitting.hpp"
#include "support.hpp"

using namespace singclass;
using testing::poly;

TEST_CASE("quadratic normal form") {
  const auto q0 = quadratic_normal_form(poly("x*y", 0, 2));
  CHECK(q0.rank == 2);
  REQUIRE(q0.diagonal.size() == 2);
  CHECK(!(q0.diagonal[0].a * q0.diagonal[1].a).is_zero());
  const auto q2 = quadratic_normal_form(poly("x*y", 2, 2));
  CHECK(q2.rank == 2);
  REQUIRE(q2.pairs.size() == 1);
  CHECK(q2.quad == poly("x*y", 2, 2));
  const auto s2 = quadratic_normal_form(poly("x^2+y^3", 2, 2));
  CHECK(s2.rank == 0);
  REQUIRE(s2.squares.size() == 1);
  CHECK(s2.squares[0].a.is_one());
  CHECK_THROWS_AS(quadratic_normal_form(poly("x+y^2", 0, 2)), Error);
}

TEST_CASE("split examples") {
  {
    const Polynomial f = poly("x^2+2*x*y^2+y^3+y^4", 0, 2);
    const auto s = split(f, JetBound(6));
    CHECK(s.quad_rank == 1);
    CHECK(s.residual.jet(3) == poly("y^3", 0, 2));
    CHECK(milnor_number(*s.residual_in_corank_vars(), JetBound(20)).value.value == 2);
  }
  {
    const auto s = split(poly("x^2+y^3", 0, 2), JetBound(6));
    CHECK(s.quad_form == poly("x^2", 0, 2));
    CHECK(s.residual == poly("y^3", 0, 2));
  }
  {
    const std::vector<std::string> v{"x1", "x2", "x3"};
    const auto s = split(poly("x1*x2+x3^3", 2, v), JetBound(4));
    CHECK(s.quad_rank == 2);
    CHECK(s.residual == poly("x3^3", 2, v));
  }
  {
    const auto s = split(poly("x^2+y^3+x*y^2", 2, 2), JetBound(8));
    CHECK(s.quad_rank == 0);
    CHECK(s.residual == poly("x^2+y^3+x*y^2", 2, 2));
  }
}

TEST_CASE("split transfers mu and tau") {
  std::mt19937_64 rng(17);
  for (std::uint64_t p : {0, 3, 5, 2}) {
    const auto fld = testing::field(p);
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
      const std::size_t n = p == 2 ? 3 : 2 + static_cast<std::size_t>(rng() % 2);
      const Polynomial quad = p == 2 ? poly("x*y+z^3", 2, n) : testing::random_poly(rng, fld, n, 2, 2, 3);
      Polynomial f = quad + testing::random_poly(rng, fld, n, 3, 5, 4);
      if (f.is_zero() || *order_of(f) < 2) continue;
      const auto s = split(f, JetBound(12));
      const auto mu = milnor_number(f, JetBound(12));
      const auto tau = tjurina_number(f, JetBound(12));
      const bool pure_pairs = p != 2 || s.quadratic.squares.empty();
      if (!s.residual_in_corank_vars() || !pure_pairs) continue;
      const Polynomial r = *s.residual_in_corank_vars();
      if (mu.value.finite && mu.value.value < 8) {
        CHECK(milnor_number(r, JetBound(12)).value.value == mu.value.value);
        ++checked;
      }
      if (tau.value.finite && tau.value.value < 8) {
        CHECK(tjurina_number(r, JetBound(12)).value.value == tau.value.value);
      }
    }
    CHECK(checked > 3);
  }
}

TEST_CASE("split rank and residual invariants survive coordinate changes") {
  std::mt19937_64 rng(29);
  for (std::uint64_t p : {0, 3, 7, 2}) {
    const auto fld = testing::field(p);
    int compared = 0;
    for (int i = 0; i < 25; ++i) {
      const std::size_t n = 3;
      const Polynomial base = p == 2 ? poly("x*y+z^3", 2, n) + testing::random_poly(rng, fld, n, 3, 4, 3)
                                     : poly("x^2+y^2+z^4", p, n) + testing::random_poly(rng, fld, n, 3, 4, 3);
      if (*order_of(base) < 2) continue;
      const JetBound N(10);
      const auto phi = random_automorphism(n, fld, N, rng(), false);
      const Polynomial moved = substitute_jet(base, phi);
      const auto a = split(base, N);
      const auto b = split(moved, N);
      CHECK(a.quad_rank == b.quad_rank);
      CHECK(substitute_jet(moved, b.transform) == b.quad_form + b.residual);
      if (!a.residual_in_corank_vars() || !b.residual_in_corank_vars()) continue;
      const auto mu_a = milnor_number(*a.residual_in_corank_vars(), N);
      const auto mu_b = milnor_number(*b.residual_in_corank_vars(), N);
      if (mu_a.value.finite && mu_a.value.value < 6) {
        CHECK(mu_b.value.finite);
        CHECK(mu_a.value.value == mu_b.value.value);
        const auto tau_a = tjurina_number(*a.residual_in_corank_vars(), N);
        const auto tau_b = tjurina_number(*b.residual_in_corank_vars(), N);
        CHECK(tau_a.value.value == tau_b.value.value);
        ++compared;
      }
    }
    INFO("p=" << p);
    CHECK(compared > 5);
  }
}
