#include "doctest.h"
#include "singclass/determinacy.hpp"
#include "singclass/errors.hpp"
#include "support.hpp"

using namespace singclass;
using testing::poly;

namespace {
const JetBound kCap(64);
const char* kF = "y^8+x^8*y^4+x^23";
}  // namespace

TEST_CASE("contact bounds of y^8+x^8y^4+x^23") {
  const auto c3 = contact_determinacy_bound(poly(kF, 3, 2), kCap);
  CHECK(c3.highcorner == Monomial(2, {22, 2}));
  CHECK(c3.k_star == 23);
  CHECK(c3.example_reading == 40);
  CHECK(c3.bound_general == 40);
  CHECK_FALSE(c3.bound_char0.has_value());
  const auto c2 = contact_determinacy_bound(poly(kF, 2, 2), kCap);
  CHECK(c2.highcorner == Monomial(2, {21, 7}));
  CHECK(c2.example_reading == 48);
  const auto c0 = contact_determinacy_bound(poly(kF, 0, 2), kCap);
  REQUIRE(c0.bound_char0.has_value());
  CHECK(*c0.bound_char0 == 24);
}

TEST_CASE("right bounds of y^8+x^8y^4+x^23") {
  const auto r3 = right_determinacy_bound(poly(kF, 3, 2), kCap);
  CHECK(r3.highcorner == Monomial(2, {29, 2}));
  CHECK(r3.example_reading == 56);
  CHECK(r3.bound_general == 54);
  const auto r0 = right_determinacy_bound(poly(kF, 0, 2), kCap);
  REQUIRE(r0.bound_char0.has_value());
  CHECK(*r0.bound_char0 == 31);
  CHECK_THROWS_AS(right_determinacy_bound(poly(kF, 2, 2), kCap), Error);
}

TEST_CASE("y^2+x^3y contact bound is sharp at 6 in char 2") {
  const auto c = contact_determinacy_bound(poly("y^2+x^3*y", 2, 2), kCap);
  CHECK(c.bound_general == 6);
  CHECK(c.example_reading == 6);
  CHECK_FALSE(c.bound_char0.has_value());
  CHECK(c.bound_mu_tau == 10);
}

TEST_CASE("nondegenerate quadric") {
  const auto r = right_determinacy_bound(poly("x^2+y^2", 0, 2), kCap);
  CHECK(r.bound_mu_tau == 2);
  CHECK(r.bound_general >= 2);
  CHECK(*r.bound_char0 >= 2);
}

TEST_CASE("bounds never drop below the order") {
  for (const char* f : {"x^3+y^4", "x^2*y+y^5", "x^4+y^5+x^2*y^2", "x^3+x*y^3"}) {
    for (std::uint64_t p : {0, 7, 11}) {
      for (auto eq : {Equivalence::Right, Equivalence::Contact}) {
        const Polynomial g = poly(f, p, 2);
        const auto b = eq == Equivalence::Right ? right_determinacy_bound(g, kCap) : contact_determinacy_bound(g, kCap);
        CHECK(b.bound_general >= b.order);
        CHECK(b.example_reading >= b.order);
        CHECK(b.bound_mu_tau >= b.order);
        if (b.bound_char0) CHECK(*b.bound_char0 >= b.order);
      }
    }
  }
}
