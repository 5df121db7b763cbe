#include <random>

#include "doctest.h"
#include "singclass/errors.hpp"
#include "singclass/stdbasis.hpp"
#include "support.hpp"

using namespace singclass;
using testing::poly;

namespace {

std::string mono_str(const Monomial& m, std::size_t n) {
  return Polynomial::monomial(FieldSpec::rationals(), m, Scalar::from_int(FieldSpec::rationals(), 1))
      .to_string(default_var_names(n));
}

IdealGens contact_ideal(const Polynomial& f) {
  return concat(times_m_power({f}, 1), times_m_power(jacobian_ideal(f), 2));
}

}  // namespace

TEST_CASE("maximal ideal") {
  const auto sb = standard_basis({poly("x", 0, 2), poly("y", 0, 2)}, JetBound(5));
  REQUIRE(sb.staircase().size() == 2);
  CHECK(quotient_dim(sb) == DimValue{true, 1, 5});
  CHECK(normal_form(poly("x", 0, 2), sb).is_zero());
  CHECK(normal_form(poly("1", 0, 2), sb) == poly("1", 0, 2));
  CHECK(jet_quotient_dim_oracle({poly("x", 0, 2), poly("y", 0, 2)}, JetBound(3)) == 1);
  CHECK(contains_m_power({poly("x", 0, 2), poly("y", 0, 2)}, 1, JetBound(3)));
}

TEST_CASE("Tjurina ideal of y^2+x^3y in characteristic 2") {
  const Polynomial f = poly("y^2+x^3*y", 2, 2);
  const auto sb = standard_basis(tjurina_ideal(f), JetBound(6));
  std::vector<std::string> stairs;
  for (const auto& m : sb.staircase()) stairs.push_back(mono_str(m, 2));
  CHECK(stairs == std::vector<std::string>{"y^2", "x^3", "x^2*y"});
  CHECK(quotient_dim(sb) == DimValue{true, 5, 6});
  CHECK(normal_form(poly("x^5", 2, 2), sb).is_zero());
  for (int n = 5; n <= 9; ++n) CHECK(jet_quotient_dim_oracle(tjurina_ideal(f), JetBound(n)) == 5);
  const auto basis = standard_monomials(sb);
  std::vector<std::string> names;
  for (const auto& m : basis) names.push_back(mono_str(m, 2));
  CHECK(names == std::vector<std::string>{"1", "x", "y", "x^2", "x*y"});
}

TEST_CASE("contact ideal of y^2+x^3y in char 2 contains m^5 but not m^4") {
  const Polynomial f = poly("y^2+x^3*y", 2, 2);
  CHECK(contains_m_power(contact_ideal(f), 5, JetBound(6)));
  CHECK_FALSE(contains_m_power(contact_ideal(f), 4, JetBound(6)));
  CHECK_THROWS_AS(contains_m_power(contact_ideal(f), 7, JetBound(6)), Error);
  const auto sb = standard_basis(contact_ideal(f), JetBound(6));
  CHECK(!normal_form(poly("x^4", 2, 2), sb).is_zero());
}

TEST_CASE("non-isolated Jacobian ideal is not certified") {
  const Polynomial f = poly("x^5+y^4", 5, 2);
  const DimValue d = quotient_dim(jacobian_ideal(f), JetBound(20));
  CHECK_FALSE(d.finite);
  CHECK(d.bound == 20);
}

TEST_CASE("monomial ideals are their own bases") {
  const auto sb = standard_basis(jacobian_ideal(poly("x^4+y^4+z^4", 0, 3)), JetBound(10));
  CHECK(sb.staircase().size() == 3);
  CHECK(quotient_dim(sb).value == 27);
  CHECK(jet_quotient_dim_oracle(jacobian_ideal(poly("x^3+y^3", 0, 2)), JetBound(4)) == 4);
}

TEST_CASE("highcorner goldens for y^8+x^8y^4+x^23") {
  const char* f_text = "y^8+x^8*y^4+x^23";
  {
    const auto sb = standard_basis(contact_ideal(poly(f_text, 3, 2)), JetBound(40));
    REQUIRE(highcorner(sb).has_value());
    CHECK(mono_str(*highcorner(sb), 2) == "x^22*y^2");
  }
  {
    const auto sb = standard_basis(contact_ideal(poly(f_text, 2, 2)), JetBound(40));
    REQUIRE(highcorner(sb).has_value());
    CHECK(mono_str(*highcorner(sb), 2) == "x^21*y^7");
  }
  for (std::uint64_t p : {3, 0}) {
    const auto sb = standard_basis(times_m_power(jacobian_ideal(poly(f_text, p, 2)), 2), JetBound(40));
    REQUIRE(highcorner(sb).has_value());
    CHECK(mono_str(*highcorner(sb), 2) == "x^29*y^2");
  }
}

TEST_CASE("standard basis agrees with the jet oracle on random ideals") {
  std::mt19937_64 rng(2024);
  int certified = 0;
  for (int round = 0; round < 120; ++round) {
    const std::uint64_t p = round % 2 == 0 ? 0 : (round % 4 == 1 ? 2 : 3);
    const auto fld = testing::field(p);
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 3);
    IdealGens ideal;
    const int ngens = static_cast<int>(n) + static_cast<int>(rng() % 2);
    for (int g = 0; g < ngens; ++g) ideal.push_back(testing::random_poly(rng, fld, n, 1, 4, 3));
    const int N = n == 3 ? 8 : 12;
    const auto sb = standard_basis(ideal, JetBound(N));
    const DimValue d = quotient_dim(sb);
    const std::uint64_t oracle = jet_quotient_dim_oracle(ideal, JetBound(N));
    // The truncated quotient always matches the count of standard monomials.
    CHECK(oracle == sb.standard_count());
    if (d.finite) {
      ++certified;
      CHECK(d.value == oracle);
      CHECK(quotient_dim(ideal, JetBound(N + 1)) == DimValue{true, d.value, N + 1});
      if (auto hc = highcorner(sb)) {
        CHECK(contains_m_power(sb, hc->degree() + 1));
        CHECK_FALSE(contains_m_power(sb, hc->degree()));
      }
    } else {
      CHECK(jet_quotient_dim_oracle(ideal, JetBound(N + 1)) >= oracle);
    }
    const Polynomial h = testing::random_poly(rng, fld, n, 0, 5, 5);
    const Polynomial r = normal_form(h, sb);
    CHECK(normal_form(r, sb) == r);
    for (const auto& t : r.terms()) CHECK_FALSE(sb.in_leading_ideal(t.mono));
  }
  CHECK(certified > 20);
}
