#include <set>

#include "doctest.h"
#include "singclass/deform.hpp"
#include "singclass/errors.hpp"
#include "support.hpp"

using namespace singclass;
using testing::poly;

namespace {

const JetBound kCap(64);

std::vector<Polynomial> polys(const std::vector<std::string>& texts, std::uint64_t p, std::size_t n) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(t, p, n));
  return out;
}

std::vector<Scalar> ints(FieldSpec field, const std::vector<long>& v) {
  std::vector<Scalar> out;
  for (long x : v) out.push_back(Scalar::from_int(field, x));
  return out;
}

std::uint64_t tau_of_label(const ClassLabel& l, std::uint64_t p, std::size_t n) {
  if (l.family == Family::Smooth) return 0;
  for (const auto& row : contact_normal_forms(FieldSpec::make(p), n, 10)) {
    if (row.label == l) return row.tau;
  }
  FAIL("label not in table: " << l.display());
  return 0;
}

}  // namespace

TEST_CASE("tjurina basis unfoldings") {
  const Unfolding a2 = tjurina_basis_unfolding(poly("x^2+y^3", 0, 2), kCap);
  CHECK(a2.basis == polys({"1", "y"}, 0, 2));
  CHECK(a2.nparams() == 2);

  const Unfolding a1 = tjurina_basis_unfolding(poly("x^2", 0, 1), kCap);
  CHECK(a1.basis == polys({"1"}, 0, 1));

  const Unfolding ex = tjurina_basis_unfolding(poly("y^2+x^3*y", 2, 2), kCap);
  CHECK(ex.basis == polys({"1", "x", "y", "x^2", "x*y"}, 2, 2));
}

TEST_CASE("tjurina basis size matches the dense oracle and avoids the leading ideal") {
  for (const auto& [text, p] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"x^2*y+y^4", 0}, {"x^3+y^4", 3}, {"x^3+x*y^3", 0}, {"y^2+x^5", 2}, {"x^2+y^3+z^4", 5}}) {
    const std::size_t n = text.find('z') == std::string::npos ? 2 : 3;
    const Polynomial f = poly(text, p, n);
    const Unfolding u = tjurina_basis_unfolding(f, kCap);
    CHECK(u.nparams() == jet_quotient_dim_oracle(tjurina_ideal(f), JetBound(20)));
    for (std::size_t i = 0; i < u.basis.size(); ++i) {
      for (std::size_t j = i + 1; j < u.basis.size(); ++j) CHECK(u.basis[i] != u.basis[j]);
      IdealGens ideal = tjurina_ideal(f);
      ideal.push_back(u.basis[i]);
      CHECK(jet_quotient_dim_oracle(ideal, JetBound(20)) < u.nparams());
    }
  }
}

TEST_CASE("unfolding of a non-isolated germ is rejected") {
  CHECK_THROWS_AS(tjurina_basis_unfolding(poly("x^2", 0, 2), JetBound(20)), Error);
  try {
    tjurina_basis_unfolding(poly("x^2*y^2", 0, 2), JetBound(20));
    FAIL("expected NotIsolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIsolated);
  }
}

TEST_CASE("evaluate unfolding") {
  const FieldSpec q = FieldSpec::rationals();
  const Unfolding u = tjurina_basis_unfolding(poly("x^2+y^3", 0, 2), kCap);
  CHECK(evaluate_unfolding(u, ints(q, {0, 0})) == u.base);
  CHECK(evaluate_unfolding(u, {Scalar::from_fraction(q, 1, 7), Scalar::from_int(q, 0)}) ==
        poly("x^2+y^3+1/7", 0, 2));
  CHECK(evaluate_unfolding(u, ints(q, {0, 1})) == poly("x^2+y^3+y", 0, 2));
  try {
    evaluate_unfolding(u, ints(q, {1}));
    FAIL("expected ArityMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ArityMismatch);
  }
}

TEST_CASE("parameter sampling is deterministic and in range") {
  const Unfolding u = tjurina_basis_unfolding(poly("x^2*y+y^4", 0, 2), kCap);
  std::uint64_t s1 = 42, s2 = 42;
  for (int i = 0; i < 20; ++i) {
    const auto a = sample_parameters(u, s1);
    CHECK(a == sample_parameters(u, s2));
    for (const auto& c : a) {
      CHECK(abs(c.rational().get_num()) <= 9);
      CHECK(c.rational().get_den() <= 9);
    }
  }
}

TEST_CASE("semicontinuity scans") {
  SUBCASE("A_2 over Q") {
    const ScanReport r = semicontinuity_scan(tjurina_basis_unfolding(poly("x^2+y^3", 0, 2), kCap), 100, 1, kCap);
    CHECK(r.samples == 100);
    CHECK(r.tau_base == 2);
    CHECK(r.max_tau_observed <= 2);
    CHECK(r.mu_base == 2u);
    CHECK(r.violations.empty());
  }
  SUBCASE("degenerate basis {1}") {
    const Unfolding u = tjurina_basis_unfolding(poly("x^2", 0, 1), kCap);
    const ScanReport r = semicontinuity_scan(u, 20, 3, kCap);
    CHECK(r.max_tau_observed <= 1);
    CHECK(r.violations.empty());
  }
  SUBCASE("x^5+y^4 in char 5, infinite mu") {
    const ScanReport r = semicontinuity_scan(tjurina_basis_unfolding(poly("x^5+y^4", 5, 2), kCap), 30, 7, kCap);
    CHECK(r.tau_base == 15);
    CHECK_FALSE(r.mu_base.has_value());
    CHECK(r.violations.empty());
  }
  SUBCASE("char 2 and char 3 bases") {
    for (const auto& [text, p] : std::vector<std::pair<std::string, std::uint64_t>>{
             {"y^2+x^3*y", 2}, {"x^2*y+x*y^3", 2}, {"x^3+y^4+x^2*y^2", 3}, {"x^2*y+y^5", 0}}) {
      const ScanReport r = semicontinuity_scan(tjurina_basis_unfolding(poly(text, p, 2), kCap), 30, 11, kCap);
      CHECK_MESSAGE(r.violations.empty(), text);
      CHECK(r.max_tau_observed <= r.tau_base);
    }
  }
}

TEST_CASE("adjacency scans") {
  const auto a2 = adjacency_scan(tjurina_basis_unfolding(poly("x^2+y^3", 0, 2), kCap), 60, 5, kCap);
  const std::set<std::string> allowed{"A_2", "A_1", "Smooth"};
  for (const auto& l : a2) CHECK(allowed.count(l.display()) == 1);

  const auto a1 = adjacency_scan(tjurina_basis_unfolding(poly("x^2+y^2", 0, 2), kCap), 20, 5, kCap);
  for (const auto& l : a1) CHECK((l.display() == "A_1" || l.display() == "Smooth"));

  const auto d4 = adjacency_scan(tjurina_basis_unfolding(poly("x^2*y+y^3", 0, 2), kCap), 60, 9, kCap);
  for (const auto& l : d4) {
    REQUIRE(l.is_simple());
    CHECK(tau_of_label(l, 0, 2) <= 4);
  }
  CHECK(d4 == adjacency_scan(tjurina_basis_unfolding(poly("x^2*y+y^3", 0, 2), kCap), 60, 9, kCap));
}
