#include <algorithm>
#include <random>
#include <set>

#include "classify/internal.hpp"
#include "doctest.h"
#include "singclass/automorphism.hpp"
#include "singclass/classify.hpp"
#include "singclass/errors.hpp"
#include "singclass/stdbasis.hpp"
#include "support.hpp"

using namespace singclass;
using testing::poly;

namespace {

const JetBound kCap(64);

ClassLabel contact(const char* f, std::uint64_t p, std::size_t n) { return classify_contact(poly(f, p, n), kCap); }

// tau by the dense jet oracle: the first level where two consecutive
// truncations agree.
std::uint64_t oracle_tau(const Polynomial& f) {
  const IdealGens ideal = tjurina_ideal(f);
  std::uint64_t prev = jet_quotient_dim_oracle(ideal, JetBound(2));
  for (int n = 3; n <= 40; ++n) {
    const std::uint64_t d = jet_quotient_dim_oracle(ideal, JetBound(n));
    if (d == prev) return d;
    prev = d;
  }
  FAIL("oracle did not stabilize");
  return 0;
}

// F_{p^k} = F_p[t]/(m), m monic of degree k without roots (irreducible for k <= 3).
struct Ext {
  std::uint64_t p;
  std::vector<std::uint64_t> m;  // low to high, monic, degree k

  std::size_t k() const { return m.size() - 1; }
  using El = std::vector<std::uint64_t>;

  El mul(const El& a, const El& b) const {
    std::vector<std::uint64_t> r(2 * k(), 0);
    for (std::size_t i = 0; i < k(); ++i) {
      for (std::size_t j = 0; j < k(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    for (std::size_t d = r.size(); d-- > k();) {
      const std::uint64_t c = r[d];
      for (std::size_t i = 0; i <= k(); ++i) r[d - k() + i] = (r[d - k() + i] + (p - c) * m[i] % p) % p;
    }
    r.resize(k());
    return r;
  }
  El add(const El& a, const El& b) const {
    El r(k());
    for (std::size_t i = 0; i < k(); ++i) r[i] = (a[i] + b[i]) % p;
    return r;
  }
  El scalar(std::uint64_t c) const {
    El r(k(), 0);
    r[0] = c % p;
    return r;
  }
  std::vector<El> elements() const {
    std::vector<El> out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k(); ++i) total *= p;
    for (std::uint64_t v = 0; v < total; ++v) {
      El e(k());
      std::uint64_t w = v;
      for (std::size_t i = 0; i < k(); ++i, w /= p) e[i] = w % p;
      out.push_back(e);
    }
    return out;
  }

  static Ext make(std::uint64_t p, std::size_t k) {
    std::vector<std::uint64_t> m(k + 1, 0);
    m[k] = 1;
    const std::uint64_t count = k == 2 ? p * p : p * p * p;
    for (std::uint64_t v = 0; v < count; ++v) {
      std::uint64_t w = v;
      for (std::size_t i = 0; i < k; ++i, w /= p) m[i] = w % p;
      bool root = false;
      for (std::uint64_t x = 0; x < p && !root; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t i = k + 1; i-- > 0;) acc = (acc * x + m[i]) % p;
        root = acc == 0;
      }
      if (!root) return Ext{p, m};
    }
    FAIL("no irreducible polynomial");
    return Ext{p, m};
  }
};

// Distinct roots in P^1 over the closure of c0 x^3 + c1 x^2 y + c2 x y^2 + c3 y^3.
std::size_t closure_roots(const std::array<std::uint64_t, 4>& c, std::uint64_t p) {
  std::size_t base = 0;
  std::size_t total = 0;
  for (std::size_t k : {2u, 3u}) {
    const Ext ext = Ext::make(p, k);
    std::size_t found = 0;
    for (const auto& x : ext.elements()) {
      auto v = ext.scalar(c[0]);
      for (std::size_t i = 1; i < 4; ++i) v = ext.add(ext.mul(v, x), ext.scalar(c[i]));
      if (std::all_of(v.begin(), v.end(), [](std::uint64_t e) { return e == 0; })) {
        ++found;
        if (std::all_of(x.begin() + 1, x.end(), [](std::uint64_t e) { return e == 0; }) && k == 2) ++base;
      }
    }
    total += found;
  }
  // y = 0 is a root exactly when the x^3 coefficient vanishes.
  return total - base + (c[0] == 0 ? 1 : 0);
}

}  // namespace

TEST_CASE("contact examples") {
  CHECK(contact("x^3+y^4", 7, 2) == ClassLabel::simple(Family::E, 6, 0));
  CHECK(contact("x^2*y+y^3", 0, 2) == ClassLabel::simple(Family::D, 4));
  CHECK(contact("x^3+y^4+x^2*y^2", 3, 2) == ClassLabel::simple(Family::E, 6, 1));
  CHECK(contact("x+y^2", 0, 2).family == Family::Smooth);
  CHECK(contact("x^2+y^2+z^2", 5, 3) == ClassLabel::simple(Family::A, 1));
  CHECK(contact("x^2+y^7", 0, 2) == ClassLabel::simple(Family::A, 6));
}

TEST_CASE("y^2+x^3y and y^2+x^3y+x^5 are different contact classes in char 2") {
  const ClassLabel f = contact("y^2+x^3*y", 2, 2);
  const ClassLabel g = contact("y^2+x^3*y+x^5", 2, 2);
  CHECK(f == ClassLabel::simple(Family::A, 5));
  CHECK(g == ClassLabel::simple(Family::A, 4, 1));
  CHECK_FALSE(f == g);
}

TEST_CASE("beyond the tables") {
  CHECK(contact("x^3+y^3+z^3", 0, 3).family == Family::NotSimple);
  CHECK(contact("x^4+y^4", 0, 2).family == Family::NotSimple);
  CHECK(contact("x^3+y^6", 5, 2).family == Family::NotSimple);
  CHECK(contact("x^3+y^6", 2, 2).family == Family::NotSimple);
  CHECK(classify_contact(poly("x^3+y^3+z^3+w^3", 2, std::vector<std::string>{"x", "y", "z", "w"}), kCap).family ==
        Family::NotSimple);
}

TEST_CASE("non-isolated germs") {
  CHECK(contact("x^2", 0, 2).family == Family::AInf);
  CHECK(classify_contact(poly("a^2*b+c^2", 0, std::vector<std::string>{"a", "b", "c"}), kCap).family ==
        Family::DInf);
  const ClassLabel sq = contact("x^2*y^2", 0, 2);
  CHECK(sq.family == Family::Unclassified);
  CHECK(sq.reason == "non-isolated, not recognized");
  CHECK(contact("x*y", 2, 3).family == Family::AInf);
  CHECK(contact("x^2+y^6", 2, 2).family == Family::AInf);
  CHECK(contact("x^2+x*y^3+y^6", 2, 2) == ClassLabel::simple(Family::A, 5));
  CHECK(contact("x^2*y", 2, 2).family == Family::DInf);
  CHECK(contact("x^4+y^4", 2, 2).family == Family::Unclassified);
}

TEST_CASE("table tau values agree with the jet oracle") {
  for (std::uint64_t p : {0, 2, 3, 5, 7}) {
    for (std::size_t n : {1, 2, 3}) {
      if (n == 3 && p != 2) continue;
      for (const auto& row : contact_normal_forms(testing::field(p), n, 8)) {
        INFO("p=" << p << " " << row.label.display() << " " << row.form.to_string());
        CHECK(row.tau == oracle_tau(row.form));
      }
    }
  }
}

TEST_CASE("pinned variant tau values") {
  auto tau_of = [](std::uint64_t p, std::size_t n, Family fam, unsigned idx, unsigned var) {
    for (const auto& row : detail::family_rows(testing::field(p), n, fam, idx)) {
      if (row.label.variant == var) return oracle_tau(row.form);
    }
    FAIL("row missing");
    return std::uint64_t{0};
  };
  CHECK(tau_of(3, 2, Family::E, 6, 0) == 9);
  CHECK(tau_of(3, 2, Family::E, 6, 1) == 7);
  CHECK(tau_of(3, 2, Family::E, 8, 2) == 8);
  CHECK(tau_of(5, 2, Family::E, 8, 1) == 8);
  CHECK(tau_of(2, 2, Family::A, 8, 3) == 9);
  CHECK(tau_of(2, 2, Family::D, 7, 1) == 10);
  CHECK(tau_of(2, 3, Family::E, 7, 2) == 10);
  CHECK(tau_of(2, 3, Family::E, 8, 4) == 8);
}

TEST_CASE("separation: distinct rows get distinct labels") {
  for (std::uint64_t p : {0, 2, 3, 5, 7}) {
    for (std::size_t n : {1, 2, 3, 4}) {
      std::set<std::string> seen;
      for (const auto& row : contact_normal_forms(testing::field(p), n, 8)) {
        INFO("p=" << p << " n=" << n << " " << row.form.to_string());
        CHECK(seen.insert(row.label.display()).second);
        CHECK(classify_contact(row.form, kCap) == row.label);
      }
    }
  }
}

TEST_CASE("labels survive random contact moves") {
  std::mt19937_64 rng(4242);
  for (std::uint64_t p : {0, 2, 3, 5}) {
    const FieldSpec fld = testing::field(p);
    for (std::size_t n : {2, 3}) {
      for (const auto& row : contact_normal_forms(fld, n, 6)) {
        const auto phi = random_automorphism(n, fld, JetBound(16), rng(), true);
        const Polynomial g = substitute_jet(row.form, phi);
        INFO("p=" << p << " " << row.label.display() << " " << g.to_string());
        CHECK(classify_contact(g, kCap) == row.label);
      }
    }
  }
}

TEST_CASE("cubic multiplicity type matches root counts over the closure") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const FieldSpec fld = testing::field(p);
    std::mt19937_64 rng(p);
    const int trials = p <= 3 ? static_cast<int>(p * p * p * p) : 300;
    for (int t = 0; t < trials; ++t) {
      std::array<std::uint64_t, 4> c{};
      std::uint64_t w = static_cast<std::uint64_t>(t);
      for (auto& ci : c) {
        if (p <= 3) {
          ci = w % p;
          w /= p;
        } else {
          ci = rng() % p;
        }
      }
      if (std::all_of(c.begin(), c.end(), [](std::uint64_t v) { return v == 0; })) continue;
      detail::BinaryForm form;
      for (auto ci : c) form.c.push_back(Scalar::from_int(fld, static_cast<long>(ci)));
      const auto analysis = detail::analyze_cubic(form, fld);
      const std::size_t roots = closure_roots(c, p);
      INFO("p=" << p << " c=" << c[0] << "," << c[1] << "," << c[2] << "," << c[3]);
      const detail::CubicType expected = roots == 3   ? detail::CubicType::Distinct
                                         : roots == 2 ? detail::CubicType::DoubleRoot
                                                      : detail::CubicType::TripleRoot;
      CHECK(analysis.type == expected);
    }
  }
}

TEST_CASE("right examples") {
  CHECK(classify_right(poly("x^2+y^3", 3, 2), kCap).family == Family::NotSimple);
  CHECK(classify_right(poly("x^2+y^3", 3, 2), kCap).reason.find("p-2") != std::string::npos);
  const auto vars4 = std::vector<std::string>{"a", "b", "c", "d"};
  CHECK(classify_right(poly("a*b+c*d", 2, vars4), kCap) == ClassLabel::simple(Family::A, 1));
  CHECK(classify_right(poly("x^2+y^3", 2, 2), kCap).family == Family::NotSimple);
  CHECK(classify_right(poly("x*y+z^2", 2, 3), kCap).family == Family::NotSimple);
  CHECK(classify_right(poly("x^2+y^4", 7, 2), kCap) == ClassLabel::simple(Family::A, 3));
  CHECK(classify_right(poly("x^3+y^4", 7, 2), kCap) == ClassLabel::simple(Family::E, 6, 0));
  CHECK(classify_right(poly("x^3+y^5", 5, 2), kCap).family == Family::NotSimple);
  CHECK(classify_right(poly("x^4", 5, 1), kCap) == ClassLabel::simple(Family::A, 3));
  CHECK(classify_right(poly("x^5", 5, 1), kCap).family == Family::NotSimple);
}

TEST_CASE("right-simple list is finite with pinned sizes") {
  CHECK(right_simple_normal_forms(testing::field(3), 2).size() == 1);
  CHECK(right_simple_normal_forms(testing::field(5), 2).size() == 6);
  CHECK(right_simple_normal_forms(testing::field(7), 2).size() == 11);
  CHECK(right_simple_normal_forms(testing::field(7), 1).size() == 5);
  CHECK(right_simple_normal_forms(testing::field(2), 4).size() == 1);
  CHECK(right_simple_normal_forms(testing::field(2), 3).empty());
  for (std::uint64_t p : {3, 5, 7}) {
    for (std::size_t n : {1, 2, 3}) {
      for (const auto& row : right_simple_normal_forms(testing::field(p), n)) {
        INFO("p=" << p << " " << row.form.to_string());
        CHECK(classify_right(row.form, kCap) == row.label);
      }
    }
  }
}

TEST_CASE("right and contact agree over Q") {
  for (std::size_t n : {1, 2, 3}) {
    for (const auto& row : contact_normal_forms(testing::field(0), n, 7)) {
      CHECK(classify_right(row.form, kCap) == classify_contact(row.form, kCap));
    }
  }
  for (const char* f : {"x^4+y^4", "x^2*y^2", "x^3+y^7", "x^2", "x*y"}) {
    CHECK(classify_right(poly(f, 0, 2), kCap) == classify_contact(poly(f, 0, 2), kCap));
  }
}

TEST_CASE("univariate examples") {
  const auto r = classify_univariate(poly("x^5", 7, 1), kCap);
  CHECK(r.mu.value.value == 4);
  CHECK(r.simple);
  CHECK(r.determinacy == 5);
  CHECK(r.modality == 0);
  REQUIRE(r.normal_form_hint.has_value());
  CHECK(*r.normal_form_hint == poly("x^5", 7, 1));
  for (std::uint64_t p : {3, 5}) {
    const std::string text = "x^" + std::to_string(p) + "+x^" + std::to_string(p + 1);
    const auto u = classify_univariate(poly(text, p, 1), kCap);
    CHECK(u.e == 0);
    CHECK(u.q == p + 1);
    CHECK(u.mult == p);
    CHECK(u.k == 1);
    CHECK(u.determinacy == p + 1);
    CHECK(u.mu.value.value == p);
    CHECK(u.modality == 1);
    CHECK_FALSE(u.simple);
    CHECK_FALSE(u.normal_form_hint.has_value());
  }
}

TEST_CASE("univariate k from the support") {
  // x^4 + x^6 + x^7 over F_2: e(4)=2, e(6)=1, q=7, k = max(ceil(3/3), ceil(1/1)) = 1.
  const auto a = classify_univariate(poly("x^4+x^6+x^7", 2, 1), kCap);
  CHECK(a.q == 7);
  CHECK(a.k == 1);
  CHECK(a.determinacy == 7);
  // x^9 + x^10 over F_3: e(9)=2, q=10, k = ceil(1/8) = 1; x^9 + x^11 over F_2 similar.
  CHECK(classify_univariate(poly("x^9+x^10", 3, 1), kCap).determinacy == 10);
  // x^2 + x^9 over F_2: q=9, k = ceil(7/1) = 7, d = 9 + 6 = 15.
  const auto b = classify_univariate(poly("x^2+x^9", 2, 1), kCap);
  CHECK(b.k == 7);
  CHECK(b.determinacy == 15);
  CHECK(b.mu.value.value == 8);
  CHECK(b.modality == 4);
}

TEST_CASE("univariate errors") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code([] { classify_univariate(poly("x^2+y^3", 5, 2), kCap); }) == ErrorCode::NotUnivariate);
  CHECK(code([] { classify_univariate(poly("x+x^2", 5, 1), kCap); }) == ErrorCode::OrderTooSmall);
  CHECK(code([] { classify_univariate(poly("x^5", 5, 1), kCap); }) == ErrorCode::QNotFound);
  CHECK(code([] { classify_univariate(poly("x^3", 0, 1), kCap); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("label names") {
  CHECK(ClassLabel::simple(Family::A, 4, 1).display() == "A_4^1");
  CHECK(ClassLabel::simple(Family::E, 6).name() == "E_6");
  CHECK(ClassLabel::simple(Family::DInf, 0).name() == "D_inf");
  CHECK(ClassLabel::not_simple("x").name() == "NotSimple");
}
