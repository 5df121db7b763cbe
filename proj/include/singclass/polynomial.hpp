#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "singclass/field.hpp"
#include "singclass/monomial.hpp"

namespace singclass {

/// Truncation level N: products and substitutions drop every term of total
/// degree > N, i.e. arithmetic happens in K[x]/m^{N+1}.
class JetBound {
 public:
  explicit JetBound(int value);
  int value() const noexcept { return value_; }
  friend bool operator==(const JetBound&, const JetBound&) = default;

 private:
  int value_;
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse polynomial with nonzero coefficients, terms stored in descending
/// ds order (lowest degree first). All operations return new values.
class Polynomial {
 public:
  Polynomial(FieldSpec field, std::size_t nvars);

  static Polynomial constant(FieldSpec field, std::size_t nvars, const Scalar& value);
  static Polynomial constant(FieldSpec field, std::size_t nvars, long value);
  static Polynomial variable(FieldSpec field, std::size_t nvars, std::size_t index);
  static Polynomial monomial(FieldSpec field, const Monomial& mono, const Scalar& coeff);
  /// Combines duplicates and drops zeros; input order is irrelevant.
  static Polynomial from_terms(FieldSpec field, std::size_t nvars, std::vector<Term> terms);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Leading term w.r.t. ds. Precondition: nonzero.
  const Term& leading() const { return terms_.front(); }
  Scalar coefficient(const Monomial& mono) const;
  Scalar constant_term() const;
  unsigned max_degree() const;

  /// jet_k: drops terms of degree > k.
  Polynomial jet(int k) const;
  Polynomial homogeneous_part(unsigned degree) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m, const Scalar& c) const;
  /// m * c * this truncated at `bound`.
  Polynomial times_monomial_truncated(const Monomial& m, const Scalar& c, int bound) const;
  Polynomial monic() const;
  /// All terms except the leading one.
  Polynomial tail() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  /// Untruncated product; throws ExponentOverflow if a degree exceeds limits.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// this - c * m * g, truncated at `bound` (used by the reducers).
  Polynomial minus_scaled_multiple(const Scalar& c, const Monomial& m, const Polynomial& g,
                                   int bound) const;

  /// Canonical print: ds-descending terms, "1/2*x^2*y", "-x", "3".
  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

  std::size_t hash() const;

 private:
  void require_compatible(const Polynomial& other) const;
  friend Polynomial merge_add(const Polynomial&, const Polynomial&, bool);

  FieldSpec field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Product with all terms of total degree > N removed. Throws FieldMismatch.
Polynomial mul_truncated(const Polynomial& f, const Polynomial& g, JetBound bound);
/// Repeated truncated multiplication.
Polynomial pow_truncated(const Polynomial& f, unsigned exponent, JetBound bound);
/// Formal partial derivative with respect to variable `index` (0-based).
/// Throws IndexOutOfRange.
Polynomial partial_derivative(const Polynomial& f, std::size_t index);
/// ord(f); std::nullopt encodes ord(0) = infinity.
std::optional<unsigned> order_of(const Polynomial& f);

/// x,y,z for n <= 3, x1..xn otherwise.
std::vector<std::string> default_var_names(std::size_t nvars);

}  // namespace singclass
