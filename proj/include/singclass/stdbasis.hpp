#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "singclass/polynomial.hpp"

namespace singclass {

using IdealGens = std::vector<Polynomial>;

/// j(f) = <df/dx_1, ..., df/dx_n>.
IdealGens jacobian_ideal(const Polynomial& f);
/// tj(f) = <f> + j(f).
IdealGens tjurina_ideal(const Polynomial& f);
/// m^k * I, generated by all products of degree-k monomials with generators.
IdealGens times_m_power(const IdealGens& ideal, unsigned k);
IdealGens concat(const IdealGens& a, const IdealGens& b);

/// Reduced standard basis of (I + m^{N+1}) / m^{N+1} for the ds ordering.
class StandardBasis {
 public:
  StandardBasis(FieldSpec field, std::size_t nvars, JetBound bound, std::vector<Polynomial> elements);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  JetBound bound() const noexcept { return bound_; }
  /// Monic, fully reduced, sorted by leading monomial (largest first).
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  /// Leading monomials of elements(): the minimal generators of L(I).
  const std::vector<Monomial>& staircase() const noexcept { return staircase_; }
  const std::vector<Monomial::Lanes>& staircase_lanes() const noexcept { return lanes_; }
  /// True iff m^k lies in the leading ideal for some k <= N; then the
  /// quotient is finite and N-independent.
  bool complete() const noexcept { return complete_; }
  /// Degree of the largest standard monomial of degree <= N (or -1 if 1 is
  /// in the ideal).
  int max_standard_degree() const noexcept { return max_standard_degree_; }
  /// Number of standard monomials of degree <= N, saturating at kCountCap.
  std::uint64_t standard_count() const noexcept { return standard_count_; }
  /// The standard-monomial walk stopped at kCountCap.
  bool saturated() const noexcept { return saturated_; }

  static constexpr std::uint64_t kCountCap = 1'000'000;

  /// Index of the element whose leading monomial divides `m`, preferring the
  /// largest leading monomial; elements().size() if none.
  std::size_t find_reducer(const Monomial& m) const;
  bool in_leading_ideal(const Monomial& m) const { return find_reducer(m) < elements_.size(); }

 private:
  FieldSpec field_;
  std::size_t nvars_;
  JetBound bound_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> staircase_;
  std::vector<Monomial::Lanes> lanes_;
  bool complete_ = false;
  int max_standard_degree_ = -1;
  std::uint64_t standard_count_ = 0;
  bool saturated_ = false;
};

/// Throws FieldMismatch / ArityMismatch for inconsistent generators and
/// InvalidArgument for an empty generator list.
StandardBasis standard_basis(const IdealGens& ideal, JetBound bound);

/// Remainder with no term in the leading ideal; zero iff f lies in the ideal
/// at the bound.
Polynomial normal_form(const Polynomial& f, const StandardBasis& sb);

/// Standard monomials (degree <= N, outside the leading ideal), sorted in
/// descending ds order. Throws TooLarge beyond StandardBasis::kCountCap.
std::vector<Monomial> standard_monomials(const StandardBasis& sb);

/// Exact dimension or an honest "not finite up to N" with a lower bound.
struct DimValue {
  bool finite = false;
  std::uint64_t value = 0;
  int bound = 0;

  friend bool operator==(const DimValue&, const DimValue&) = default;
};

DimValue quotient_dim(const StandardBasis& sb);
DimValue quotient_dim(const IdealGens& ideal, JetBound bound);

/// The smallest standard monomial in ds (maximal degree, then smallest in
/// reverse lexicographic order); nullopt unless complete().
std::optional<Monomial> highcorner(const StandardBasis& sb);

/// m^k contained in I (at the bound). Throws BoundTooSmall if k > N and
/// TooLarge when the standard-monomial walk saturated.
bool contains_m_power(const IdealGens& ideal, unsigned k, JetBound bound);
bool contains_m_power(const StandardBasis& sb, unsigned k);

/// dim K[x]/(I + m^{N+1}) by dense row reduction of all monomial multiples
/// of the generators; independent of the standard-basis code.
std::uint64_t jet_quotient_dim_oracle(const IdealGens& ideal, JetBound bound);

/// All monomials of degree <= N in descending ds order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned degree);

}  // namespace singclass
