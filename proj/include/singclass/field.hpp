#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace singclass {

/// Ground field descriptor: characteristic 0 is Q, otherwise the prime field F_p.
class FieldSpec {
 public:
  FieldSpec() = default;

  /// Throws NonPrimeCharacteristic unless `characteristic` is 0 or a prime
  /// below 2^31.
  static FieldSpec make(std::uint64_t characteristic);
  static FieldSpec rationals() { return FieldSpec{}; }

  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  std::string name() const;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator, residues in [0, p).
class Scalar {
 public:
  explicit Scalar(FieldSpec field = FieldSpec{}) : field_(field) {}

  static Scalar from_int(FieldSpec field, long value);
  static Scalar from_mpz(FieldSpec field, const mpz_class& value);
  /// Throws DivisionByZeroInCoefficient when `den` vanishes in the field.
  static Scalar from_fraction(FieldSpec field, const mpz_class& num, const mpz_class& den);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  std::uint64_t residue() const noexcept { return residue_; }
  const mpq_class& rational() const noexcept { return rational_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  /// Multiplicative inverse; the caller guarantees the value is nonzero.
  Scalar inverse() const;
  Scalar operator/(const Scalar& other) const { return *this * other.inverse(); }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Reduced fraction ("-3/4") or least non-negative residue.
  std::string to_string() const;
  std::size_t hash() const;

 private:
  FieldSpec field_;
  std::uint64_t residue_ = 0;
  mpq_class rational_;
};

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

}  // namespace singclass
