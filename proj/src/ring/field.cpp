#include "singclass/field.hpp"

#include <functional>

#include "singclass/errors.hpp"

namespace singclass {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::DivisionByZeroInCoefficient: return "DivisionByZeroInCoefficient";
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NonInvertibleLinearPart: return "NonInvertibleLinearPart";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::NotInMaximalIdeal: return "NotInMaximalIdeal";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::NotIsolated: return "NotIsolated";
    case ErrorCode::NotUnivariate: return "NotUnivariate";
    case ErrorCode::QNotFound: return "QNotFoundUpTo";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      position_(position) {}

void check_internal(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::Internal, what);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::make(std::uint64_t characteristic) {
  if (characteristic == 0) return FieldSpec{};
  if (characteristic >= (std::uint64_t{1} << 31) || !is_prime(characteristic)) {
    throw Error(ErrorCode::NonPrimeCharacteristic,
                "characteristic " + std::to_string(characteristic) +
                    " is neither 0 nor a prime below 2^31");
  }
  return FieldSpec{characteristic};
}

std::string FieldSpec::name() const {
  return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

namespace {

std::uint64_t reduce_mpz(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

Scalar Scalar::from_int(FieldSpec field, long value) {
  Scalar s(field);
  if (field.is_rational()) {
    s.rational_ = value;
  } else {
    const auto p = static_cast<long long>(field.characteristic());
    long long r = static_cast<long long>(value) % p;
    if (r < 0) r += p;
    s.residue_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::from_mpz(FieldSpec field, const mpz_class& value) {
  Scalar s(field);
  if (field.is_rational()) {
    s.rational_ = value;
  } else {
    s.residue_ = reduce_mpz(value, field.characteristic());
  }
  return s;
}

Scalar Scalar::from_fraction(FieldSpec field, const mpz_class& num, const mpz_class& den) {
  Scalar s(field);
  if (field.is_rational()) {
    if (den == 0) throw Error(ErrorCode::DivisionByZeroInCoefficient, "zero denominator");
    s.rational_ = mpq_class(num, den);
    s.rational_.canonicalize();
    return s;
  }
  const std::uint64_t p = field.characteristic();
  const std::uint64_t d = reduce_mpz(den, p);
  if (d == 0) {
    throw Error(ErrorCode::DivisionByZeroInCoefficient,
                "denominator vanishes modulo " + std::to_string(p));
  }
  s.residue_ = reduce_mpz(num, p) * mod_pow(d, p - 2, p) % p;
  return s;
}

bool Scalar::is_zero() const noexcept {
  return field_.is_rational() ? sgn(rational_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const noexcept {
  return field_.is_rational() ? rational_ == 1 : residue_ == 1;
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational()) {
    s.rational_ = -rational_;
  } else if (residue_ != 0) {
    s.residue_ = field_.characteristic() - residue_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (field_.is_rational()) {
    rational_ += other.rational_;
  } else {
    residue_ += other.residue_;
    if (residue_ >= field_.characteristic()) residue_ -= field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  if (field_.is_rational()) {
    rational_ -= other.rational_;
  } else {
    residue_ += field_.characteristic() - other.residue_;
    if (residue_ >= field_.characteristic()) residue_ -= field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (field_.is_rational()) {
    rational_ *= other.rational_;
  } else {
    residue_ = residue_ * other.residue_ % field_.characteristic();
  }
  return *this;
}

Scalar Scalar::inverse() const {
  check_internal(!is_zero(), "inverse of zero scalar");
  Scalar s(field_);
  if (field_.is_rational()) {
    s.rational_ = 1 / rational_;
  } else {
    s.residue_ = mod_pow(residue_, field_.characteristic() - 2, field_.characteristic());
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.rational_ == b.rational_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? rational_.get_str() : std::to_string(residue_);
}

std::size_t Scalar::hash() const {
  if (!field_.is_rational()) return std::hash<std::uint64_t>{}(residue_);
  return std::hash<std::string>{}(rational_.get_str(16));
}

}  // namespace singclass
