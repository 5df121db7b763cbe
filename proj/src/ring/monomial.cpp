#include "singclass/monomial.hpp"

#include <algorithm>
#include <string>

#include "singclass/errors.hpp"

namespace singclass {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars == 0 || nvars > kMaxVars) {
    throw Error(ErrorCode::InvalidArgument,
                "number of variables must be in [1, " + std::to_string(kMaxVars) + "]");
  }
}

Monomial::Monomial(std::size_t nvars, std::initializer_list<unsigned> exponents)
    : Monomial(nvars, std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::size_t nvars, std::span<const unsigned> exponents) : Monomial(nvars) {
  if (exponents.size() != nvars) {
    throw Error(ErrorCode::ArityMismatch, "exponent vector length differs from nvars");
  }
  for (std::size_t i = 0; i < nvars; ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  if (index >= nvars) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned exponent) {
  if (i >= nvars_) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  if (exponent > kMaxExponent) {
    throw Error(ErrorCode::ExponentOverflow,
                "exponent " + std::to_string(exponent) + " exceeds " + std::to_string(kMaxExponent));
  }
  degree_ = static_cast<std::uint16_t>(degree_ - lanes_[i] + exponent);
  lanes_[i] = static_cast<std::uint8_t>(exponent);
}

Monomial Monomial::quotient_of(const Monomial& other) const noexcept {
  Monomial q = other;
  for (std::size_t i = 0; i < kMaxVars; ++i) q.lanes_[i] = static_cast<std::uint8_t>(other.lanes_[i] - lanes_[i]);
  q.degree_ = static_cast<std::uint16_t>(other.degree_ - degree_);
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
  Monomial l = *this;
  unsigned deg = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    l.lanes_[i] = std::max(lanes_[i], other.lanes_[i]);
    deg += l.lanes_[i];
  }
  l.degree_ = static_cast<std::uint16_t>(deg);
  return l;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (lanes_[i] != 0 && other.lanes_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned{a.lanes_[i]} + b.lanes_[i];
    if (e > kMaxExponent) {
      throw Error(ErrorCode::ExponentOverflow, "monomial product exceeds exponent limit");
    }
    m.lanes_[i] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return m;
}

}  // namespace singclass
