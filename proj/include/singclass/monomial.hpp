#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <span>

namespace singclass {

/// Hard limits of the packed monomial representation.
inline constexpr std::size_t kMaxVars = 16;
inline constexpr unsigned kMaxExponent = 255;

/// x^a with a in N^n, n <= kMaxVars. Exponents live in 16 byte lanes (unused
/// lanes are zero) so that divisibility and lcm map onto one SIMD register.
class Monomial {
 public:
  using Lanes = std::array<std::uint8_t, kMaxVars>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::initializer_list<unsigned> exponents);
  Monomial(std::size_t nvars, std::span<const unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return lanes_[i]; }
  const Lanes& lanes() const noexcept { return lanes_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Throws ExponentOverflow when an exponent would exceed kMaxExponent.
  void set(std::size_t i, unsigned exponent);

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (lanes_[i] > other.lanes_[i]) return false;
    }
    return true;
  }

  /// Precondition: divides(other).
  Monomial quotient_of(const Monomial& other) const noexcept;
  Monomial lcm(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.lanes_ == b.lanes_;
  }

  std::size_t hash() const noexcept {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::memcpy(&lo, lanes_.data(), 8);
    std::memcpy(&hi, lanes_.data() + 8, 8);
    return static_cast<std::size_t>(lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6)));
  }

 private:
  alignas(16) Lanes lanes_{};
  std::uint16_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

/// The local degree ordering "ds": lower total degree is LARGER, ties broken
/// by reverse lexicographic comparison (a > b iff the last nonzero entry of
/// a - b is negative). 1 is the largest monomial.
inline int ds_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

/// Strict "a is larger than b" in ds; sorting with it yields descending order.
struct DsGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return ds_compare(a, b) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace singclass
