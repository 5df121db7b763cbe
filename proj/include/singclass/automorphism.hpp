#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "singclass/linalg.hpp"
#include "singclass/polynomial.hpp"

namespace singclass {

/// Truncated coordinate change x_i -> phi_i, optionally with a unit factor
/// (contact move). Applying it to f yields jet_N(u * f(phi)).
class JetAutomorphism {
 public:
  /// Throws NonInvertibleLinearPart, NotInMaximalIdeal (image with constant
  /// term or unit without one), FieldMismatch, ArityMismatch.
  JetAutomorphism(std::vector<Polynomial> images, std::optional<Polynomial> unit, JetBound bound);

  static JetAutomorphism identity(FieldSpec field, std::size_t nvars, JetBound bound);
  /// x_i -> sum_j m(i, j) x_j.
  static JetAutomorphism linear(const Matrix& m, JetBound bound);

  const std::vector<Polynomial>& images() const noexcept { return images_; }
  const std::optional<Polynomial>& unit() const noexcept { return unit_; }
  JetBound bound() const noexcept { return bound_; }
  std::size_t nvars() const noexcept { return images_.size(); }
  const FieldSpec& field() const noexcept { return images_.front().field(); }
  /// Matrix of linear parts: entry (i, j) is the coefficient of x_j in phi_i.
  Matrix linear_part() const;

 private:
  std::vector<Polynomial> images_;
  std::optional<Polynomial> unit_;
  JetBound bound_;
};

/// jet_N(u * f(phi_1, ..., phi_n)).
Polynomial substitute_jet(const Polynomial& f, const JetAutomorphism& phi);
/// Substitutes arbitrary images (no invertibility requirement) and truncates.
Polynomial substitute_images(const Polynomial& f, const std::vector<Polynomial>& images, JetBound bound);

/// The automorphism with substitute_jet(f, then(a, b)) ==
/// substitute_jet(substitute_jet(f, a), b) at the smaller of the two bounds.
JetAutomorphism then(const JetAutomorphism& a, const JetAutomorphism& b);

/// Deterministic in `seed`. Linear part by rejection sampling until
/// invertible, a few random higher terms per image, and a random unit when
/// `contact` is set.
JetAutomorphism random_automorphism(std::size_t nvars, FieldSpec field, JetBound bound, std::uint64_t seed,
                                    bool contact);

}  // namespace singclass
