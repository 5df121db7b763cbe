#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "singclass/automorphism.hpp"

namespace singclass {

/// a_i x_i^2 + x_i x_j + a_j x_j^2 (characteristic 2 block).
struct QuadPair {
  std::size_t i;
  std::size_t j;
  Scalar a_i;
  Scalar a_j;
};

struct QuadDiagonal {
  std::size_t i;
  Scalar a;
};

struct QuadraticNormalForm {
  JetAutomorphism transform;
  /// 2-jet of f after the transform.
  Polynomial quad;
  /// Number of variables in the nondegenerate block (first `rank` variables).
  std::size_t rank = 0;
  /// Characteristic != 2: a_i x_i^2 for i < rank.
  std::vector<QuadDiagonal> diagonal;
  /// Characteristic 2: pairs covering the first `rank` variables.
  std::vector<QuadPair> pairs;
  /// Characteristic 2: squares d_i x_i^2 left on variables i >= rank.
  std::vector<QuadDiagonal> squares;
};

/// Linear change bringing the 2-jet into diagonal form (char != 2) or into
/// hyperbolic-type pairs followed by pure squares (char 2). The transform
/// carries `bound`. Throws OrderTooSmall / NotInMaximalIdeal.
QuadraticNormalForm quadratic_normal_form(const Polynomial& f, JetBound bound = JetBound(2));

struct SplitResult {
  std::size_t quad_rank = 0;
  /// Quadratic part on the first quad_rank variables.
  Polynomial quad_form;
  /// Everything else; uses only variables quad_rank..n-1. In characteristic
  /// 2 it may contain squares d_i x_i^2.
  Polynomial residual;
  JetAutomorphism transform;
  JetBound bound;
  QuadraticNormalForm quadratic;

  std::size_t corank() const { return residual.nvars() - quad_rank; }
  /// The residual as a polynomial in the corank variables only; nullopt when
  /// the corank is zero.
  std::optional<Polynomial> residual_in_corank_vars() const;
};

/// Splitting lemma at jet level N: substitute_jet(f, transform) equals
/// quad_form + residual exactly (checked on every call).
SplitResult split(const Polynomial& f, JetBound bound);

/// Drops the first `count` variables (which must not occur in f).
Polynomial drop_leading_vars(const Polynomial& f, std::size_t count);

}  // namespace singclass
