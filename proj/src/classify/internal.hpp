#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "singclass/automorphism.hpp"
#include "singclass/classify.hpp"

namespace singclass::detail {

enum class CubicType { Zero, Distinct, DoubleRoot, TripleRoot };

/// Binary form sum c[i] x^{d-i} y^i.
struct BinaryForm {
  std::vector<Scalar> c;
  std::size_t degree() const { return c.size() - 1; }
  bool is_zero() const;
};

struct Linear {
  Scalar a;  // coefficient of x
  Scalar b;  // coefficient of y
};

struct CubicAnalysis {
  CubicType type = CubicType::Zero;
  /// DoubleRoot: the repeated factor; TripleRoot: the cube root.
  std::optional<Linear> repeated;
  /// DoubleRoot: the simple factor.
  std::optional<Linear> simple;
};

/// Homogeneous part of degree `degree` of a polynomial in variables (ix, iy).
BinaryForm binary_form_of(const Polynomial& f, unsigned degree, std::size_t ix, std::size_t iy);
CubicAnalysis analyze_cubic(const BinaryForm& cubic, FieldSpec field);

/// Linear coordinate change after which the linear form with coefficient
/// vector `rows[i]` becomes variable `targets[i]`. Rows must be independent.
Polynomial make_coordinates(const Polynomial& f, const std::vector<std::pair<std::size_t, std::vector<Scalar>>>& rows,
                            JetBound bound);

/// v^2 * cofactor, characteristic 2.
struct Carrier {
  std::size_t var;
  Monomial cofactor;
};

enum class ClearStatus { Done, Blocked };

/// Removes every term of weight < degree whose monomial is q^2 * cofactor of
/// some carrier by v -> v + s q (exact in characteristic 2). Stops at the
/// first term that no carrier can absorb.
ClearStatus clear_below(Polynomial& f, const std::vector<unsigned>& weights, unsigned degree,
                        const std::vector<Carrier>& carriers, JetBound bound, std::string* blocker);

unsigned weight_of(const Monomial& m, const std::vector<unsigned>& weights);

Monomial mono(std::size_t nvars, std::initializer_list<unsigned> exps);

/// Embeds a polynomial in m variables into n >= m variables (same indices).
Polynomial embed(const Polynomial& f, std::size_t nvars);

/// Table rows for one (family, index) of the characteristic of `field`,
/// with forms in `nres` variables (2 or 3; 3 only in characteristic 2).
/// Tjurina numbers are computed once per process and cached.
std::vector<NormalFormRow> family_rows(FieldSpec field, std::size_t nres, Family family, unsigned index);

}  // namespace singclass::detail
