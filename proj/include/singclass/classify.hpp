#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singclass/invariants.hpp"

namespace singclass {

enum class Family { A, D, E, AInf, DInf, Smooth, NotSimple, Unclassified };

std::string_view family_name(Family family);

struct ClassLabel {
  Family family = Family::Unclassified;
  /// k for A_k / D_k, 6..8 for E, 0 otherwise.
  unsigned index = 0;
  /// Upper index of the small-characteristic normal forms (A_{2m}^r, E_6^1, ...).
  std::optional<unsigned> variant;
  /// Set for NotSimple and Unclassified.
  std::string reason;

  bool is_simple() const noexcept {
    return family == Family::A || family == Family::D || family == Family::E || family == Family::Smooth;
  }
  /// "A_4", "E_6", "D_inf", "NotSimple", ... (no variant).
  std::string name() const;
  /// name() with the variant as superscript: "A_4^1".
  std::string display() const;

  static ClassLabel simple(Family family, unsigned index, std::optional<unsigned> variant = std::nullopt) {
    return ClassLabel{family, index, variant, {}};
  }
  static ClassLabel not_simple(std::string reason) { return ClassLabel{Family::NotSimple, 0, std::nullopt, std::move(reason)}; }
  static ClassLabel unclassified(std::string reason) {
    return ClassLabel{Family::Unclassified, 0, std::nullopt, std::move(reason)};
  }

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// One normal form of the contact tables. `form` lives in `nvars` variables;
/// for 2 (3) variables these are x, y (x, y, z).
struct NormalFormRow {
  ClassLabel label;
  Polynomial form;
  /// Certified Tjurina number of `form`.
  std::uint64_t tau = 0;
};

/// The rows of the contact table for the characteristic of `field` whose
/// index is at most `max_index`, written in `nvars` variables by adding
/// squares (char != 2) or hyperbolic pairs (char 2). For nvars = 1 only the
/// A_k = x^{k+1} rows exist.
std::vector<NormalFormRow> contact_normal_forms(FieldSpec field, std::size_t nvars, unsigned max_index);

/// Normal forms of the right-simple list (A_k, D_k, E in char > 2 within
/// their bounds; the A_1 pair form in char 2 for even n). Empty for char 0.
std::vector<NormalFormRow> right_simple_normal_forms(FieldSpec field, std::size_t nvars);

/// Contact classification by splitting, the residual's tangent data and
/// Tjurina numbers. Never throws on mathematical input; failures become
/// Unclassified with a reason.
ClassLabel classify_contact(const Polynomial& f, JetBound cap);

/// Right classification. Characteristic 0 delegates to classify_contact, one
/// variable in positive characteristic to classify_univariate.
ClassLabel classify_right(const Polynomial& f, JetBound cap);

/// Whether a contact label lies in the right-simple list for characteristic
/// p (> 2) and nvars >= 2; `reason` receives the violated bound.
bool right_simple_bounds(const ClassLabel& contact, std::uint64_t p, std::string* reason);

/// A_inf / D_inf recognition for germs without finite Tjurina number.
ClassLabel detect_nonisolated_type(const Polynomial& f, JetBound cap);

struct UnivariateReport {
  unsigned mult = 0;
  unsigned e = 0;
  unsigned q = 0;
  unsigned k = 0;
  std::uint64_t determinacy = 0;
  InvariantValue mu;
  std::uint64_t modality = 0;
  bool simple = false;
  /// x^{mu+1} when simple.
  std::optional<Polynomial> normal_form_hint;
};

/// Right determinacy, modality and simplicity of a univariate series.
/// Errors: NotUnivariate, OrderTooSmall (f not in m^2), InvalidArgument
/// (characteristic 0), QNotFound (every exponent divisible by p).
UnivariateReport classify_univariate(const Polynomial& f, JetBound cap);

}  // namespace singclass
