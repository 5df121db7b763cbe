#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "singclass/stdbasis.hpp"

namespace singclass {

enum class InvariantKind { Milnor, Tjurina, HigherMilnor, HigherTjurina };

std::string_view invariant_kind_name(InvariantKind kind);

struct InvariantValue {
  InvariantKind kind = InvariantKind::Milnor;
  unsigned k = 0;  // order of the higher algebra, 0 otherwise
  DimValue value;

  friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
};

/// Default cap 64; SINGCLASS_MAX_BOUND overrides it when set to 1..255.
JetBound default_cap();

/// 10, 20, 40, 64, ... truncated at `cap`; always ends with cap itself.
std::vector<int> bound_schedule(JetBound cap);

/// True when some coordinate axis lies in the zero set of the generators (no
/// generator has a term that is a pure power of x_j), so the quotient is
/// infinite.
bool contains_coordinate_axis(const IdealGens& ideal);

/// Standard basis at the first bound of the schedule where finiteness is
/// certified, or at the cap otherwise. When contains_coordinate_axis holds
/// the first bound is returned. `make_ideal` builds the generators (they are
/// truncated by the engine).
StandardBasis adaptive_standard_basis(const std::function<IdealGens()>& make_ideal, JetBound cap);
/// A non-finite result carries bound = cap and the standard monomials found
/// as lower bound.
DimValue adaptive_quotient_dim(const IdealGens& ideal, JetBound cap);

/// Throws NotInMaximalIdeal when f has a nonzero constant term.
void require_in_maximal_ideal(const Polynomial& f);

InvariantValue milnor_number(const Polynomial& f, JetBound cap);
InvariantValue tjurina_number(const Polynomial& f, JetBound cap);

struct HigherDims {
  InvariantValue milnor;   // dim K{x} / m^k j(f)
  InvariantValue tjurina;  // dim K{x} / (<f> + m^k j(f))
};
HigherDims higher_algebra_dims(const Polynomial& f, unsigned k, JetBound cap);

struct HessianRank {
  std::size_t rank = 0;
  std::size_t corank = 0;
  /// Characteristic 2 only: variables whose square x_i^2 occurs in the
  /// quadratic part (invisible in the alternating Hessian).
  std::vector<std::size_t> square_terms;
};

/// Rank of the Hessian of the 2-jet. Throws OrderTooSmall on a linear term
/// and NotInMaximalIdeal on a constant term.
HessianRank hessian_rank_corank(const Polynomial& f);

}  // namespace singclass
