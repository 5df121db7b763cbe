#pragma once

#include <optional>
#include <string_view>

#include "singclass/invariants.hpp"

namespace singclass {

enum class Equivalence { Right, Contact };

std::string_view equivalence_name(Equivalence e);

/// All determinacy bounds derivable from the ideal J = m^2 j(f) (right) or
/// J = m<f> + m^2 j(f) (contact). Every bound is reported; none is hidden
/// behind a minimum.
struct DeterminacyBound {
  Equivalence equivalence = Equivalence::Right;
  unsigned order = 0;
  Monomial highcorner;
  /// Minimal k with m^{k+2} in J, i.e. deg(highcorner) - 1.
  unsigned k_star = 0;
  /// 2 k_star - ord + 2.
  unsigned bound_general = 0;
  /// The worked example's arithmetic: contact uses k = deg(highcorner) - 1,
  /// right uses k = deg(highcorner), each plugged into 2k - ord + 2.
  unsigned example_reading = 0;
  /// k = deg(highcorner) (m^{k+1} in J) when char 0 or p >= k + 2 - ord.
  std::optional<unsigned> bound_char0;
  /// mu (right) or tau (contact).
  InvariantValue invariant;
  /// 2 mu - ord + 2 resp. 2 tau - ord + 2.
  unsigned bound_mu_tau = 0;

  friend bool operator==(const DeterminacyBound&, const DeterminacyBound&) = default;
};

/// Errors: OrderTooSmall (ord f < 2), NotInMaximalIdeal, NotIsolated (mu not
/// certified finite), BoundTooSmall (J not certified within the cap).
DeterminacyBound right_determinacy_bound(const Polynomial& f, JetBound cap);
/// Same with tau and the contact ideal.
DeterminacyBound contact_determinacy_bound(const Polynomial& f, JetBound cap);

IdealGens right_determinacy_ideal(const Polynomial& f);
IdealGens contact_determinacy_ideal(const Polynomial& f);

}  // namespace singclass
