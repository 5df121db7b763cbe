#include "singclass/determinacy.hpp"

#include "singclass/errors.hpp"

namespace singclass {

std::string_view equivalence_name(Equivalence e) { return e == Equivalence::Right ? "right" : "contact"; }

IdealGens right_determinacy_ideal(const Polynomial& f) { return times_m_power(jacobian_ideal(f), 2); }

IdealGens contact_determinacy_ideal(const Polynomial& f) {
  return concat(times_m_power({f}, 1), times_m_power(jacobian_ideal(f), 2));
}

namespace {

DeterminacyBound compute(const Polynomial& f, JetBound cap, Equivalence eq) {
  require_in_maximal_ideal(f);
  const auto ord = order_of(f);
  if (ord && *ord < 2) throw Error(ErrorCode::OrderTooSmall, "f has a nonzero linear part");
  if (!ord) throw Error(ErrorCode::NotIsolated, "the zero germ is not finitely determined");

  DeterminacyBound out;
  out.equivalence = eq;
  out.order = *ord;
  out.invariant = eq == Equivalence::Right ? milnor_number(f, cap) : tjurina_number(f, cap);
  if (!out.invariant.value.finite) {
    throw Error(ErrorCode::NotIsolated, std::string(eq == Equivalence::Right ? "mu" : "tau") +
                                            " is not finite up to " + std::to_string(cap.value()));
  }
  const auto sb = adaptive_standard_basis(
      [&] { return eq == Equivalence::Right ? right_determinacy_ideal(f) : contact_determinacy_ideal(f); }, cap);
  const auto hc = highcorner(sb);
  if (!hc) {
    throw Error(ErrorCode::BoundTooSmall,
                "determinacy ideal not certified up to " + std::to_string(cap.value()) + "; raise the bound");
  }
  out.highcorner = *hc;
  const unsigned deg = hc->degree();
  out.k_star = deg - 1;
  out.bound_general = 2 * out.k_star + 2 - out.order;
  const unsigned k_example = eq == Equivalence::Contact ? deg - 1 : deg;
  out.example_reading = 2 * k_example + 2 - out.order;
  const std::uint64_t p = f.field().characteristic();
  if (p == 0 || p + out.order >= deg + 2) out.bound_char0 = deg;
  out.bound_mu_tau = static_cast<unsigned>(2 * out.invariant.value.value + 2 - out.order);
  return out;
}

}  // namespace

DeterminacyBound right_determinacy_bound(const Polynomial& f, JetBound cap) {
  return compute(f, cap, Equivalence::Right);
}

DeterminacyBound contact_determinacy_bound(const Polynomial& f, JetBound cap) {
  return compute(f, cap, Equivalence::Contact);
}

}  // namespace singclass
