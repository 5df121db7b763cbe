#include "singclass/deform.hpp"

#include <algorithm>
#include <random>

#include "singclass/errors.hpp"
#include "singclass/invariants.hpp"
#include "singclass/stdbasis.hpp"

namespace singclass {

namespace {

Polynomial without_constant(const Polynomial& f) {
  return f - Polynomial::constant(f.field(), f.nvars(), f.constant_term());
}

}  // namespace

Unfolding tjurina_basis_unfolding(const Polynomial& f, JetBound cap) {
  require_in_maximal_ideal(f);
  const StandardBasis sb = adaptive_standard_basis([&] { return tjurina_ideal(f); }, cap);
  const DimValue dim = quotient_dim(sb);
  if (!dim.finite) {
    throw Error(ErrorCode::NotIsolated, "tau not finite up to bound " + std::to_string(cap.value()));
  }
  Unfolding u{f, {}};
  for (const auto& m : standard_monomials(sb)) {
    u.basis.push_back(Polynomial::monomial(f.field(), m, Scalar::from_int(f.field(), 1)));
  }
  check_internal(u.basis.size() == dim.value, "basis size equals tau");
  return u;
}

Polynomial evaluate_unfolding(const Unfolding& u, const std::vector<Scalar>& t) {
  if (t.size() != u.nparams()) {
    throw Error(ErrorCode::ArityMismatch,
                "expected " + std::to_string(u.nparams()) + " parameters, got " + std::to_string(t.size()));
  }
  Polynomial out = u.base;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (!(t[j].field() == u.base.field())) throw Error(ErrorCode::FieldMismatch, "parameter over another field");
    out = out + u.basis[j].scaled(t[j]);
  }
  return out;
}

std::vector<Scalar> sample_parameters(const Unfolding& u, std::uint64_t& state) {
  std::mt19937_64 rng(state);
  const FieldSpec field = u.base.field();
  std::vector<Scalar> t;
  for (std::size_t j = 0; j < u.nparams(); ++j) {
    if (field.is_rational()) {
      const long num = static_cast<long>(rng() % 19) - 9;
      long den = 0;
      while (den == 0) den = static_cast<long>(rng() % 19) - 9;
      t.push_back(Scalar::from_fraction(field, num, den));
    } else {
      t.push_back(Scalar::from_int(field, static_cast<long>(rng() % field.characteristic())));
    }
  }
  state = rng();
  return t;
}

ScanReport semicontinuity_scan(const Unfolding& u, std::size_t samples, std::uint64_t seed, JetBound cap) {
  ScanReport report;
  report.samples = samples;
  const InvariantValue tau0 = tjurina_number(u.base, cap);
  check_internal(tau0.value.finite, "scan needs a certified tau");
  report.tau_base = tau0.value.value;
  const InvariantValue mu0 = milnor_number(u.base, cap);
  if (mu0.value.finite) {
    report.mu_base = mu0.value.value;
    report.max_mu_observed = 0;
  }
  std::uint64_t state = seed;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::vector<Scalar> t = sample_parameters(u, state);
    const Polynomial ft = evaluate_unfolding(u, t);
    std::uint64_t tau = 0;
    bool tau_finite = true;
    if (ft.constant_term().is_zero()) {
      const InvariantValue v = tjurina_number(ft, cap);
      tau_finite = v.value.finite;
      tau = v.value.value;
    }
    if (!tau_finite || tau > report.tau_base) {
      report.violations.push_back("sample " + std::to_string(s) + ": tau " +
                                  (tau_finite ? std::to_string(tau) : "infinite") + " > " +
                                  std::to_string(report.tau_base));
    }
    report.max_tau_observed = std::max(report.max_tau_observed, tau);
    if (report.mu_base) {
      const InvariantValue v = milnor_number(without_constant(ft), cap);
      if (!v.value.finite || v.value.value > *report.mu_base) {
        report.violations.push_back("sample " + std::to_string(s) + ": mu " +
                                    (v.value.finite ? std::to_string(v.value.value) : "infinite") + " > " +
                                    std::to_string(*report.mu_base));
      }
      report.max_mu_observed = std::max(*report.max_mu_observed, v.value.value);
    }
  }
  return report;
}

std::vector<ClassLabel> adjacency_scan(const Unfolding& u, std::size_t samples, std::uint64_t seed, JetBound cap) {
  std::vector<ClassLabel> out;
  std::uint64_t state = seed;
  for (std::size_t s = 0; s < samples; ++s) {
    const Polynomial ft = evaluate_unfolding(u, sample_parameters(u, state));
    const ClassLabel label =
        ft.constant_term().is_zero() ? classify_contact(ft, cap) : ClassLabel::simple(Family::Smooth, 0);
    if (std::find(out.begin(), out.end(), label) == out.end()) out.push_back(label);
  }
  std::sort(out.begin(), out.end(), [](const ClassLabel& a, const ClassLabel& b) {
    return std::pair(a.display(), a.reason) < std::pair(b.display(), b.reason);
  });
  return out;
}

}  // namespace singclass
