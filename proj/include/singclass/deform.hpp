#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singclass/classify.hpp"

namespace singclass {

/// F(x, t) = f + sum_j t_j g_j with g_j the standard monomials of tj(f).
struct Unfolding {
  Polynomial base;
  std::vector<Polynomial> basis;
  std::size_t nparams() const noexcept { return basis.size(); }
};

/// Basis = standard monomials of the Tjurina ideal, descending ds order.
/// Throws NotIsolated when tau is not certified finite within the cap.
Unfolding tjurina_basis_unfolding(const Polynomial& f, JetBound cap);

/// f + sum t_j g_j. Throws ArityMismatch / FieldMismatch.
Polynomial evaluate_unfolding(const Unfolding& u, const std::vector<Scalar>& t);

/// Deterministic parameter sample: small-height rationals (numerator and
/// denominator in [-9, 9]) over Q, uniform residues over F_p.
std::vector<Scalar> sample_parameters(const Unfolding& u, std::uint64_t& state);

struct ScanReport {
  std::size_t samples = 0;
  std::uint64_t tau_base = 0;
  std::optional<std::uint64_t> mu_base;
  std::uint64_t max_tau_observed = 0;
  std::optional<std::uint64_t> max_mu_observed;
  /// One entry per sample whose invariants exceed those of the base.
  std::vector<std::string> violations;
};

/// Tau (and mu when the base's mu is finite) of F_t at the origin for
/// `samples` random parameter vectors. A germ with F_t(0) != 0 has tau = 0.
ScanReport semicontinuity_scan(const Unfolding& u, std::size_t samples, std::uint64_t seed, JetBound cap);

/// Distinct classify_contact labels of F_t at the origin, sorted by name.
/// F_t(0) != 0 (the fiber misses the origin) is reported as Smooth.
std::vector<ClassLabel> adjacency_scan(const Unfolding& u, std::size_t samples, std::uint64_t seed, JetBound cap);

}  // namespace singclass
