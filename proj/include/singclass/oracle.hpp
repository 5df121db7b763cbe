#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singclass/automorphism.hpp"
#include "singclass/polynomial.hpp"

namespace singclass {

/// All jets sum_{2 <= |a| <= k} c_a x^a over F_p. Jet index i encodes the
/// coefficients in base p with monomials[0] (the ds-largest) as the most
/// significant digit, so smaller index means ordering-smaller jet.
struct JetSpace {
  std::uint64_t p = 2;
  std::size_t nvars = 1;
  unsigned k = 2;
  std::vector<Monomial> monomials;  // degrees 2..k, descending ds
  std::uint64_t size = 0;

  Polynomial jet(std::uint64_t index) const;
  /// Precondition: f has no terms outside `monomials`' degrees after jet_k.
  std::uint64_t index_of(const Polynomial& f) const;
};

inline constexpr std::uint64_t kMaxJetSpace = std::uint64_t{1} << 18;
inline constexpr std::uint64_t kMaxGroupSize = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kActionBudget = 1'000'000'000;

/// Throws NonPrimeCharacteristic / InvalidArgument (p = 0, k < 2, nvars = 0)
/// and TooLarge beyond kMaxJetSpace jets.
JetSpace enumerate_jets(std::uint64_t p, std::size_t nvars, unsigned k);

enum class Action { Right, Contact };

/// Size of G^(k): invertible linear part times all higher terms of degree
/// 2..k per image; with `contact`, times the units modulo m^{k-1}.
std::uint64_t group_size(std::uint64_t p, std::size_t nvars, unsigned k, bool contact);

/// Every element of G^(k), images truncated at k, units at degree k-2.
/// Throws TooLarge beyond kMaxGroupSize.
std::vector<JetAutomorphism> enumerate_group(std::uint64_t p, std::size_t nvars, unsigned k, bool contact);

/// Reduces g to the representative enumerate_group uses (images mod
/// m^{k+1}, unit mod m^{k-1}, no unit factor for right elements).
JetAutomorphism canonical_group_element(const JetAutomorphism& g, unsigned k);

struct Orbit {
  std::uint64_t rep = 0;  // least jet index in the orbit
  std::uint64_t size = 0;
  /// dim K[x]/(tj(rep) + m^k) and dim K[x]/(j(rep) + m^k); these depend only
  /// on the k-jet and are therefore constant on contact resp. right orbits.
  std::uint64_t tau_k = 0;
  std::uint64_t mu_k = 0;
  /// tau / mu of the representative polynomial, nullopt when not finite.
  std::optional<std::uint64_t> tau;
  std::optional<std::uint64_t> mu;
};

struct OrbitTable {
  JetSpace space;
  Action action = Action::Right;
  std::uint64_t group_size = 0;
  std::vector<std::uint32_t> orbit_of;  // per jet index
  std::vector<Orbit> orbits;            // sorted by rep
};

/// Exact orbits of `group` acting on `space`. Group elements that agree on
/// k-jets are merged first. Throws TooLarge when |J| * |G| exceeds the
/// action budget.
OrbitTable orbit_decomposition(const JetSpace& space, const std::vector<JetAutomorphism>& group, Action action);
/// Same, with the group enumerated internally.
OrbitTable orbit_decomposition(const JetSpace& space, Action action);

/// True iff every jet g over F_p at `jet_level` with jet_k(g) = jet_k(f) is
/// right equivalent to f at that level, by coordinate changes with
/// coefficients in F_{p^extension}. Throws InvalidArgument when
/// jet_level <= k, f is not in m^2, or extension > 1 with nvars > 1;
/// TooLarge beyond the guards.
bool bruteforce_determinacy_check(const Polynomial& f, unsigned k, std::uint64_t p, std::size_t nvars,
                                  unsigned jet_level, unsigned extension = 1);

/// Exhaustive search for x -> a_1 x + ... + a_m x^m over F_{p^extension}
/// with jet_level(f(phi)) = jet_level(g). Univariate, f and g over F_p.
bool univariate_right_equivalent(const Polynomial& f, const Polynomial& g, unsigned jet_level, unsigned extension);

/// {"p":..,"n":..,"k":..,"action":..,"jets":..,"group":..,"orbits":[{"rep":..,"size":..,"tau":..,...}]}
std::string orbit_table_json(const OrbitTable& table);

}  // namespace singclass
