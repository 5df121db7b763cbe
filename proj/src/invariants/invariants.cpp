#include "singclass/invariants.hpp"

#include <cstdlib>
#include <string>

#include "singclass/errors.hpp"
#include "singclass/linalg.hpp"

namespace singclass {

std::string_view invariant_kind_name(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::Milnor: return "milnor";
    case InvariantKind::Tjurina: return "tjurina";
    case InvariantKind::HigherMilnor: return "higher_milnor";
    case InvariantKind::HigherTjurina: return "higher_tjurina";
  }
  return "unknown";
}

JetBound default_cap() {
  if (const char* env = std::getenv("SINGCLASS_MAX_BOUND")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1 && value <= static_cast<long>(kMaxExponent)) {
      return JetBound(static_cast<int>(value));
    }
  }
  return JetBound(64);
}

std::vector<int> bound_schedule(JetBound cap) {
  std::vector<int> out;
  for (int n : {10, 20, 40}) {
    if (n < cap.value()) out.push_back(n);
  }
  for (int n = 64; n < cap.value(); n *= 2) out.push_back(n);
  out.push_back(cap.value());
  return out;
}

bool contains_coordinate_axis(const IdealGens& ideal) {
  const std::size_t n = ideal.front().nvars();
  for (std::size_t j = 0; j < n; ++j) {
    bool pure_power = false;
    for (const auto& g : ideal) {
      for (const auto& t : g.terms()) {
        if (t.mono.degree() == t.mono[j]) {
          pure_power = true;
          break;
        }
      }
      if (pure_power) break;
    }
    if (!pure_power) return true;
  }
  return false;
}

StandardBasis adaptive_standard_basis(const std::function<IdealGens()>& make_ideal, JetBound cap) {
  const IdealGens ideal = make_ideal();
  const auto schedule = bound_schedule(cap);
  const bool infinite = !ideal.empty() && contains_coordinate_axis(ideal);
  for (std::size_t i = 0; i + 1 < schedule.size(); ++i) {
    StandardBasis sb = standard_basis(ideal, JetBound(schedule[i]));
    if (sb.complete() || infinite) return sb;
  }
  return standard_basis(ideal, cap);
}

DimValue adaptive_quotient_dim(const IdealGens& ideal, JetBound cap) {
  DimValue out = quotient_dim(adaptive_standard_basis([&] { return ideal; }, cap));
  if (!out.finite) out.bound = cap.value();
  return out;
}

void require_in_maximal_ideal(const Polynomial& f) {
  if (!f.constant_term().is_zero()) {
    throw Error(ErrorCode::NotInMaximalIdeal, "f has a nonzero constant term");
  }
}

namespace {

IdealGens nonzero(IdealGens gens, const Polynomial& f) {
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  // An ideal without generators is the zero ideal; keep one zero generator
  // so that field and arity stay known.
  if (gens.empty()) gens.push_back(Polynomial(f.field(), f.nvars()));
  return gens;
}

}  // namespace

InvariantValue milnor_number(const Polynomial& f, JetBound cap) {
  require_in_maximal_ideal(f);
  return {InvariantKind::Milnor, 0, adaptive_quotient_dim(nonzero(jacobian_ideal(f), f), cap)};
}

InvariantValue tjurina_number(const Polynomial& f, JetBound cap) {
  require_in_maximal_ideal(f);
  return {InvariantKind::Tjurina, 0, adaptive_quotient_dim(nonzero(tjurina_ideal(f), f), cap)};
}

HigherDims higher_algebra_dims(const Polynomial& f, unsigned k, JetBound cap) {
  require_in_maximal_ideal(f);
  const IdealGens mk_j = nonzero(times_m_power(jacobian_ideal(f), k), f);
  const IdealGens t = concat({f}, mk_j);
  return {{InvariantKind::HigherMilnor, k, adaptive_quotient_dim(mk_j, cap)},
          {InvariantKind::HigherTjurina, k, adaptive_quotient_dim(t, cap)}};
}

HessianRank hessian_rank_corank(const Polynomial& f) {
  require_in_maximal_ideal(f);
  if (const auto ord = order_of(f); ord && *ord < 2) {
    throw Error(ErrorCode::OrderTooSmall, "f has a nonzero linear part");
  }
  const std::size_t n = f.nvars();
  const FieldSpec field = f.field();
  Matrix h(field, n, n);
  HessianRank out;
  const Polynomial quadratic = f.homogeneous_part(2);
  for (const auto& t : quadratic.terms()) {
    std::size_t i = n;
    std::size_t j = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (t.mono[v] == 2) i = j = v;
      if (t.mono[v] == 1) (i == n ? i : j) = v;
    }
    if (i == j) {
      h.at(i, i) = t.coeff * Scalar::from_int(field, 2);
      if (field.characteristic() == 2) out.square_terms.push_back(i);
    } else {
      h.at(i, j) = t.coeff;
      h.at(j, i) = t.coeff;
    }
  }
  out.rank = h.rank();
  out.corank = n - out.rank;
  return out;
}

}  // namespace singclass
