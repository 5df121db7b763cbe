#include <algorithm>

#include "internal.hpp"
#include "singclass/determinacy.hpp"
#include "singclass/errors.hpp"
#include "singclass/splitting.hpp"

namespace singclass {

namespace {

using namespace detail;

const std::string kNotRecognized = "non-isolated, not recognized";

std::vector<Scalar> coeffs(FieldSpec field, std::initializer_list<Scalar> values, std::size_t n) {
  std::vector<Scalar> out(values);
  out.resize(n, Scalar(field));
  return out;
}

Scalar one(FieldSpec field) { return Scalar::from_int(field, 1); }
Scalar zero(FieldSpec field) { return Scalar(field); }

ClassLabel by_tau(FieldSpec field, std::size_t nres, Family family, unsigned index, std::uint64_t tau) {
  std::vector<ClassLabel> hits;
  std::string seen;
  for (const auto& row : family_rows(field, nres, family, index)) {
    if (row.tau == tau) hits.push_back(row.label);
    seen += (seen.empty() ? "" : ", ") + row.label.display() + " (tau " + std::to_string(row.tau) + ")";
  }
  if (hits.size() == 1) return hits.front();
  const std::string name = ClassLabel::simple(family, index).name();
  if (hits.empty()) {
    return ClassLabel::unclassified(name + " type with tau " + std::to_string(tau) + " matches no row: " + seen);
  }
  std::string tied;
  for (const auto& h : hits) tied += (tied.empty() ? "" : ", ") + h.display();
  return ClassLabel::unclassified("tied candidates: " + tied);
}

// One level of the characteristic-2 weighted reduction.
struct Level {
  unsigned index;
  std::vector<unsigned> weights;
  unsigned degree;
  Monomial principal;
};

struct EngineResult {
  std::optional<unsigned> index;
  std::optional<ClassLabel> failure;
  Polynomial reduced;
};

// Runs the levels in order; the first level whose principal monomial
// survives the clearing gives the index.
EngineResult run_levels(Polynomial g, const std::vector<Level>& levels, const std::vector<Carrier>& carriers,
                        JetBound bound) {
  for (const auto& level : levels) {
    if (level.principal.degree() > static_cast<unsigned>(bound.value())) {
      return {std::nullopt, ClassLabel::unclassified("jet bound " + std::to_string(bound.value()) + " too small"),
              g};
    }
    std::string blocker;
    if (clear_below(g, level.weights, level.degree, carriers, bound, &blocker) == ClearStatus::Blocked) {
      return {std::nullopt, ClassLabel::unclassified("reduction blocked at " + blocker), g};
    }
    if (!g.coefficient(level.principal).is_zero()) return {level.index, std::nullopt, g};
  }
  return {std::nullopt, std::nullopt, g};
}

std::vector<Level> a_levels(unsigned max_index) {
  std::vector<Level> out;
  for (unsigned k = 2; k <= max_index; ++k) {
    const Monomial principal = k % 2 == 0 ? mono(2, {0, k + 1}) : mono(2, {1, (k + 1) / 2});
    out.push_back({k, {k + 1, 2}, 2 * k + 2, principal});
  }
  return out;
}

std::vector<Level> d_levels(unsigned max_index, bool surface) {
  std::vector<Level> out;
  const std::size_t n = surface ? 3 : 2;
  for (unsigned k = 5; k <= max_index; ++k) {
    Monomial principal = k % 2 == 0 ? mono(n, {1, k / 2}) : mono(n, {0, k - 1});
    if (surface && k % 2 == 1) principal = mono(n, {0, (k - 1) / 2, 1});
    std::vector<unsigned> w{k - 2, 2};
    if (surface) w.push_back(k - 1);
    out.push_back({k, w, 2 * k - 2, principal});
  }
  return out;
}

std::vector<Level> e_levels(bool surface) {
  const std::size_t n = surface ? 3 : 2;
  auto w = [&](unsigned a, unsigned b, unsigned c) {
    std::vector<unsigned> out{a, b};
    if (surface) out.push_back(c);
    return out;
  };
  return {{6, w(4, 3, 6), 12, surface ? mono(n, {0, 2, 1}) : mono(n, {0, 4})},
          {7, w(6, 4, 9), 18, mono(n, {1, 3})},
          {8, w(10, 6, 15), 30, mono(n, {0, 5})}};
}

unsigned level_cap(JetBound bound) { return 2 * static_cast<unsigned>(bound.value()) + 2; }

std::vector<Scalar> linear_row(const Linear& l, std::size_t n) {
  std::vector<Scalar> out{l.a, l.b};
  out.resize(n, Scalar(l.a.field()));
  return out;
}

// Residual in two variables, characteristic 2.
ClassLabel classify_curve_char2(const Polynomial& g, std::uint64_t tau, JetBound bound) {
  const FieldSpec field = g.field();
  const Scalar a = g.coefficient(mono(2, {2, 0}));
  const Scalar c = g.coefficient(mono(2, {0, 2}));
  if (!a.is_zero() || !c.is_zero()) {
    const Polynomial h = make_coordinates(g, {{0, coeffs(field, {a, c}, 2)}}, bound);
    const EngineResult r = run_levels(h, a_levels(level_cap(bound)), {{0, Monomial(2)}}, bound);
    if (r.failure) return *r.failure;
    if (!r.index) return ClassLabel::unclassified("A-type residual with no nondegenerate level");
    return by_tau(field, 2, Family::A, *r.index, tau);
  }
  const CubicAnalysis cubic = analyze_cubic(binary_form_of(g, 3, 0, 1), field);
  switch (cubic.type) {
    case CubicType::Zero: return ClassLabel::not_simple("zero 3-jet");
    case CubicType::Distinct: return by_tau(field, 2, Family::D, 4, tau);
    case CubicType::DoubleRoot: {
      const Polynomial h =
          make_coordinates(g, {{0, linear_row(*cubic.repeated, 2)}, {1, linear_row(*cubic.simple, 2)}}, bound);
      const EngineResult r = run_levels(h, d_levels(level_cap(bound), false), {{0, mono(2, {0, 1})}}, bound);
      if (r.failure) return *r.failure;
      if (!r.index) return ClassLabel::unclassified("D-type residual with no nondegenerate level");
      return by_tau(field, 2, Family::D, *r.index, tau);
    }
    case CubicType::TripleRoot: {
      const Polynomial h = make_coordinates(g, {{0, linear_row(*cubic.repeated, 2)}}, bound);
      const EngineResult r = run_levels(h, e_levels(false), {}, bound);
      if (r.failure) return *r.failure;
      if (!r.index) return ClassLabel::not_simple("triple-root 3-jet beyond E_8");
      return by_tau(field, 2, Family::E, *r.index, tau);
    }
  }
  return ClassLabel::unclassified("unreachable cubic type");
}

// Residual in three variables with a nonzero square 2-jet, characteristic 2.
std::optional<Polynomial> square_to_z(const Polynomial& g, JetBound bound) {
  std::vector<Scalar> l;
  bool nonzero = false;
  for (std::size_t i = 0; i < 3; ++i) {
    l.push_back(g.coefficient(Monomial::variable(3, i, 2)));
    nonzero = nonzero || !l.back().is_zero();
  }
  if (!nonzero) return std::nullopt;
  return make_coordinates(g, {{2, l}}, bound);
}

ClassLabel classify_surface_char2(const Polynomial& g, std::uint64_t tau, JetBound bound) {
  const FieldSpec field = g.field();
  const auto h0 = square_to_z(g, bound);
  if (!h0) return ClassLabel::not_simple("corank 3 with zero 2-jet");
  const std::vector<Scalar> ez = coeffs(field, {zero(field), zero(field), one(field)}, 3);
  const CubicAnalysis cubic = analyze_cubic(binary_form_of(*h0, 3, 0, 1), field);
  const Carrier z2{2, Monomial(3)};
  switch (cubic.type) {
    case CubicType::Zero: return ClassLabel::not_simple("corank 3 with zero cubic off the square");
    case CubicType::Distinct: return by_tau(field, 3, Family::D, 4, tau);
    case CubicType::DoubleRoot: {
      const Polynomial h = make_coordinates(
          *h0, {{0, linear_row(*cubic.repeated, 3)}, {1, linear_row(*cubic.simple, 3)}, {2, ez}}, bound);
      const EngineResult r = run_levels(h, d_levels(level_cap(bound), true), {{0, mono(3, {0, 1})}, z2}, bound);
      if (r.failure) return *r.failure;
      if (!r.index) return ClassLabel::unclassified("D-type residual with no nondegenerate level");
      return by_tau(field, 3, Family::D, *r.index, tau);
    }
    case CubicType::TripleRoot: {
      const Polynomial h = make_coordinates(*h0, {{0, linear_row(*cubic.repeated, 3)}, {2, ez}}, bound);
      const EngineResult r = run_levels(h, e_levels(true), {z2}, bound);
      if (r.failure) return *r.failure;
      if (!r.index) return ClassLabel::not_simple("triple-root cubic beyond E_8");
      return by_tau(field, 3, Family::E, *r.index, tau);
    }
  }
  return ClassLabel::unclassified("unreachable cubic type");
}

ClassLabel classify_curve_odd(const Polynomial& g, std::uint64_t tau, JetBound bound) {
  const FieldSpec field = g.field();
  const CubicAnalysis cubic = analyze_cubic(binary_form_of(g, 3, 0, 1), field);
  switch (cubic.type) {
    case CubicType::Zero: return ClassLabel::not_simple("zero 3-jet");
    case CubicType::Distinct: return by_tau(field, 2, Family::D, 4, tau);
    case CubicType::DoubleRoot:
      for (unsigned k = 5; k <= tau + 1; ++k) {
        for (const auto& row : family_rows(field, 2, Family::D, k)) {
          if (row.tau == tau) return row.label;
        }
      }
      return ClassLabel::not_simple("tau " + std::to_string(tau) + " beyond the D rows");
    case CubicType::TripleRoot: {
      const Polynomial h = make_coordinates(g, {{0, linear_row(*cubic.repeated, 2)}}, bound);
      unsigned index = 0;
      if (!h.coefficient(mono(2, {0, 4})).is_zero()) {
        index = 6;
      } else if (!h.coefficient(mono(2, {1, 3})).is_zero()) {
        index = 7;
      } else if (!h.coefficient(mono(2, {0, 5})).is_zero()) {
        index = 8;
      } else {
        return ClassLabel::not_simple("triple-root 3-jet beyond E_8");
      }
      return by_tau(field, 2, Family::E, index, tau);
    }
  }
  return ClassLabel::unclassified("unreachable cubic type");
}

struct Reduction {
  SplitResult split;
  std::optional<Polynomial> residual;
  std::uint64_t tau = 0;
};

// Splits at increasing jet levels until the residual's contact determinacy
// bound fits inside the level. nullopt when tau is not finite up to the cap.
std::optional<Reduction> reduce(const Polynomial& f, JetBound cap) {
  int level = std::min(8, cap.value());
  while (true) {
    const JetBound bound(level);
    Reduction r{split(f.jet(level), bound), std::nullopt, 0};
    r.residual = r.split.residual_in_corank_vars();
    if (!r.residual) return r;
    int needed = 2 * level;
    bool finite = false;
    try {
      const DeterminacyBound det = contact_determinacy_bound(*r.residual, cap);
      r.tau = det.invariant.value.value;
      finite = true;
      needed = static_cast<int>(det.bound_general);
      if (needed <= level) return r;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotIsolated && e.code() != ErrorCode::BoundTooSmall) throw;
    }
    if (level >= cap.value()) {
      if (!finite) return std::nullopt;
      return r;
    }
    level = std::min(cap.value(), needed);
  }
}

ClassLabel classify_contact_impl(const Polynomial& f, JetBound cap) {
  const auto ord = order_of(f);
  if (!ord) return detect_nonisolated_type(f, cap);
  if (*ord == 0) return ClassLabel::unclassified("not in the maximal ideal");
  if (*ord == 1) return ClassLabel::simple(Family::Smooth, 0);
  const auto reduction = reduce(f, cap);
  if (!reduction) return detect_nonisolated_type(f, cap);
  const SplitResult& s = reduction->split;
  const std::size_t corank = s.corank();
  if (corank == 0) return ClassLabel::simple(Family::A, 1);
  const Polynomial& g = *reduction->residual;
  const std::uint64_t tau = reduction->tau;
  const JetBound bound = s.bound;
  const FieldSpec field = f.field();
  if (corank == 1) return ClassLabel::simple(Family::A, *order_of(g) - 1);
  if (field.characteristic() != 2) {
    if (corank == 2) return classify_curve_odd(g, tau, bound);
    return ClassLabel::not_simple("corank " + std::to_string(corank) + " >= 3");
  }
  if (corank == 2) return classify_curve_char2(g, tau, bound);
  if (corank == 3) return classify_surface_char2(g, tau, bound);
  return ClassLabel::not_simple("corank " + std::to_string(corank) + " >= 4 in characteristic 2");
}

ClassLabel detect_impl(const Polynomial& f, JetBound cap) {
  const auto ord = order_of(f);
  if (!ord) return ClassLabel::unclassified(kNotRecognized);
  if (*ord == 0) return ClassLabel::unclassified("not in the maximal ideal");
  if (*ord == 1) return ClassLabel::simple(Family::Smooth, 0);
  const JetBound bound = cap;
  const SplitResult s = split(f.jet(bound.value()), bound);
  const std::size_t corank = s.corank();
  if (corank == 0) return ClassLabel::unclassified(kNotRecognized);
  const Polynomial g = *s.residual_in_corank_vars();
  const FieldSpec field = f.field();
  if (corank == 1) {
    if (g.is_zero()) return ClassLabel::simple(Family::AInf, 0);
    return ClassLabel::unclassified(kNotRecognized);
  }
  if (field.characteristic() != 2) {
    if (corank == 2 && analyze_cubic(binary_form_of(g, 3, 0, 1), field).type == CubicType::DoubleRoot) {
      return ClassLabel::simple(Family::DInf, 0);
    }
    return ClassLabel::unclassified(kNotRecognized);
  }
  if (corank == 2) {
    const Scalar a = g.coefficient(mono(2, {2, 0}));
    const Scalar c = g.coefficient(mono(2, {0, 2}));
    if (!a.is_zero() || !c.is_zero()) {
      const Polynomial h = make_coordinates(g, {{0, coeffs(field, {a, c}, 2)}}, bound);
      const unsigned top = static_cast<unsigned>(bound.value()) / 2;
      std::vector<Level> levels;
      for (auto& level : a_levels(top)) {
        if (level.principal.degree() <= static_cast<unsigned>(bound.value())) levels.push_back(level);
      }
      const EngineResult r = run_levels(h, levels, {{0, Monomial(2)}}, bound);
      if (r.failure || r.index) return ClassLabel::unclassified(kNotRecognized);
      return ClassLabel::simple(Family::AInf, 0);
    }
    if (analyze_cubic(binary_form_of(g, 3, 0, 1), field).type == CubicType::DoubleRoot) {
      return ClassLabel::simple(Family::DInf, 0);
    }
    return ClassLabel::unclassified(kNotRecognized);
  }
  if (corank == 3) {
    const auto h = square_to_z(g, bound);
    if (h && analyze_cubic(binary_form_of(*h, 3, 0, 1), field).type == CubicType::DoubleRoot) {
      return ClassLabel::simple(Family::DInf, 0);
    }
  }
  return ClassLabel::unclassified(kNotRecognized);
}

}  // namespace

ClassLabel classify_contact(const Polynomial& f, JetBound cap) {
  try {
    return classify_contact_impl(f, cap);
  } catch (const Error& e) {
    return ClassLabel::unclassified(std::string(error_code_name(e.code())) + ": " + e.what());
  }
}

ClassLabel detect_nonisolated_type(const Polynomial& f, JetBound cap) {
  try {
    return detect_impl(f, cap);
  } catch (const Error& e) {
    return ClassLabel::unclassified(std::string(error_code_name(e.code())) + ": " + e.what());
  }
}

ClassLabel classify_right(const Polynomial& f, JetBound cap) {
  const std::uint64_t p = f.field().characteristic();
  if (p == 0) return classify_contact(f, cap);
  try {
    const auto ord = order_of(f);
    if (ord && *ord == 0) return ClassLabel::unclassified("not in the maximal ideal");
    if (ord && *ord == 1) return ClassLabel::simple(Family::Smooth, 0);
    if (f.nvars() == 1) {
      if (!ord) return ClassLabel::not_simple("mu not finite");
      const UnivariateReport report = classify_univariate(f, cap);
      if (report.simple) return ClassLabel::simple(Family::A, static_cast<unsigned>(report.mu.value.value));
      return ClassLabel::not_simple("mu = " + std::to_string(report.mu.value.value) + " >= p = " + std::to_string(p));
    }
    if (p == 2) {
      if (f.nvars() % 2 == 1) return ClassLabel::not_simple("odd number of variables in characteristic 2");
      if (!ord || hessian_rank_corank(f).rank != f.nvars()) {
        return ClassLabel::not_simple("quadratic part of rank < n in characteristic 2");
      }
      return ClassLabel::simple(Family::A, 1);
    }
    const ClassLabel contact = classify_contact(f, cap);
    if (contact.family == Family::AInf || contact.family == Family::DInf) {
      return ClassLabel::not_simple(contact.name() + " is not simple");
    }
    if (!contact.is_simple()) return contact;
    std::string reason;
    if (!right_simple_bounds(contact, p, &reason)) return ClassLabel::not_simple(reason);
    return contact;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::QNotFound) return ClassLabel::not_simple("mu not finite");
    return ClassLabel::unclassified(std::string(error_code_name(e.code())) + ": " + e.what());
  }
}

}  // namespace singclass
