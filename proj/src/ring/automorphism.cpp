#include "singclass/automorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <unordered_map>

#include "singclass/errors.hpp"

namespace singclass {

JetAutomorphism::JetAutomorphism(std::vector<Polynomial> images, std::optional<Polynomial> unit,
                                 JetBound bound)
    : images_(std::move(images)), unit_(std::move(unit)), bound_(bound) {
  if (images_.empty()) throw Error(ErrorCode::ArityMismatch, "automorphism needs at least one image");
  const std::size_t n = images_.size();
  const FieldSpec field = images_.front().field();
  for (auto& img : images_) {
    if (img.field() != field) throw Error(ErrorCode::FieldMismatch, "images over different fields");
    if (img.nvars() != n) throw Error(ErrorCode::ArityMismatch, "image arity differs from image count");
    if (!img.constant_term().is_zero()) {
      throw Error(ErrorCode::NotInMaximalIdeal, "coordinate image has a constant term");
    }
    img = img.jet(bound_.value());
  }
  if (unit_) {
    if (unit_->field() != field) throw Error(ErrorCode::FieldMismatch, "unit over a different field");
    if (unit_->nvars() != n) throw Error(ErrorCode::ArityMismatch, "unit arity mismatch");
    if (unit_->constant_term().is_zero()) {
      throw Error(ErrorCode::NotInMaximalIdeal, "unit has no invertible constant term");
    }
    *unit_ = unit_->jet(bound_.value());
  }
  if (linear_part().rank() != n) {
    throw Error(ErrorCode::NonInvertibleLinearPart, "linear part of the coordinate change is singular");
  }
}

JetAutomorphism JetAutomorphism::identity(FieldSpec field, std::size_t nvars, JetBound bound) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < nvars; ++i) images.push_back(Polynomial::variable(field, nvars, i));
  return JetAutomorphism(std::move(images), std::nullopt, bound);
}

JetAutomorphism JetAutomorphism::linear(const Matrix& m, JetBound bound) {
  const std::size_t n = m.rows();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j) terms.push_back({Monomial::variable(n, j), m.at(i, j)});
    images.push_back(Polynomial::from_terms(m.field(), n, std::move(terms)));
  }
  return JetAutomorphism(std::move(images), std::nullopt, bound);
}

Matrix JetAutomorphism::linear_part() const {
  const std::size_t n = images_.size();
  Matrix m(field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : images_[i].terms()) {
      if (t.mono.degree() > 1) break;
      for (std::size_t j = 0; j < n; ++j) {
        if (t.mono[j] == 1) m.at(i, j) = t.coeff;
      }
    }
  }
  return m;
}

namespace {

Polynomial mul_upto(const Polynomial& a, const Polynomial& b, int room) {
  if (room >= 1) return mul_truncated(a, b, JetBound(room));
  if (room < 0) return Polynomial(a.field(), a.nvars());
  return Polynomial::constant(a.field(), a.nvars(), a.constant_term() * b.constant_term());
}

// Horner scheme in x_i for terms free of x_0..x_{i-1}, dropping degrees
// above `room`. Before the step for x_i^e the accumulator still gets e more
// factors of order >= orders[i], which bounds what has to be kept.
Polynomial horner(std::vector<Term> terms, std::size_t i, const std::vector<Polynomial>& images,
                  const std::vector<unsigned>& orders, int room, FieldSpec field) {
  const std::size_t n = images.size();
  if (i == n) {
    Scalar c(field);
    for (const auto& t : terms) c += t.coeff;
    return Polynomial::constant(field, n, c);
  }
  std::map<unsigned, std::vector<Term>, std::greater<>> groups;
  for (auto& t : terms) {
    const unsigned e = t.mono[i];
    t.mono.set(i, 0);
    groups[e].push_back(std::move(t));
  }
  const auto room_at = [&](unsigned e) { return room - static_cast<int>(e * orders[i]); };
  Polynomial acc(field, n);
  unsigned prev = groups.begin()->first;
  for (auto& [e, group] : groups) {
    for (unsigned s = prev; s-- > e && !acc.is_zero();) acc = mul_upto(acc, images[i], room_at(s));
    prev = e;
    if (room_at(e) < 0) continue;
    acc = acc + horner(std::move(group), i + 1, images, orders, room_at(e), field);
  }
  for (unsigned s = prev; s-- > 0 && !acc.is_zero();) acc = mul_upto(acc, images[i], room_at(s));
  return acc;
}

}  // namespace

Polynomial substitute_images(const Polynomial& f, const std::vector<Polynomial>& images, JetBound bound) {
  const std::size_t n = f.nvars();
  if (images.size() != n) throw Error(ErrorCode::ArityMismatch, "one image per variable required");
  std::vector<unsigned> orders;
  for (const auto& img : images) {
    if (img.field() != f.field()) throw Error(ErrorCode::FieldMismatch, "image field differs from f");
    if (img.nvars() != n) throw Error(ErrorCode::ArityMismatch, "image arity mismatch");
    orders.push_back(order_of(img).value_or(kMaxExponent));
  }
  if (f.is_zero()) return f;
  return horner(f.terms(), 0, images, orders, bound.value(), f.field()).jet(bound.value());
}

Polynomial substitute_jet(const Polynomial& f, const JetAutomorphism& phi) {
  if (f.field() != phi.field()) throw Error(ErrorCode::FieldMismatch, f.field().name() + " vs " + phi.field().name());
  Polynomial g = substitute_images(f, phi.images(), phi.bound());
  if (phi.unit()) g = mul_truncated(*phi.unit(), g, phi.bound());
  return g;
}

JetAutomorphism then(const JetAutomorphism& a, const JetAutomorphism& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::ArityMismatch, "automorphisms differ in nvars");
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "automorphisms over different fields");
  const JetBound bound(std::min(a.bound().value(), b.bound().value()));
  std::vector<Polynomial> images;
  for (const auto& img : a.images()) images.push_back(substitute_images(img, b.images(), bound));
  std::optional<Polynomial> unit;
  if (a.unit() || b.unit()) {
    Polynomial u = a.unit() ? substitute_images(*a.unit(), b.images(), bound)
                            : Polynomial::constant(a.field(), a.nvars(), 1);
    if (b.unit()) u = mul_truncated(*b.unit(), u, bound);
    unit = std::move(u);
  }
  return JetAutomorphism(std::move(images), std::move(unit), bound);
}

namespace {

Scalar random_scalar(FieldSpec field, std::mt19937_64& rng, bool nonzero) {
  while (true) {
    Scalar s(field);
    if (field.is_rational()) {
      std::uniform_int_distribution<long> num(-3, 3);
      std::uniform_int_distribution<long> den(1, 2);
      s = Scalar::from_fraction(field, num(rng), den(rng));
    } else {
      std::uniform_int_distribution<std::uint64_t> dist(0, field.characteristic() - 1);
      s = Scalar::from_int(field, static_cast<long>(dist(rng)));
    }
    if (!nonzero || !s.is_zero()) return s;
  }
}

Monomial random_monomial(std::size_t nvars, unsigned degree, std::mt19937_64& rng) {
  std::vector<unsigned> e(nvars, 0);
  std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
  for (unsigned d = 0; d < degree; ++d) ++e[pick(rng)];
  return Monomial(nvars, std::span<const unsigned>(e));
}

}  // namespace

JetAutomorphism random_automorphism(std::size_t nvars, FieldSpec field, JetBound bound, std::uint64_t seed,
                                    bool contact) {
  std::mt19937_64 rng(seed);
  const int N = bound.value();
  Matrix lin(field, nvars, nvars);
  do {
    for (std::size_t i = 0; i < nvars; ++i) {
      for (std::size_t j = 0; j < nvars; ++j) lin.at(i, j) = random_scalar(field, rng, false);
    }
  } while (lin.rank() != nvars);

  std::uniform_int_distribution<int> count(0, 2);
  std::uniform_int_distribution<int> degree(2, std::max(2, N));
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < nvars; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < nvars; ++j) terms.push_back({Monomial::variable(nvars, j), lin.at(i, j)});
    if (N >= 2) {
      for (int c = count(rng); c > 0; --c) {
        terms.push_back({random_monomial(nvars, static_cast<unsigned>(degree(rng)), rng),
                         random_scalar(field, rng, true)});
      }
    }
    images.push_back(Polynomial::from_terms(field, nvars, std::move(terms)));
  }
  std::optional<Polynomial> unit;
  if (contact) {
    std::vector<Term> terms{{Monomial(nvars), random_scalar(field, rng, true)}};
    std::uniform_int_distribution<int> udeg(1, std::max(1, N));
    for (int c = count(rng) + 1; c > 0; --c) {
      terms.push_back({random_monomial(nvars, static_cast<unsigned>(udeg(rng)), rng),
                       random_scalar(field, rng, true)});
    }
    unit = Polynomial::from_terms(field, nvars, std::move(terms));
  }
  return JetAutomorphism(std::move(images), std::move(unit), bound);
}

}  // namespace singclass
