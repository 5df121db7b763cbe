#include <algorithm>

#include "internal.hpp"
#include "singclass/errors.hpp"
#include "singclass/linalg.hpp"

namespace singclass::detail {

namespace {

using Univariate = std::vector<Scalar>;  // low to high

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Univariate remainder(Univariate a, const Univariate& b) {
  const Scalar lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const Scalar c = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Univariate gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BinaryForm derivative_x(const BinaryForm& f, FieldSpec field) {
  const std::size_t d = f.degree();
  BinaryForm out{std::vector<Scalar>(d, Scalar(field))};
  for (std::size_t i = 0; i < d; ++i) out.c[i] = f.c[i] * Scalar::from_int(field, static_cast<long>(d - i));
  return out;
}

BinaryForm derivative_y(const BinaryForm& f, FieldSpec field) {
  const std::size_t d = f.degree();
  BinaryForm out{std::vector<Scalar>(d, Scalar(field))};
  for (std::size_t i = 1; i <= d; ++i) out.c[i - 1] = f.c[i] * Scalar::from_int(field, static_cast<long>(i));
  return out;
}

// gcd of nonzero binary forms, normalized up to a scalar.
BinaryForm form_gcd(const std::vector<BinaryForm>& forms, FieldSpec field) {
  std::optional<Univariate> g;
  std::size_t min_y = ~std::size_t{0};
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    const std::size_t d = f.degree();
    Univariate u(d + 1, Scalar(field));
    for (std::size_t j = 0; j <= d; ++j) u[j] = f.c[d - j];
    trim(u);
    min_y = std::min(min_y, d - (u.size() - 1));
    g = g ? gcd(*g, u) : u;
  }
  check_internal(g.has_value(), "gcd of zero forms");
  const std::size_t r = g->size() - 1;
  const std::size_t total = r + min_y;
  BinaryForm out{std::vector<Scalar>(total + 1, Scalar(field))};
  for (std::size_t a = 0; a <= r; ++a) out.c[total - a] = (*g)[a];
  return out;
}

// G = lambda L^j; recovers L.
Linear radical(const BinaryForm& g, FieldSpec field) {
  const std::size_t j = g.degree();
  const Scalar one = Scalar::from_int(field, 1);
  const Scalar zero(field);
  if (g.c[0].is_zero()) return {zero, one};
  const std::uint64_t p = field.characteristic();
  Scalar t(field);
  if (j == 1) {
    t = g.c[1] / g.c[0];
  } else if (p != 0 && j % p == 0) {
    // t^j = c_j / c_0 and t^p = t in the prime field.
    t = g.c[j] / g.c[0];
  } else {
    t = g.c[1] / (g.c[0] * Scalar::from_int(field, static_cast<long>(j)));
  }
  return {one, t};
}

BinaryForm product(const BinaryForm& a, const BinaryForm& b, FieldSpec field) {
  BinaryForm out{std::vector<Scalar>(a.c.size() + b.c.size() - 1, Scalar(field))};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    for (std::size_t k = 0; k < b.c.size(); ++k) out.c[i + k] += a.c[i] * b.c[k];
  }
  return out;
}

BinaryForm as_form(const Linear& l) { return BinaryForm{{l.a, l.b}}; }

bool proportional(const BinaryForm& a, const BinaryForm& b) {
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    for (std::size_t k = i + 1; k < a.c.size(); ++k) {
      if (!(a.c[i] * b.c[k] == a.c[k] * b.c[i])) return false;
    }
  }
  return true;
}

// F / Q for a cubic F divisible by the square Q.
Linear linear_quotient(const BinaryForm& f, const BinaryForm& q) {
  if (!q.c[0].is_zero()) {
    const Scalar alpha = f.c[0] / q.c[0];
    return {alpha, (f.c[1] - q.c[1] * alpha) / q.c[0]};
  }
  return {f.c[2] / q.c[2], f.c[3] / q.c[2]};
}

}  // namespace

bool BinaryForm::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); });
}

BinaryForm binary_form_of(const Polynomial& f, unsigned degree, std::size_t ix, std::size_t iy) {
  BinaryForm out{std::vector<Scalar>(degree + 1, Scalar(f.field()))};
  const Polynomial part = f.homogeneous_part(degree);
  for (const auto& t : part.terms()) {
    if (t.mono[ix] + t.mono[iy] != degree) continue;
    out.c[t.mono[iy]] = t.coeff;
  }
  return out;
}

CubicAnalysis analyze_cubic(const BinaryForm& cubic, FieldSpec field) {
  CubicAnalysis out;
  if (cubic.is_zero()) return out;
  const BinaryForm g = form_gcd({cubic, derivative_x(cubic, field), derivative_y(cubic, field)}, field);
  if (g.degree() == 0) {
    out.type = CubicType::Distinct;
    return out;
  }
  const Linear l = radical(g, field);
  const BinaryForm square = product(as_form(l), as_form(l), field);
  if (proportional(cubic, product(square, as_form(l), field))) {
    out.type = CubicType::TripleRoot;
    out.repeated = l;
    return out;
  }
  out.type = CubicType::DoubleRoot;
  out.repeated = l;
  out.simple = linear_quotient(cubic, square);
  check_internal(product(square, as_form(*out.simple), field).c == cubic.c, "double root factorization");
  return out;
}

Polynomial make_coordinates(const Polynomial& f, const std::vector<std::pair<std::size_t, std::vector<Scalar>>>& rows,
                            JetBound bound) {
  const std::size_t n = f.nvars();
  const FieldSpec field = f.field();
  Matrix a(field, n, n);
  std::vector<bool> used(n, false);
  for (const auto& [target, coeffs] : rows) {
    for (std::size_t j = 0; j < n; ++j) a.at(target, j) = coeffs[j];
    used[target] = true;
  }
  std::size_t filled = rows.size();
  for (std::size_t target = 0; target < n; ++target) {
    if (used[target]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      Matrix trial = a;
      for (std::size_t c = 0; c < n; ++c) trial.at(target, c) = Scalar::from_int(field, c == j ? 1 : 0);
      Matrix sub(field, filled + 1, n);
      std::size_t r = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!used[i] && i != target) continue;
        for (std::size_t c = 0; c < n; ++c) sub.at(r, c) = trial.at(i, c);
        ++r;
      }
      if (sub.rank() == filled + 1) {
        a = trial;
        break;
      }
    }
    used[target] = true;
    ++filled;
  }
  const auto inv = a.inverse();
  check_internal(inv.has_value(), "coordinate rows are independent");
  return substitute_jet(f, JetAutomorphism::linear(*inv, bound));
}

unsigned weight_of(const Monomial& m, const std::vector<unsigned>& weights) {
  unsigned w = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) w += m[i] * weights[i];
  return w;
}

ClearStatus clear_below(Polynomial& f, const std::vector<unsigned>& weights, unsigned degree,
                        const std::vector<Carrier>& carriers, JetBound bound, std::string* blocker) {
  const std::size_t n = f.nvars();
  const FieldSpec field = f.field();
  for (int iter = 0; iter < 20000; ++iter) {
    const Term* low = nullptr;
    unsigned low_w = degree;
    for (const auto& t : f.terms()) {
      const unsigned w = weight_of(t.mono, weights);
      if (w < low_w) {
        low_w = w;
        low = &t;
      }
    }
    if (low == nullptr) return ClearStatus::Done;
    bool moved = false;
    for (const auto& c : carriers) {
      if (!c.cofactor.divides(low->mono)) continue;
      const Monomial rest = c.cofactor.quotient_of(low->mono);
      Monomial q(n);
      bool even = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (rest[i] % 2 != 0) even = false;
        q.set(i, rest[i] / 2);
      }
      if (!even) continue;
      Monomial carrier_mono = c.cofactor;
      carrier_mono.set(c.var, carrier_mono[c.var] + 2);
      const Scalar e = f.coefficient(carrier_mono);
      if (e.is_zero()) continue;
      const Scalar s = -(low->coeff / e);
      std::vector<Polynomial> images;
      for (std::size_t i = 0; i < n; ++i) {
        Polynomial xi = Polynomial::variable(field, n, i);
        if (i == c.var) xi = xi + Polynomial::monomial(field, q, s);
        images.push_back(std::move(xi));
      }
      f = substitute_images(f, images, bound);
      moved = true;
      break;
    }
    if (!moved) {
      if (blocker != nullptr) {
        *blocker = Polynomial::monomial(field, low->mono, Scalar::from_int(field, 1)).to_string();
      }
      return ClearStatus::Blocked;
    }
  }
  if (blocker != nullptr) *blocker = "iteration limit";
  return ClearStatus::Blocked;
}

Monomial mono(std::size_t nvars, std::initializer_list<unsigned> exps) {
  Monomial m(nvars);
  std::size_t i = 0;
  for (unsigned e : exps) m.set(i++, e);
  return m;
}

Polynomial embed(const Polynomial& f, std::size_t nvars) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < f.nvars(); ++i) m.set(i, t.mono[i]);
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(f.field(), nvars, std::move(terms));
}

}  // namespace singclass::detail
