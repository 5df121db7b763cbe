#include "singclass/splitting.hpp"

#include "singclass/errors.hpp"
#include "singclass/linalg.hpp"

namespace singclass {

namespace {

Monomial product_mono(std::size_t n, std::size_t i, std::size_t j) {
  Monomial m(n);
  m.set(i, 1);
  m.set(j, m[j] + 1);
  return m;
}

// Tracks the 2-jet and the accumulated linear map x = T y.
class QuadraticReducer {
 public:
  explicit QuadraticReducer(const Polynomial& f)
      : field_(f.field()), n_(f.nvars()), q_(f.homogeneous_part(2)), t_(Matrix::identity(field_, n_)) {}

  Scalar coeff(std::size_t i, std::size_t j) const { return q_.coefficient(product_mono(n_, i, j)); }

  // Applies x = E y.
  void apply(const Matrix& e) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n_; ++i) {
      std::vector<Term> terms;
      for (std::size_t j = 0; j < n_; ++j) terms.push_back({Monomial::variable(n_, j), e.at(i, j)});
      images.push_back(Polynomial::from_terms(field_, n_, std::move(terms)));
    }
    q_ = substitute_images(q_, images, JetBound(2));
    t_ = t_ * e;
  }

  void swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    Matrix e = Matrix::identity(field_, n_);
    e.at(a, a) = Scalar(field_);
    e.at(b, b) = Scalar(field_);
    e.at(a, b) = Scalar::from_int(field_, 1);
    e.at(b, a) = Scalar::from_int(field_, 1);
    apply(e);
  }

  // x_target -> x_target + sum_j c_j x_j.
  void shear(std::size_t target, const std::vector<std::pair<std::size_t, Scalar>>& add) {
    Matrix e = Matrix::identity(field_, n_);
    for (const auto& [j, c] : add) e.at(target, j) += c;
    apply(e);
  }

  void scale(std::size_t target, const Scalar& c) {
    Matrix e = Matrix::identity(field_, n_);
    e.at(target, target) = c;
    apply(e);
  }

  const Polynomial& quad() const { return q_; }
  const Matrix& map() const { return t_; }
  std::size_t nvars() const { return n_; }
  const FieldSpec& field() const { return field_; }

 private:
  FieldSpec field_;
  std::size_t n_;
  Polynomial q_;
  Matrix t_;
};

std::size_t reduce_odd(QuadraticReducer& r) {
  const std::size_t n = r.nvars();
  const FieldSpec field = r.field();
  const Scalar two = Scalar::from_int(field, 2);
  std::size_t k = 0;
  while (k < n) {
    std::size_t pick = n;
    for (std::size_t i = k; i < n && pick == n; ++i) {
      if (!r.coeff(i, i).is_zero()) pick = i;
    }
    if (pick == n) {
      for (std::size_t i = k; i < n && pick == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!r.coeff(i, j).is_zero()) {
            r.shear(j, {{i, Scalar::from_int(field, 1)}});
            pick = i;
            break;
          }
        }
      }
    }
    if (pick == n) break;
    r.swap(k, pick);
    const Scalar a = r.coeff(k, k);
    std::vector<std::pair<std::size_t, Scalar>> add;
    for (std::size_t j = k + 1; j < n; ++j) {
      const Scalar c = r.coeff(k, j);
      if (!c.is_zero()) add.push_back({j, -(c / (two * a))});
    }
    if (!add.empty()) r.shear(k, add);
    ++k;
  }
  return k;
}

std::size_t reduce_char2(QuadraticReducer& r) {
  const std::size_t n = r.nvars();
  const FieldSpec field = r.field();
  std::size_t k = 0;
  while (k + 1 < n) {
    std::size_t pi = n;
    std::size_t pj = n;
    for (std::size_t i = k; i < n && pi == n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!r.coeff(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == n) break;
    r.swap(k, pi);
    if (pj == k) pj = pi;
    r.swap(k + 1, pj);
    r.scale(k + 1, r.coeff(k, k + 1).inverse());
    // Decouple the pair from the remaining variables.
    std::vector<std::pair<std::size_t, Scalar>> to_first;
    std::vector<std::pair<std::size_t, Scalar>> to_second;
    for (std::size_t m = k + 2; m < n; ++m) {
      const Scalar c1 = r.coeff(k, m);
      const Scalar c2 = r.coeff(k + 1, m);
      if (!c2.is_zero()) to_first.push_back({m, -c2});
      if (!c1.is_zero()) to_second.push_back({m, -c1});
    }
    Matrix e = Matrix::identity(field, n);
    for (const auto& [m, c] : to_first) e.at(k, m) = c;
    for (const auto& [m, c] : to_second) e.at(k + 1, m) = c;
    if (!to_first.empty() || !to_second.empty()) r.apply(e);
    k += 2;
  }
  return k;
}

}  // namespace

QuadraticNormalForm quadratic_normal_form(const Polynomial& f, JetBound bound) {
  if (!f.constant_term().is_zero()) throw Error(ErrorCode::NotInMaximalIdeal, "f has a constant term");
  if (const auto ord = order_of(f); ord && *ord < 2) {
    throw Error(ErrorCode::OrderTooSmall, "f has a nonzero linear part");
  }
  QuadraticReducer r(f);
  const bool char2 = f.field().characteristic() == 2;
  const std::size_t rank = char2 ? reduce_char2(r) : reduce_odd(r);
  QuadraticNormalForm out{JetAutomorphism::linear(r.map(), bound), r.quad(), rank, {}, {}, {}};
  const std::size_t n = f.nvars();
  if (char2) {
    for (std::size_t i = 0; i + 1 < rank; i += 2) out.pairs.push_back({i, i + 1, r.coeff(i, i), r.coeff(i + 1, i + 1)});
    for (std::size_t i = rank; i < n; ++i) {
      if (!r.coeff(i, i).is_zero()) out.squares.push_back({i, r.coeff(i, i)});
    }
  } else {
    for (std::size_t i = 0; i < rank; ++i) out.diagonal.push_back({i, r.coeff(i, i)});
  }
  return out;
}

Polynomial drop_leading_vars(const Polynomial& f, std::size_t count) {
  const std::size_t n = f.nvars() - count;
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<unsigned> e(n);
    for (std::size_t v = 0; v < f.nvars(); ++v) {
      if (v < count) {
        if (t.mono[v] != 0) throw Error(ErrorCode::InvalidArgument, "dropped variable occurs in polynomial");
      } else {
        e[v - count] = t.mono[v];
      }
    }
    terms.push_back({Monomial(n, std::span<const unsigned>(e)), t.coeff});
  }
  return Polynomial::from_terms(f.field(), n, std::move(terms));
}

std::optional<Polynomial> SplitResult::residual_in_corank_vars() const {
  if (corank() == 0) return std::nullopt;
  return drop_leading_vars(residual, quad_rank);
}

SplitResult split(const Polynomial& f, JetBound bound) {
  QuadraticNormalForm qnf = quadratic_normal_form(f, bound);
  const std::size_t n = f.nvars();
  const std::size_t rank = qnf.rank;
  const FieldSpec field = f.field();
  const bool char2 = field.characteristic() == 2;
  const int N = bound.value();

  JetAutomorphism total = qnf.transform;
  Polynomial g = substitute_jet(f, total);

  // Rank-block quadratic part: everything of degree 2 in g touching the
  // first `rank` variables.
  auto touches_rank = [&](const Monomial& m) {
    for (std::size_t v = 0; v < rank; ++v) {
      if (m[v] != 0) return true;
    }
    return false;
  };

  for (int d = 3; d <= N && rank > 0; ++d) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(field, n, i));
    bool any = false;
    const Polynomial part = g.homogeneous_part(static_cast<unsigned>(d));
    for (const auto& t : part.terms()) {
      std::size_t v = 0;
      while (v < rank && t.mono[v] == 0) ++v;
      if (v == rank) continue;
      Monomial reduced = t.mono;
      reduced.set(v, reduced[v] - 1);
      any = true;
      if (char2) {
        // x_s x_{s+1} absorbs the term through the partner of v.
        const std::size_t partner = v % 2 == 0 ? v + 1 : v - 1;
        images[partner] = images[partner] - Polynomial::monomial(field, reduced, t.coeff);
      } else {
        const Scalar a = qnf.diagonal[v].a;
        images[v] = images[v] - Polynomial::monomial(field, reduced, t.coeff / (Scalar::from_int(field, 2) * a));
      }
    }
    if (!any) continue;
    const JetAutomorphism step(std::move(images), std::nullopt, bound);
    g = substitute_jet(g, step);
    total = then(total, step);
  }

  std::vector<Term> quad_terms;
  std::vector<Term> residual_terms;
  for (const auto& t : g.terms()) {
    if (touches_rank(t.mono)) {
      check_internal(t.mono.degree() == 2, "splitting left a higher-order term in the rank block");
      quad_terms.push_back(t);
    } else {
      residual_terms.push_back(t);
    }
  }
  SplitResult out{rank,
                  Polynomial::from_terms(field, n, std::move(quad_terms)),
                  Polynomial::from_terms(field, n, std::move(residual_terms)),
                  total,
                  bound,
                  std::move(qnf)};
  check_internal(substitute_jet(f, out.transform) == out.quad_form + out.residual,
                 "split reconstruction failed");
  return out;
}

}  // namespace singclass
