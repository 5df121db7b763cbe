#include "singclass/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "singclass/errors.hpp"

namespace singclass {

JetBound::JetBound(int value) : value_(value) {
  if (value < 1 || value > static_cast<int>(kMaxExponent)) {
    throw Error(ErrorCode::InvalidArgument,
                "jet bound must be in [1, " + std::to_string(kMaxExponent) + "], got " +
                    std::to_string(value));
  }
}

Polynomial::Polynomial(FieldSpec field, std::size_t nvars) : field_(field), nvars_(nvars) {
  if (nvars == 0 || nvars > kMaxVars) {
    throw Error(ErrorCode::InvalidArgument,
                "number of variables must be in [1, " + std::to_string(kMaxVars) + "]");
  }
}

Polynomial Polynomial::constant(FieldSpec field, std::size_t nvars, const Scalar& value) {
  Polynomial p(field, nvars);
  if (!value.is_zero()) p.terms_.push_back({Monomial(nvars), value});
  return p;
}

Polynomial Polynomial::constant(FieldSpec field, std::size_t nvars, long value) {
  return constant(field, nvars, Scalar::from_int(field, value));
}

Polynomial Polynomial::variable(FieldSpec field, std::size_t nvars, std::size_t index) {
  return monomial(field, Monomial::variable(nvars, index), Scalar::from_int(field, 1));
}

Polynomial Polynomial::monomial(FieldSpec field, const Monomial& mono, const Scalar& coeff) {
  Polynomial p(field, mono.nvars());
  if (!coeff.is_zero()) p.terms_.push_back({mono, coeff});
  return p;
}

Polynomial Polynomial::from_terms(FieldSpec field, std::size_t nvars, std::vector<Term> terms) {
  Polynomial p(field, nvars);
  for (const auto& t : terms) {
    if (t.mono.nvars() != nvars) throw Error(ErrorCode::ArityMismatch, "monomial arity mismatch");
    if (t.coeff.field() != field) throw Error(ErrorCode::FieldMismatch, "coefficient field mismatch");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return ds_compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Scalar Polynomial::coefficient(const Monomial& mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, const Monomial& m) { return ds_compare(t.mono, m) > 0; });
  if (it != terms_.end() && it->mono == mono) return it->coeff;
  return Scalar(field_);
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
  return Scalar(field_);
}

unsigned Polynomial::max_degree() const {
  return terms_.empty() ? 0 : terms_.back().mono.degree();
}

Polynomial Polynomial::jet(int k) const {
  Polynomial p(field_, nvars_);
  for (const auto& t : terms_) {
    if (static_cast<int>(t.mono.degree()) > k) break;
    p.terms_.push_back(t);
  }
  return p;
}

Polynomial Polynomial::homogeneous_part(unsigned degree) const {
  Polynomial p(field_, nvars_);
  for (const auto& t : terms_) {
    if (t.mono.degree() == degree) p.terms_.push_back(t);
  }
  return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial p(field_, nvars_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
  Polynomial p(field_, nvars_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves ds order.
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::times_monomial_truncated(const Monomial& m, const Scalar& c, int bound) const {
  Polynomial p(field_, nvars_);
  if (c.is_zero()) return p;
  for (const auto& t : terms_) {
    if (static_cast<int>(t.mono.degree() + m.degree()) > bound) break;
    p.terms_.push_back({t.mono * m, t.coeff * c});
  }
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

Polynomial Polynomial::tail() const {
  Polynomial p(field_, nvars_);
  if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void Polynomial::require_compatible(const Polynomial& other) const {
  if (field_ != other.field_) {
    throw Error(ErrorCode::FieldMismatch, field_.name() + " vs " + other.field_.name());
  }
  if (nvars_ != other.nvars_) throw Error(ErrorCode::ArityMismatch, "polynomials differ in nvars");
}

Polynomial merge_add(const Polynomial& a, const Polynomial& b, bool subtract) {
  a.require_compatible(b);
  Polynomial r(a.field_, a.nvars_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int cmp;
    if (i == a.terms_.size()) {
      cmp = -1;
    } else if (j == b.terms_.size()) {
      cmp = 1;
    } else {
      cmp = ds_compare(a.terms_[i].mono, b.terms_[j].mono);
    }
    if (cmp > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (cmp < 0) {
      const auto& t = b.terms_[j++];
      r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
    } else {
      Scalar c = a.terms_[i].coeff;
      if (subtract) {
        c -= b.terms_[j].coeff;
      } else {
        c += b.terms_[j].coeff;
      }
      if (!c.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge_add(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge_add(a, b, true); }

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b, int bound) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::FieldMismatch, a.field().name() + " vs " + b.field().name());
  }
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::ArityMismatch, "polynomials differ in nvars");
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(a.size() * 2 + b.size() * 2);
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      // Terms are sorted by ascending degree, so later t only get larger.
      if (bound >= 0 && static_cast<int>(s.mono.degree() + t.mono.degree()) > bound) break;
      auto [it, inserted] = acc.try_emplace(s.mono * t.mono, a.field());
      it->second += s.coeff * t.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  }
  return Polynomial::from_terms(a.field(), a.nvars(), std::move(terms));
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b, -1); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_ || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

Polynomial Polynomial::minus_scaled_multiple(const Scalar& c, const Monomial& m, const Polynomial& g,
                                             int bound) const {
  Polynomial r(field_, nvars_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  const std::size_t gn = g.terms_.size();
  while (true) {
    const bool g_left = j < gn && static_cast<int>(g.terms_[j].mono.degree() + m.degree()) <= bound;
    if (i == terms_.size() && !g_left) break;
    if (!g_left) {
      r.terms_.insert(r.terms_.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
      break;
    }
    Monomial gm = g.terms_[j].mono * m;
    const int cmp = i == terms_.size() ? -1 : ds_compare(terms_[i].mono, gm);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({gm, -(g.terms_[j].coeff * c)});
      ++j;
    } else {
      Scalar v = terms_[i].coeff;
      v -= g.terms_[j].coeff * c;
      if (!v.is_zero()) r.terms_.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() < nvars_) throw Error(ErrorCode::ArityMismatch, "too few variable names");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string coeff = t.coeff.to_string();
    bool negative = false;
    if (field_.is_rational() && coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < nvars_; ++v) {
      const unsigned e = t.mono[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[v];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

std::string Polynomial::to_string() const { return to_string(default_var_names(nvars_)); }

std::size_t Polynomial::hash() const {
  std::size_t h = nvars_ * 0x9E3779B97F4A7C15ULL;
  for (const auto& t : terms_) {
    h ^= t.mono.hash() + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h ^= t.coeff.hash() + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Polynomial mul_truncated(const Polynomial& f, const Polynomial& g, JetBound bound) {
  return multiply(f, g, bound.value());
}

Polynomial pow_truncated(const Polynomial& f, unsigned exponent, JetBound bound) {
  Polynomial result = Polynomial::constant(f.field(), f.nvars(), 1);
  Polynomial base = f.jet(bound.value());
  while (exponent > 0) {
    if (exponent & 1U) result = mul_truncated(result, base, bound);
    exponent >>= 1U;
    if (exponent > 0) base = mul_truncated(base, base, bound);
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t index) {
  if (index >= f.nvars()) {
    throw Error(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(index) +
                                                " out of range for " + std::to_string(f.nvars()) +
                                                " variables");
  }
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    const unsigned e = t.mono[index];
    if (e == 0) continue;
    Scalar c = t.coeff * Scalar::from_int(f.field(), static_cast<long>(e));
    if (c.is_zero()) continue;
    Monomial m = t.mono;
    m.set(index, e - 1);
    terms.push_back({m, std::move(c)});
  }
  return Polynomial::from_terms(f.field(), f.nvars(), std::move(terms));
}

std::optional<unsigned> order_of(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  return f.leading().mono.degree();
}

std::vector<std::string> default_var_names(std::size_t nvars) {
  static const char* const kShort[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) {
    names.push_back(nvars <= 3 ? std::string(kShort[i]) : "x" + std::to_string(i + 1));
  }
  return names;
}

}  // namespace singclass
