#include "singclass/stdbasis.hpp"

#include <algorithm>

#include "singclass/errors.hpp"
#include "singclass/simd/kernels.hpp"

namespace singclass {

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t seq;
};

// Working basis during the completion: elements are monic, their leading
// monomials mirrored in `lanes` for the divisor search.
class Completion {
 public:
  Completion(FieldSpec field, std::size_t nvars, JetBound bound) : field_(field), nvars_(nvars), bound_(bound) {}

  Polynomial top_reduce(Polynomial h) const {
    const auto& kernels = simd::active();
    const int N = bound_.value();
    while (!h.is_zero()) {
      const Term& lt = h.leading();
      const std::size_t k = kernels.find_divisor(lanes_.data(), lanes_.size(), lt.mono.lanes());
      if (k == lanes_.size()) break;
      const Polynomial& g = basis_[k];
      h = h.minus_scaled_multiple(lt.coeff, g.leading().mono.quotient_of(lt.mono), g, N);
    }
    return h;
  }

  void add(Polynomial h) {
    h = h.monic();
    const std::size_t k = basis_.size();
    const Monomial& lm = h.leading().mono;
    const int N = bound_.value();

    // Chain criterion, Gebauer-Moeller style.
    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = basis_[i].leading().mono.lcm(lm);
      if (static_cast<int>(l.degree()) > N) continue;  // S-polynomial vanishes in the jet ring
      fresh.push_back({i, k, l, 0});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < fresh.size() && !redundant; ++b) {
        if (a == b) continue;
        const bool divides = fresh[b].lcm.divides(fresh[a].lcm);
        if (divides && !(fresh[b].lcm == fresh[a].lcm)) redundant = true;
        if (divides && fresh[b].lcm == fresh[a].lcm && b < a) redundant = true;
      }
      if (!redundant) kept.push_back(fresh[a]);
    }
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lm.divides(p.lcm)) return false;
      const Monomial li = basis_[p.i].leading().mono.lcm(lm);
      const Monomial lj = basis_[p.j].leading().mono.lcm(lm);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (auto& p : kept) {
      p.seq = seq_++;
      pairs_.push_back(p);
    }
    lanes_.push_back(lm.lanes());
    basis_.push_back(std::move(h));
  }

  void insert(const Polynomial& g) {
    Polynomial h = top_reduce(g.jet(bound_.value()));
    if (!h.is_zero()) add(std::move(h));
  }

  void run() {
    const int N = bound_.value();
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        return a.seq < b.seq;
      });
      const Pair p = *best;
      pairs_.erase(best);
      const Polynomial& gi = basis_[p.i];
      const Polynomial& gj = basis_[p.j];
      const Scalar one = Scalar::from_int(field_, 1);
      Polynomial s = gi.times_monomial_truncated(gi.leading().mono.quotient_of(p.lcm), one, N);
      s = s.minus_scaled_multiple(one, gj.leading().mono.quotient_of(p.lcm), gj, N);
      insert(s);
    }
  }

  std::vector<Polynomial> take() { return std::move(basis_); }

 private:
  FieldSpec field_;
  std::size_t nvars_;
  JetBound bound_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial::Lanes> lanes_;
  std::vector<Pair> pairs_;
  std::uint64_t seq_ = 0;
};

// Removes elements with redundant leading monomials, sorts by leading
// monomial (largest first) and reduces every tail completely.
std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, FieldSpec field, std::size_t nvars,
                                    JetBound bound) {
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& lm = basis[i].leading().mono;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& other = basis[j].leading().mono;
      if (other.divides(lm) && (!(other == lm) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
    return ds_compare(a.leading().mono, b.leading().mono) > 0;
  });
  StandardBasis draft(field, nvars, bound, minimal);
  std::vector<Polynomial> reduced;
  for (const auto& g : minimal) {
    Polynomial head = Polynomial::monomial(field, g.leading().mono, g.leading().coeff);
    reduced.push_back(head + normal_form(g.tail(), draft));
  }
  return reduced;
}

}  // namespace

StandardBasis::StandardBasis(FieldSpec field, std::size_t nvars, JetBound bound, std::vector<Polynomial> elements)
    : field_(field), nvars_(nvars), bound_(bound), elements_(std::move(elements)) {
  for (const auto& g : elements_) {
    staircase_.push_back(g.leading().mono);
    lanes_.push_back(g.leading().mono.lanes());
  }
  const int N = bound_.value();
  if (in_leading_ideal(Monomial(nvars_))) {
    complete_ = true;
    max_standard_degree_ = -1;
    standard_count_ = 0;
    return;
  }
  // Depth-first walk of the order ideal of standard monomials.
  Monomial m(nvars_);
  std::uint64_t count = 0;
  int max_degree = 0;
  bool saturated = false;
  auto visit = [&](auto&& self, std::size_t first_var) -> void {
    if (saturated) return;
    ++count;
    max_degree = std::max(max_degree, static_cast<int>(m.degree()));
    if (count >= kCountCap) {
      saturated = true;
      return;
    }
    if (static_cast<int>(m.degree()) == N) return;
    for (std::size_t v = first_var; v < nvars_; ++v) {
      m.set(v, m[v] + 1);
      if (!in_leading_ideal(m)) self(self, v);
      m.set(v, m[v] - 1);
    }
  };
  visit(visit, 0);
  standard_count_ = count;
  saturated_ = saturated;
  max_standard_degree_ = max_degree;
  complete_ = !saturated && max_degree < N;
}

std::size_t StandardBasis::find_reducer(const Monomial& m) const {
  return simd::active().find_divisor(lanes_.data(), lanes_.size(), m.lanes());
}

StandardBasis standard_basis(const IdealGens& ideal, JetBound bound) {
  if (ideal.empty()) throw Error(ErrorCode::InvalidArgument, "ideal needs at least one generator");
  const FieldSpec field = ideal.front().field();
  const std::size_t nvars = ideal.front().nvars();
  for (const auto& g : ideal) {
    if (g.field() != field) throw Error(ErrorCode::FieldMismatch, "generators over different fields");
    if (g.nvars() != nvars) throw Error(ErrorCode::ArityMismatch, "generators differ in nvars");
  }
  std::vector<Polynomial> gens;
  for (const auto& g : ideal) {
    Polynomial h = g.jet(bound.value());
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return ds_compare(a.leading().mono, b.leading().mono) > 0;
  });
  Completion completion(field, nvars, bound);
  for (const auto& g : gens) completion.insert(g);
  completion.run();
  return StandardBasis(field, nvars, bound, interreduce(completion.take(), field, nvars, bound));
}

Polynomial normal_form(const Polynomial& f, const StandardBasis& sb) {
  if (f.field() != sb.field()) throw Error(ErrorCode::FieldMismatch, "normal form across fields");
  if (f.nvars() != sb.nvars()) throw Error(ErrorCode::ArityMismatch, "normal form across arities");
  const int N = sb.bound().value();
  Polynomial p = f.jet(N);
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    const std::size_t k = sb.find_reducer(lt.mono);
    if (k == sb.elements().size()) {
      remainder.push_back(lt);
      p = p.tail();
      continue;
    }
    const Polynomial& g = sb.elements()[k];
    p = p.minus_scaled_multiple(lt.coeff / g.leading().coeff, g.leading().mono.quotient_of(lt.mono), g, N);
  }
  return Polynomial::from_terms(f.field(), f.nvars(), std::move(remainder));
}

std::vector<Monomial> standard_monomials(const StandardBasis& sb) {
  if (sb.standard_count() >= StandardBasis::kCountCap) {
    throw Error(ErrorCode::TooLarge, "too many standard monomials to list");
  }
  std::vector<Monomial> out;
  if (sb.max_standard_degree() < 0) return out;
  const std::size_t n = sb.nvars();
  const int N = sb.bound().value();
  Monomial m(n);
  auto visit = [&](auto&& self, std::size_t first_var) -> void {
    out.push_back(m);
    if (static_cast<int>(m.degree()) == N) return;
    for (std::size_t v = first_var; v < n; ++v) {
      m.set(v, m[v] + 1);
      if (!sb.in_leading_ideal(m)) self(self, v);
      m.set(v, m[v] - 1);
    }
  };
  visit(visit, 0);
  std::sort(out.begin(), out.end(), DsGreater{});
  return out;
}

DimValue quotient_dim(const StandardBasis& sb) {
  return DimValue{sb.complete(), sb.standard_count(), sb.bound().value()};
}

DimValue quotient_dim(const IdealGens& ideal, JetBound bound) {
  return quotient_dim(standard_basis(ideal, bound));
}

std::optional<Monomial> highcorner(const StandardBasis& sb) {
  if (!sb.complete() || sb.max_standard_degree() < 0) return std::nullopt;
  const auto monos = standard_monomials(sb);
  return monos.back();
}

bool contains_m_power(const StandardBasis& sb, unsigned k) {
  if (static_cast<int>(k) > sb.bound().value()) {
    throw Error(ErrorCode::BoundTooSmall, "m^" + std::to_string(k) + " lies beyond the jet bound " +
                                              std::to_string(sb.bound().value()));
  }
  if (sb.saturated()) throw Error(ErrorCode::TooLarge, "standard monomial walk saturated");
  return sb.max_standard_degree() < static_cast<int>(k);
}

bool contains_m_power(const IdealGens& ideal, unsigned k, JetBound bound) {
  if (static_cast<int>(k) > bound.value()) {
    throw Error(ErrorCode::BoundTooSmall, "m^" + std::to_string(k) + " lies beyond the jet bound " +
                                              std::to_string(bound.value()));
  }
  return contains_m_power(standard_basis(ideal, bound), k);
}

}  // namespace singclass
