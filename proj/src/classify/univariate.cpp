#include <algorithm>

#include "singclass/classify.hpp"
#include "singclass/errors.hpp"

namespace singclass {

namespace {

unsigned p_valuation(unsigned n, std::uint64_t p) {
  unsigned e = 0;
  while (n % p == 0) {
    n /= static_cast<unsigned>(p);
    ++e;
  }
  return e;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

}  // namespace

UnivariateReport classify_univariate(const Polynomial& f, JetBound cap) {
  if (f.nvars() != 1) throw Error(ErrorCode::NotUnivariate, "expected one variable, got " + std::to_string(f.nvars()));
  const std::uint64_t p = f.field().characteristic();
  if (p == 0) throw Error(ErrorCode::InvalidArgument, "univariate right classification needs p > 0");
  require_in_maximal_ideal(f);
  const auto ord = order_of(f);
  if (!ord || *ord < 2) throw Error(ErrorCode::OrderTooSmall, "f must lie in m^2");

  std::vector<unsigned> supp;
  const Polynomial jet = f.jet(cap.value());
  for (const auto& t : jet.terms()) supp.push_back(t.mono[0]);
  std::sort(supp.begin(), supp.end());

  UnivariateReport r;
  r.mult = supp.front();
  r.e = ~0u;
  for (unsigned n : supp) r.e = std::min(r.e, p_valuation(n, p));
  if (r.e > 0) {
    throw Error(ErrorCode::QNotFound,
                "every exponent up to " + std::to_string(cap.value()) + " is divisible by p = " + std::to_string(p));
  }
  r.q = *std::find_if(supp.begin(), supp.end(), [&](unsigned n) { return p_valuation(n, p) == r.e; });
  r.k = 1;
  if (r.mult != r.q) {
    const std::uint64_t pe = ipow(p, r.e);
    for (unsigned n : supp) {
      if (n >= r.q) break;
      const std::uint64_t den = ipow(p, p_valuation(n, p)) - pe;
      const auto kn = static_cast<unsigned>((r.q - n + den - 1) / den);
      r.k = std::max(r.k, kn);
    }
  }
  r.determinacy = r.q + ipow(p, r.e) * (r.k - 1);
  r.mu = milnor_number(f, cap);
  check_internal(r.mu.value.finite && r.mu.value.value + 1 == r.q, "q = mu + 1");
  r.modality = r.mu.value.value / p;
  r.simple = r.mu.value.value < p;
  if (r.simple) {
    r.normal_form_hint = Polynomial::monomial(f.field(), Monomial::variable(1, 0, static_cast<unsigned>(r.q)),
                                              Scalar::from_int(f.field(), 1));
  }
  return r;
}

}  // namespace singclass
