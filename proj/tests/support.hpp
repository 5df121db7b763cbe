#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "singclass/parse.hpp"
#include "singclass/polynomial.hpp"

namespace testing {

inline singclass::FieldSpec field(std::uint64_t p) { return singclass::FieldSpec::make(p); }

inline singclass::Polynomial poly(const std::string& text, std::uint64_t p, std::size_t nvars) {
  return singclass::parse_poly(text, field(p), singclass::default_var_names(nvars));
}

inline singclass::Polynomial poly(const std::string& text, std::uint64_t p, const std::vector<std::string>& vars) {
  return singclass::parse_poly(text, field(p), vars);
}

/// Random polynomial with terms of degree in [min_degree, max_degree].
inline singclass::Polynomial random_poly(std::mt19937_64& rng, singclass::FieldSpec f, std::size_t nvars,
                                         unsigned min_degree, unsigned max_degree, int max_terms) {
  std::uniform_int_distribution<unsigned> deg(min_degree, max_degree);
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::uniform_int_distribution<long> coeff(f.is_rational() ? -5 : 1,
                                            f.is_rational() ? 5 : static_cast<long>(f.characteristic()) - 1);
  std::vector<singclass::Term> terms;
  for (int c = count(rng); c > 0; --c) {
    std::vector<unsigned> e(nvars, 0);
    for (unsigned d = deg(rng); d > 0; --d) ++e[var(rng)];
    long c0 = 0;
    while (c0 == 0) c0 = coeff(rng);
    terms.push_back({singclass::Monomial(nvars, std::span<const unsigned>(e)), singclass::Scalar::from_int(f, c0)});
  }
  return singclass::Polynomial::from_terms(f, nvars, std::move(terms));
}

}  // namespace testing
