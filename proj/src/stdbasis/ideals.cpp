#include "singclass/errors.hpp"
#include "singclass/stdbasis.hpp"

namespace singclass {

IdealGens jacobian_ideal(const Polynomial& f) {
  IdealGens gens;
  for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back(partial_derivative(f, i));
  return gens;
}

IdealGens tjurina_ideal(const Polynomial& f) {
  IdealGens gens{f};
  for (auto& g : jacobian_ideal(f)) gens.push_back(std::move(g));
  return gens;
}

IdealGens times_m_power(const IdealGens& ideal, unsigned k) {
  if (ideal.empty()) return {};
  const std::size_t n = ideal.front().nvars();
  IdealGens out;
  const Scalar one = Scalar::from_int(ideal.front().field(), 1);
  for (const auto& m : monomials_up_to(n, k)) {
    if (m.degree() != k) continue;
    for (const auto& g : ideal) {
      if (!g.is_zero()) out.push_back(g.times_monomial(m, one));
    }
  }
  return out;
}

IdealGens concat(const IdealGens& a, const IdealGens& b) {
  IdealGens out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  // Depth-first over non-decreasing variable indices generates each monomial once.
  auto visit = [&](auto&& self, std::size_t first_var) -> void {
    out.push_back(m);
    if (m.degree() == degree) return;
    for (std::size_t v = first_var; v < nvars; ++v) {
      m.set(v, m[v] + 1);
      self(self, v);
      m.set(v, m[v] - 1);
    }
  };
  visit(visit, 0);
  std::sort(out.begin(), out.end(), DsGreater{});
  return out;
}

}  // namespace singclass
