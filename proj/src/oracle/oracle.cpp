#include "singclass/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "json.hpp"
#include "singclass/errors.hpp"
#include "singclass/invariants.hpp"
#include "singclass/stdbasis.hpp"

namespace singclass {

namespace {

using Digits = std::vector<std::uint32_t>;
using JetMatrix = std::vector<std::uint32_t>;  // row-major m x m over F_p

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > limit / base) return limit + 1;
    out *= base;
  }
  return out;
}

std::vector<Monomial> monomials_between(std::size_t nvars, unsigned lo, unsigned hi) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_up_to(nvars, hi)) {
    if (m.degree() >= lo) out.push_back(m);
  }
  return out;
}

FieldSpec prime_field(std::uint64_t p) {
  if (p == 0) throw Error(ErrorCode::InvalidArgument, "the oracle works over F_p only");
  return FieldSpec::make(p);
}

Digits decode(const JetSpace& s, std::uint64_t index) {
  Digits d(s.monomials.size());
  for (std::size_t j = d.size(); j-- > 0;) {
    d[j] = static_cast<std::uint32_t>(index % s.p);
    index /= s.p;
  }
  return d;
}

std::uint64_t encode(const JetSpace& s, const Digits& d) {
  std::uint64_t index = 0;
  for (auto c : d) index = index * s.p + c;
  return index;
}

std::uint64_t linear_group_size(std::uint64_t p, std::size_t n) {
  std::uint64_t out = 1;
  const std::uint64_t pn = checked_pow(p, n, ~std::uint64_t{0} >> 1);
  for (std::size_t i = 0; i < n; ++i) out *= pn - checked_pow(p, i, pn);
  return out;
}

std::uint64_t size_of(std::uint64_t p, std::size_t n, unsigned img_deg, int unit_deg) {
  const std::uint64_t limit = ~std::uint64_t{0} >> 8;
  std::uint64_t size = linear_group_size(p, n);
  const std::uint64_t higher = checked_pow(p, n * monomials_between(n, 2, img_deg).size(), limit);
  size = higher > limit / size ? limit + 1 : size * higher;
  if (unit_deg >= 0) {
    const std::uint64_t units =
        (p - 1) * checked_pow(p, monomials_between(n, 1, static_cast<unsigned>(unit_deg)).size(), limit);
    size = units > limit / std::max<std::uint64_t>(size, 1) ? limit + 1 : size * units;
  }
  return size;
}

// Calls `visit` once per element with images of degree <= img_deg and, when
// unit_deg >= 0, a unit of degree <= unit_deg.
void for_each_element(std::uint64_t p, std::size_t n, unsigned img_deg, int unit_deg, unsigned bound,
                      const std::function<void(const JetAutomorphism&)>& visit) {
  const FieldSpec field = prime_field(p);
  const auto higher = monomials_between(n, 2, img_deg);
  const auto unit_monos = unit_deg >= 0 ? monomials_between(n, 1, static_cast<unsigned>(unit_deg))
                                        : std::vector<Monomial>{};
  const std::size_t nlin = n * n;
  const std::size_t nhigh = n * higher.size();
  const std::size_t nslots = nlin + nhigh + (unit_deg >= 0 ? 1 + unit_monos.size() : 0);
  Digits slot(nslots, 0);
  if (unit_deg >= 0) slot[nlin + nhigh] = 1;  // unit constant is nonzero
  auto scalar = [&](std::uint32_t c) { return Scalar::from_int(field, static_cast<long>(c)); };

  while (true) {
    Matrix lin(field, n, n);
    for (std::size_t i = 0; i < nlin; ++i) lin.at(i / n, i % n) = scalar(slot[i]);
    if (lin.rank() == n) {
      std::vector<Polynomial> images;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < n; ++j) {
          if (slot[i * n + j] != 0) terms.push_back({Monomial::variable(n, j), scalar(slot[i * n + j])});
        }
        for (std::size_t h = 0; h < higher.size(); ++h) {
          const auto c = slot[nlin + i * higher.size() + h];
          if (c != 0) terms.push_back({higher[h], scalar(c)});
        }
        images.push_back(Polynomial::from_terms(field, n, std::move(terms)));
      }
      std::optional<Polynomial> unit;
      if (unit_deg >= 0) {
        std::vector<Term> terms{{Monomial(n), scalar(slot[nlin + nhigh])}};
        for (std::size_t u = 0; u < unit_monos.size(); ++u) {
          const auto c = slot[nlin + nhigh + 1 + u];
          if (c != 0) terms.push_back({unit_monos[u], scalar(c)});
        }
        unit = Polynomial::from_terms(field, n, std::move(terms));
      }
      visit(JetAutomorphism(std::move(images), std::move(unit), JetBound(static_cast<int>(bound))));
    }
    // Mixed-radix increment; the unit constant runs over 1..p-1.
    std::size_t i = nslots;
    while (i-- > 0) {
      const bool unit_const = unit_deg >= 0 && i == nlin + nhigh;
      if (++slot[i] < p) break;
      slot[i] = unit_const ? 1 : 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

JetMatrix action_matrix(const JetSpace& s, const JetAutomorphism& g) {
  const std::size_t m = s.monomials.size();
  JetMatrix out(m * m, 0);
  const FieldSpec field = g.field();
  for (std::size_t j = 0; j < m; ++j) {
    const Polynomial img =
        substitute_jet(Polynomial::monomial(field, s.monomials[j], Scalar::from_int(field, 1)), g);
    for (std::size_t i = 0; i < m; ++i) {
      out[i * m + j] = static_cast<std::uint32_t>(img.coefficient(s.monomials[i]).residue());
    }
  }
  return out;
}

Digits apply(const JetSpace& s, const JetMatrix& a, const Digits& f) {
  const std::size_t m = f.size();
  Digits out(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < m; ++j) acc += static_cast<std::uint64_t>(a[i * m + j]) * f[j];
    out[i] = static_cast<std::uint32_t>(acc % s.p);
  }
  return out;
}

// Distinct action matrices of the elements of `group` on k-jets.
std::vector<JetMatrix> effective_matrices(const JetSpace& s, const std::vector<JetAutomorphism>& group,
                                          Action action) {
  std::set<JetMatrix> mats;
  const JetBound bound(static_cast<int>(s.k));
  for (const auto& g : group) {
    std::vector<Polynomial> images;
    for (const auto& img : g.images()) images.push_back(img.jet(static_cast<int>(s.k) - 1));
    std::optional<Polynomial> unit;
    if (action == Action::Contact && g.unit()) unit = g.unit()->jet(static_cast<int>(s.k) - 2);
    mats.insert(action_matrix(s, JetAutomorphism(std::move(images), std::move(unit), bound)));
  }
  return {mats.begin(), mats.end()};
}

std::vector<JetMatrix> effective_matrices(const JetSpace& s, Action action) {
  std::set<JetMatrix> mats;
  const int unit_deg = action == Action::Contact ? static_cast<int>(s.k) - 2 : -1;
  if (size_of(s.p, s.nvars, s.k - 1, unit_deg) > kMaxGroupSize) {
    throw Error(ErrorCode::TooLarge, "effective group exceeds the enumeration guard");
  }
  for_each_element(s.p, s.nvars, s.k - 1, unit_deg, s.k,
                   [&](const JetAutomorphism& g) { mats.insert(action_matrix(s, g)); });
  return {mats.begin(), mats.end()};
}

std::optional<std::uint64_t> certified(const std::function<InvariantValue()>& compute) {
  try {
    const InvariantValue v = compute();
    if (v.value.finite) return v.value.value;
  } catch (const Error&) {
  }
  return std::nullopt;
}

OrbitTable decompose(const JetSpace& space, const std::vector<JetMatrix>& mats, Action action,
                     std::uint64_t group_size) {
  OrbitTable t;
  t.space = space;
  t.action = action;
  t.group_size = group_size;
  t.orbit_of.assign(space.size, UINT32_MAX);
  const JetBound mk(static_cast<int>(space.k) - 1);
  const JetBound cap(40);
  for (std::uint64_t idx = 0; idx < space.size; ++idx) {
    if (t.orbit_of[idx] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(t.orbits.size());
    Orbit o;
    o.rep = idx;
    const Digits f = decode(space, idx);
    for (const auto& a : mats) {
      const std::uint64_t img = encode(space, apply(space, a, f));
      if (t.orbit_of[img] == UINT32_MAX) {
        t.orbit_of[img] = id;
        ++o.size;
      }
      check_internal(t.orbit_of[img] == id, "orbits are disjoint");
    }
    const Polynomial rep = space.jet(idx);
    o.tau_k = jet_quotient_dim_oracle(tjurina_ideal(rep), mk);
    o.mu_k = jet_quotient_dim_oracle(jacobian_ideal(rep), mk);
    if (!rep.is_zero()) {
      o.tau = certified([&] { return tjurina_number(rep, cap); });
      o.mu = certified([&] { return milnor_number(rep, cap); });
    }
    t.orbits.push_back(o);
  }
  return t;
}

// F_{p^r} with elements encoded as base-p digit strings of residues mod an
// irreducible polynomial of degree r; full addition/multiplication tables.
struct SmallField {
  std::uint32_t p = 2;
  std::uint32_t q = 2;
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;

  std::uint16_t plus(std::uint32_t a, std::uint32_t b) const { return add[a * q + b]; }
  std::uint16_t times(std::uint32_t a, std::uint32_t b) const { return mul[a * q + b]; }
};

using SmallPoly = std::vector<std::uint32_t>;  // low to high, over F_p

SmallPoly poly_mod(SmallPoly a, const SmallPoly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  std::uint32_t inv_lead = 1;
  while (inv_lead * m.back() % p != 1) ++inv_lead;
  while (a.size() > dm) {
    const std::uint32_t c = a.back() * inv_lead % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    a.pop_back();
  }
  return a;
}

bool is_irreducible(const SmallPoly& m, std::uint32_t p) {
  const std::size_t r = m.size() - 1;
  for (std::size_t d = 1; 2 * d <= r; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      SmallPoly div(d + 1, 0);
      div[d] = 1;
      std::uint64_t rest = c;
      for (std::size_t i = 0; i < d; ++i, rest /= p) div[i] = static_cast<std::uint32_t>(rest % p);
      SmallPoly rem = poly_mod(m, div, p);
      if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t x) { return x == 0; })) return false;
    }
  }
  return true;
}

SmallField make_small_field(std::uint32_t p, unsigned r) {
  SmallField f;
  f.p = p;
  f.q = 1;
  for (unsigned i = 0; i < r; ++i) f.q *= p;
  if (r == 0 || f.q > 1024) throw Error(ErrorCode::TooLarge, "extension field larger than 1024 elements");
  SmallPoly m(r + 1, 0);
  m[r] = 1;
  for (std::uint32_t c = 0;; ++c) {
    std::uint32_t rest = c;
    for (unsigned i = 0; i < r; ++i, rest /= p) m[i] = rest % p;
    if (is_irreducible(m, p)) break;
  }
  auto digits = [&](std::uint32_t a) {
    SmallPoly d(r, 0);
    for (unsigned i = 0; i < r; ++i, a /= p) d[i] = a % p;
    return d;
  };
  auto pack = [&](const SmallPoly& d) {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return static_cast<std::uint16_t>(a);
  };
  f.add.resize(static_cast<std::size_t>(f.q) * f.q);
  f.mul.resize(static_cast<std::size_t>(f.q) * f.q);
  for (std::uint32_t a = 0; a < f.q; ++a) {
    const SmallPoly da = digits(a);
    for (std::uint32_t b = 0; b < f.q; ++b) {
      const SmallPoly db = digits(b);
      SmallPoly sum(r), prod(2 * r - 1, 0);
      for (unsigned i = 0; i < r; ++i) sum[i] = (da[i] + db[i]) % p;
      for (unsigned i = 0; i < r; ++i) {
        for (unsigned j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
      f.add[a * f.q + b] = pack(sum);
      f.mul[a * f.q + b] = pack(r > 1 ? poly_mod(prod, m, p) : prod);
    }
  }
  return f;
}

// Coefficients 0..level of a univariate polynomial over F_p, as field elements.
std::vector<std::uint32_t> dense_coefficients(const Polynomial& f, unsigned level) {
  std::vector<std::uint32_t> out(level + 1, 0);
  const Polynomial jet = f.jet(static_cast<int>(level));
  for (const auto& t : jet.terms()) {
    out[t.mono[0]] = static_cast<std::uint32_t>(t.coeff.residue());
  }
  return out;
}

struct EquivalenceSearch {
  const SmallField& field;
  std::vector<std::uint32_t> f;
  std::vector<std::uint32_t> g;
  unsigned level;
  unsigned mult;
  std::vector<std::uint32_t> a;  // a[1..] coefficients of phi

  std::vector<std::uint32_t> compose() const {
    std::vector<std::uint32_t> out(level + 1, 0), power(level + 1, 0), next(level + 1);
    power[0] = 1;
    for (unsigned e = 1; e <= level; ++e) {
      std::fill(next.begin(), next.end(), 0);
      for (unsigned i = 0; i <= level; ++i) {
        if (power[i] == 0) continue;
        for (unsigned j = 1; j < a.size() && i + j <= level; ++j) {
          next[i + j] = field.plus(next[i + j], field.times(power[i], a[j]));
        }
      }
      power.swap(next);
      if (f[e] == 0) continue;
      for (unsigned i = 0; i <= level; ++i) out[i] = field.plus(out[i], field.times(f[e], power[i]));
    }
    return out;
  }

  bool search(unsigned j) {
    const unsigned unknowns = level - mult + 1;
    for (std::uint32_t v = (j == 1 ? 1 : 0); v < field.q; ++v) {
      a[j] = v;
      const auto h = compose();
      // Coefficients up to degree j + mult - 1 are final once a_1..a_j are fixed.
      const unsigned from = j == 1 ? 0 : j + mult - 1;
      bool ok = true;
      for (unsigned i = from; i <= std::min(level, j + mult - 1) && ok; ++i) ok = h[i] == g[i];
      if (!ok) continue;
      if (j == unknowns || search(j + 1)) return true;
    }
    a[j] = 0;
    return false;
  }
};

}  // namespace

Polynomial JetSpace::jet(std::uint64_t index) const {
  const FieldSpec field = prime_field(p);
  const Digits d = decode(*this, index);
  std::vector<Term> terms;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] != 0) terms.push_back({monomials[j], Scalar::from_int(field, static_cast<long>(d[j]))});
  }
  return Polynomial::from_terms(field, nvars, std::move(terms));
}

std::uint64_t JetSpace::index_of(const Polynomial& f) const {
  const Polynomial j = f.jet(static_cast<int>(k));
  Digits d(monomials.size(), 0);
  for (const auto& t : j.terms()) {
    const auto it = std::find(monomials.begin(), monomials.end(), t.mono);
    if (it == monomials.end()) throw Error(ErrorCode::InvalidArgument, "jet has a term of degree < 2");
    d[static_cast<std::size_t>(it - monomials.begin())] = static_cast<std::uint32_t>(t.coeff.residue());
  }
  return encode(*this, d);
}

JetSpace enumerate_jets(std::uint64_t p, std::size_t nvars, unsigned k) {
  prime_field(p);
  if (nvars == 0 || k < 2) throw Error(ErrorCode::InvalidArgument, "need nvars >= 1 and k >= 2");
  JetSpace s;
  s.p = p;
  s.nvars = nvars;
  s.k = k;
  s.monomials = monomials_between(nvars, 2, k);
  s.size = checked_pow(p, s.monomials.size(), kMaxJetSpace);
  if (s.size > kMaxJetSpace) {
    throw Error(ErrorCode::TooLarge, "jet space exceeds " + std::to_string(kMaxJetSpace) + " jets");
  }
  return s;
}

std::uint64_t group_size(std::uint64_t p, std::size_t nvars, unsigned k, bool contact) {
  prime_field(p);
  return size_of(p, nvars, k, contact ? static_cast<int>(k) - 2 : -1);
}

std::vector<JetAutomorphism> enumerate_group(std::uint64_t p, std::size_t nvars, unsigned k, bool contact) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "need k >= 2");
  if (group_size(p, nvars, k, contact) > kMaxGroupSize) {
    throw Error(ErrorCode::TooLarge, "group exceeds " + std::to_string(kMaxGroupSize) + " elements");
  }
  std::vector<JetAutomorphism> out;
  for_each_element(p, nvars, k, contact ? static_cast<int>(k) - 2 : -1, k,
                   [&](const JetAutomorphism& g) { out.push_back(g); });
  return out;
}

JetAutomorphism canonical_group_element(const JetAutomorphism& g, unsigned k) {
  std::vector<Polynomial> images;
  for (const auto& img : g.images()) images.push_back(img.jet(static_cast<int>(k)));
  std::optional<Polynomial> unit;
  if (g.unit()) unit = g.unit()->jet(static_cast<int>(k) - 2);
  return JetAutomorphism(std::move(images), std::move(unit), JetBound(static_cast<int>(k)));
}

OrbitTable orbit_decomposition(const JetSpace& space, const std::vector<JetAutomorphism>& group, Action action) {
  if (space.size * group.size() > kActionBudget) throw Error(ErrorCode::TooLarge, "|J| * |G| exceeds the budget");
  return decompose(space, effective_matrices(space, group, action), action, group.size());
}

OrbitTable orbit_decomposition(const JetSpace& space, Action action) {
  const std::uint64_t g = group_size(space.p, space.nvars, space.k, action == Action::Contact);
  if (g > kActionBudget / space.size) throw Error(ErrorCode::TooLarge, "|J| * |G| exceeds the budget");
  return decompose(space, effective_matrices(space, action), action, g);
}

bool univariate_right_equivalent(const Polynomial& f, const Polynomial& g, unsigned jet_level, unsigned extension) {
  if (f.nvars() != 1 || g.nvars() != 1) throw Error(ErrorCode::NotUnivariate, "expected one variable");
  if (f.field() != g.field()) throw Error(ErrorCode::FieldMismatch, "f and g over different fields");
  const std::uint64_t p = f.field().characteristic();
  prime_field(p);
  const SmallField field = make_small_field(static_cast<std::uint32_t>(p), extension);
  EquivalenceSearch s{field, dense_coefficients(f, jet_level), dense_coefficients(g, jet_level), jet_level, 0, {}};
  if (s.f[0] != 0 || s.g[0] != 0) throw Error(ErrorCode::NotInMaximalIdeal, "f and g must lie in m");
  const auto ord = order_of(f.jet(static_cast<int>(jet_level)));
  if (!ord) return s.g == s.f;
  s.mult = *ord;
  s.a.assign(jet_level - s.mult + 2, 0);
  return s.search(1);
}

bool bruteforce_determinacy_check(const Polynomial& f, unsigned k, std::uint64_t p, std::size_t nvars,
                                  unsigned jet_level, unsigned extension) {
  if (jet_level <= k) throw Error(ErrorCode::InvalidArgument, "jet_level must exceed k");
  if (f.field() != prime_field(p) || f.nvars() != nvars) {
    throw Error(ErrorCode::FieldMismatch, "f does not live in F_" + std::to_string(p) + "[x_1..x_n]");
  }
  if (extension > 1 && nvars > 1) throw Error(ErrorCode::InvalidArgument, "extension fields need nvars = 1");
  const auto ord = order_of(f);
  if (ord && *ord < 2) throw Error(ErrorCode::InvalidArgument, "f must lie in m^2");
  const JetSpace space = enumerate_jets(p, nvars, jet_level);
  std::size_t low = 0;  // monomials of degree <= k form a prefix
  while (low < space.monomials.size() && space.monomials[low].degree() <= k) ++low;
  const Digits f_digits = decode(space, space.index_of(f));
  auto same_low = [&](const Digits& g) {
    return std::equal(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(low), f_digits.begin());
  };

  if (extension > 1) {
    for (std::uint64_t idx = 0; idx < space.size; ++idx) {
      if (same_low(decode(space, idx)) && !univariate_right_equivalent(f, space.jet(idx), jet_level, extension)) {
        return false;
      }
    }
    return true;
  }

  const std::vector<JetMatrix> mats = effective_matrices(space, Action::Right);
  std::vector<bool> in_orbit(space.size, false);
  for (const auto& a : mats) in_orbit[encode(space, apply(space, a, f_digits))] = true;
  for (std::uint64_t idx = 0; idx < space.size; ++idx) {
    if (!in_orbit[idx] && same_low(decode(space, idx))) return false;
  }
  return true;
}

std::string orbit_table_json(const OrbitTable& table) {
  using nlohmann::ordered_json;
  ordered_json out;
  out["p"] = table.space.p;
  out["n"] = table.space.nvars;
  out["k"] = table.space.k;
  out["action"] = table.action == Action::Right ? "right" : "contact";
  out["jets"] = table.space.size;
  out["group"] = table.group_size;
  ordered_json orbits = ordered_json::array();
  for (const auto& o : table.orbits) {
    ordered_json j;
    j["rep"] = table.space.jet(o.rep).to_string(default_var_names(table.space.nvars));
    j["size"] = o.size;
    j["tau"] = o.tau ? ordered_json(*o.tau) : ordered_json(nullptr);
    j["mu"] = o.mu ? ordered_json(*o.mu) : ordered_json(nullptr);
    j["tau_k"] = o.tau_k;
    j["mu_k"] = o.mu_k;
    orbits.push_back(j);
  }
  out["orbits"] = orbits;
  return out.dump(2);
}

}  // namespace singclass
