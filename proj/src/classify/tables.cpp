#include <map>
#include <mutex>
#include <tuple>

#include "internal.hpp"
#include "singclass/errors.hpp"
#include "singclass/parse.hpp"

namespace singclass {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::AInf: return "A_inf";
    case Family::DInf: return "D_inf";
    case Family::Smooth: return "Smooth";
    case Family::NotSimple: return "NotSimple";
    case Family::Unclassified: return "Unclassified";
  }
  return "?";
}

std::string ClassLabel::name() const {
  switch (family) {
    case Family::A:
    case Family::D:
    case Family::E: return std::string(family_name(family)) + "_" + std::to_string(index);
    default: return std::string(family_name(family));
  }
}

std::string ClassLabel::display() const {
  std::string out = name();
  if (variant) out += "^" + std::to_string(*variant);
  return out;
}

namespace detail {

namespace {

struct RowSpec {
  std::optional<unsigned> variant;
  std::string text;
};

std::string pw(const char* var, unsigned e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

std::vector<RowSpec> odd_char_rows(std::uint64_t p, Family family, unsigned index) {
  const std::optional<unsigned> v0 = p == 0 ? std::nullopt : std::optional<unsigned>(0);
  switch (family) {
    case Family::A: return {{std::nullopt, "x^2+" + pw("y", index + 1)}};
    case Family::D: return {{std::nullopt, "x^2*y+" + pw("y", index - 1)}};
    case Family::E:
      if (index == 6) {
        if (p == 3) return {{0, "x^3+y^4"}, {1, "x^3+y^4+x^2*y^2"}};
        return {{v0, "x^3+y^4"}};
      }
      if (index == 7) {
        if (p == 3) return {{0, "x^3+x*y^3"}, {1, "x^3+x*y^3+x^2*y^2"}};
        return {{v0, "x^3+x*y^3"}};
      }
      if (p == 3) return {{0, "x^3+y^5"}, {1, "x^3+y^5+x^2*y^3"}, {2, "x^3+y^5+x^2*y^2"}};
      if (p == 5) return {{0, "x^3+y^5"}, {1, "x^3+y^5+x^2*y^2"}};
      return {{v0, "x^3+y^5"}};
    default: return {};
  }
}

std::vector<RowSpec> curve_rows_char2(Family family, unsigned index) {
  std::vector<RowSpec> out;
  switch (family) {
    case Family::A:
      if (index % 2 == 1) return {{std::nullopt, "x^2+x*" + pw("y", (index + 1) / 2)}};
      for (unsigned m = index / 2, r = 0; r < m; ++r) {
        std::string t = "x^2+" + pw("y", 2 * m + 1);
        if (r > 0) t += "+x*" + pw("y", 2 * m - r);
        out.push_back({r, t});
      }
      return out;
    case Family::D:
      if (index % 2 == 0) return {{std::nullopt, "x^2*y+x*" + pw("y", index / 2)}};
      for (unsigned m = (index - 1) / 2, r = 0; r < m; ++r) {
        std::string t = "x^2*y+" + pw("y", 2 * m);
        if (r > 0) t += "+x*" + pw("y", 2 * m - r);
        out.push_back({r, t});
      }
      return out;
    case Family::E:
      if (index == 6) return {{0, "x^3+y^4"}, {1, "x^3+y^4+x*y^3"}};
      if (index == 7) return {{std::nullopt, "x^3+x*y^3"}};
      return {{std::nullopt, "x^3+y^5"}};
    default: return {};
  }
}

std::vector<RowSpec> surface_rows_char2(Family family, unsigned index) {
  std::vector<RowSpec> out;
  switch (family) {
    case Family::A: return {{std::nullopt, pw("z", index + 1) + "+x*y"}};
    case Family::D: {
      const unsigned m = index / 2;
      const std::string base =
          index % 2 == 0 ? "z^2+x^2*y+x*" + pw("y", m) : "z^2+x^2*y+" + pw("y", m) + "*z";
      for (unsigned r = 0; r < m; ++r) {
        std::string t = base;
        if (r > 0) t += "+x*" + pw("y", m - r) + "*z";
        out.push_back({r, t});
      }
      return out;
    }
    case Family::E:
      if (index == 6) return {{0, "z^2+x^3+y^2*z"}, {1, "z^2+x^3+y^2*z+x*y*z"}};
      if (index == 7) {
        return {{0, "z^2+x^3+x*y^3"},
                {1, "z^2+x^3+x*y^3+x^2*y*z"},
                {2, "z^2+x^3+x*y^3+y^3*z"},
                {3, "z^2+x^3+x*y^3+x*y*z"}};
      }
      return {{0, "z^2+x^3+y^5"},
              {1, "z^2+x^3+y^5+x*y^3*z"},
              {2, "z^2+x^3+y^5+x*y^2*z"},
              {3, "z^2+x^3+y^5+y^3*z"},
              {4, "z^2+x^3+y^5+x*y*z"}};
    default: return {};
  }
}

using CacheKey = std::tuple<std::uint64_t, std::size_t, int, unsigned>;

std::mutex cache_mutex;
std::map<CacheKey, std::vector<NormalFormRow>> cache;

bool valid_index(Family family, unsigned index) {
  switch (family) {
    case Family::A: return index >= 1;
    case Family::D: return index >= 4;
    case Family::E: return index >= 6 && index <= 8;
    default: return false;
  }
}

}  // namespace

std::vector<NormalFormRow> family_rows(FieldSpec field, std::size_t nres, Family family, unsigned index) {
  if (!valid_index(family, index)) return {};
  const std::uint64_t p = field.characteristic();
  const CacheKey key{p, nres, static_cast<int>(family), index};
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<RowSpec> specs;
  if (p != 2) {
    if (nres == 2) specs = odd_char_rows(p, family, index);
  } else if (nres == 2) {
    specs = curve_rows_char2(family, index);
  } else if (nres == 3) {
    specs = surface_rows_char2(family, index);
  }
  const std::vector<std::string> names = default_var_names(nres);
  std::vector<NormalFormRow> rows;
  for (const auto& spec : specs) {
    NormalFormRow row{ClassLabel::simple(family, index, spec.variant), parse_poly(spec.text, field, names), 0};
    const InvariantValue tau = tjurina_number(row.form, default_cap());
    check_internal(tau.value.finite, "table row has finite Tjurina number");
    row.tau = tau.value.value;
    rows.push_back(std::move(row));
  }
  std::lock_guard lock(cache_mutex);
  cache.emplace(key, rows);
  return rows;
}

namespace {

// Squares (char != 2) or hyperbolic pairs (char 2) on variables from..n-1.
Polynomial padding(FieldSpec field, std::size_t nvars, std::size_t from) {
  Polynomial out(field, nvars);
  if (field.characteristic() == 2) {
    for (std::size_t i = from; i + 1 < nvars; i += 2) {
      out = out + Polynomial::variable(field, nvars, i) * Polynomial::variable(field, nvars, i + 1);
    }
  } else {
    for (std::size_t i = from; i < nvars; ++i) {
      out = out + Polynomial::monomial(field, Monomial::variable(nvars, i, 2), Scalar::from_int(field, 1));
    }
  }
  return out;
}

NormalFormRow univariate_row(FieldSpec field, unsigned k) {
  NormalFormRow row{ClassLabel::simple(Family::A, k),
                    Polynomial::monomial(field, Monomial::variable(1, 0, k + 1), Scalar::from_int(field, 1)), 0};
  const InvariantValue tau = tjurina_number(row.form, default_cap());
  check_internal(tau.value.finite, "univariate row has finite Tjurina number");
  row.tau = tau.value.value;
  return row;
}

}  // namespace

}  // namespace detail

std::vector<NormalFormRow> contact_normal_forms(FieldSpec field, std::size_t nvars, unsigned max_index) {
  if (nvars == 0 || nvars > kMaxVars) throw Error(ErrorCode::InvalidArgument, "unsupported number of variables");
  std::vector<NormalFormRow> out;
  if (nvars == 1) {
    for (unsigned k = 1; k <= max_index; ++k) out.push_back(detail::univariate_row(field, k));
    return out;
  }
  const bool char2 = field.characteristic() == 2;
  const std::size_t nres = char2 && nvars % 2 == 1 ? 3 : 2;
  const Polynomial pad = detail::padding(field, nvars, nres);
  auto add = [&](Family family, unsigned index) {
    for (auto row : detail::family_rows(field, nres, family, index)) {
      row.form = detail::embed(row.form, nvars) + pad;
      out.push_back(std::move(row));
    }
  };
  for (unsigned k = 1; k <= max_index; ++k) add(Family::A, k);
  for (unsigned k = 4; k <= max_index; ++k) add(Family::D, k);
  for (unsigned k = 6; k <= std::min(max_index, 8u); ++k) add(Family::E, k);
  return out;
}

std::vector<NormalFormRow> right_simple_normal_forms(FieldSpec field, std::size_t nvars) {
  if (nvars == 0 || nvars > kMaxVars) throw Error(ErrorCode::InvalidArgument, "unsupported number of variables");
  const std::uint64_t p = field.characteristic();
  std::vector<NormalFormRow> out;
  if (p == 0) return out;
  if (p == 2) {
    if (nvars % 2 == 1) return out;
    NormalFormRow row{ClassLabel::simple(Family::A, 1), detail::padding(field, nvars, 0), 0};
    row.tau = tjurina_number(row.form, default_cap()).value.value;
    out.push_back(std::move(row));
    return out;
  }
  if (nvars == 1) {
    for (unsigned k = 1; k + 2 <= p; ++k) out.push_back(detail::univariate_row(field, k));
    return out;
  }
  for (auto& row : contact_normal_forms(field, nvars, static_cast<unsigned>(std::max<std::uint64_t>(p, 8)))) {
    if (right_simple_bounds(row.label, p, nullptr)) out.push_back(std::move(row));
  }
  return out;
}

bool right_simple_bounds(const ClassLabel& contact, std::uint64_t p, std::string* reason) {
  auto fail = [&](std::string why) {
    if (reason != nullptr) *reason = std::move(why);
    return false;
  };
  const std::string ps = std::to_string(p);
  if (contact.variant && *contact.variant != 0) return fail(contact.display() + " has variant != 0");
  switch (contact.family) {
    case Family::Smooth: return true;
    case Family::A:
      if (contact.index + 2 > p) return fail("A_k needs k <= p-2 = " + std::to_string(p - 2));
      return true;
    case Family::D:
      if (contact.index >= p) return fail("D_k needs k < p = " + ps);
      return true;
    case Family::E:
      if (contact.index <= 7 && p <= 3) return fail(contact.name() + " needs p > 3");
      if (contact.index == 8 && p <= 5) return fail("E_8 needs p > 5");
      return true;
    default: return fail(contact.reason.empty() ? contact.name() + " is not contact simple" : contact.reason);
  }
}

}  // namespace singclass
