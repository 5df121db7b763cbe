#include "singclass/report.hpp"

#include <sstream>

#include "cli/json_io.hpp"
#include "singclass/errors.hpp"

namespace singclass {

namespace detail {

using nlohmann::ordered_json;

std::string field_name(std::uint64_t p) { return p == 0 ? "Q" : "F_" + std::to_string(p); }

ordered_json invariant_json(const InvariantValue& v) {
  ordered_json j;
  j["finite"] = v.value.finite;
  if (v.value.finite) {
    j["value"] = v.value.value;
    j["bound"] = v.value.bound;
  } else {
    j["bound"] = v.value.bound;
    j["lower_bound"] = v.value.value;
  }
  return j;
}

InvariantValue invariant_from(const ordered_json& j, InvariantKind kind) {
  InvariantValue v;
  v.kind = kind;
  v.value.finite = j.at("finite").get<bool>();
  v.value.bound = j.at("bound").get<int>();
  v.value.value = j.at(v.value.finite ? "value" : "lower_bound").get<std::uint64_t>();
  return v;
}

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
  const FieldSpec q = FieldSpec::rationals();
  return Polynomial::monomial(q, m, Scalar::from_int(q, 1)).to_string(names);
}

const char* invariant_key(Equivalence e) { return e == Equivalence::Right ? "mu" : "tau"; }

ordered_json determinacy_json(const DeterminacyBound& b, const std::vector<std::string>& names) {
  ordered_json j;
  j["order"] = b.order;
  j["highcorner"] = monomial_text(b.highcorner, names);
  std::vector<unsigned> exps;
  for (std::size_t i = 0; i < names.size(); ++i) exps.push_back(b.highcorner[i]);
  j["highcorner_exponents"] = exps;
  j["k_star"] = b.k_star;
  j["general"] = b.bound_general;
  j["example_reading"] = b.example_reading;
  j["char0"] = b.bound_char0 ? ordered_json(*b.bound_char0) : ordered_json(nullptr);
  j[std::string(invariant_key(b.equivalence)) + "_based"] = b.bound_mu_tau;
  j[invariant_key(b.equivalence)] = invariant_json(b.invariant);
  return j;
}

DeterminacyBound determinacy_from(const ordered_json& j, Equivalence e, std::size_t nvars) {
  DeterminacyBound b;
  b.equivalence = e;
  b.order = j.at("order").get<unsigned>();
  const auto exps = j.at("highcorner_exponents").get<std::vector<unsigned>>();
  if (exps.size() != nvars) throw Error(ErrorCode::InvalidArgument, "highcorner arity mismatch");
  b.highcorner = Monomial(nvars, std::span<const unsigned>(exps));
  b.k_star = j.at("k_star").get<unsigned>();
  b.bound_general = j.at("general").get<unsigned>();
  b.example_reading = j.at("example_reading").get<unsigned>();
  if (!j.at("char0").is_null()) b.bound_char0 = j.at("char0").get<unsigned>();
  b.bound_mu_tau = j.at(std::string(invariant_key(e)) + "_based").get<unsigned>();
  b.invariant = invariant_from(j.at(invariant_key(e)),
                               e == Equivalence::Right ? InvariantKind::Milnor : InvariantKind::Tjurina);
  return b;
}

ordered_json label_json(const ClassLabel& l, bool simple_contact, bool simple_right) {
  ordered_json j;
  j["label"] = l.name();
  j["variant"] = l.variant ? ordered_json(*l.variant) : ordered_json(nullptr);
  j["index"] = l.index;
  j["simple_contact"] = simple_contact;
  j["simple_right"] = simple_right;
  j["reason"] = l.reason.empty() ? ordered_json(nullptr) : ordered_json(l.reason);
  return j;
}

ClassLabel label_from(const ordered_json& j) {
  std::optional<unsigned> variant;
  if (!j.at("variant").is_null()) variant = j.at("variant").get<unsigned>();
  std::string reason = j.at("reason").is_null() ? "" : j.at("reason").get<std::string>();
  ClassLabel l = label_from_name(j.at("label").get<std::string>(), variant, std::move(reason));
  if (l.index != j.at("index").get<unsigned>()) throw Error(ErrorCode::InvalidArgument, "label index mismatch");
  return l;
}

ordered_json split_json(const SplitSummary& s, const std::vector<std::string>& names) {
  ordered_json j;
  j["rank"] = s.rank;
  j["corank"] = s.corank;
  j["bound"] = s.bound;
  ordered_json pairs = ordered_json::array();
  for (const auto& p : s.pairs) pairs.push_back(ordered_json::array({p.i, p.j, p.a_i, p.a_j}));
  j["pairs"] = pairs;
  ordered_json diagonal = ordered_json::array();
  for (const auto& d : s.diagonal) diagonal.push_back(ordered_json::array({d.i, d.a}));
  j["diagonal"] = diagonal;
  ordered_json squares = ordered_json::array();
  for (const auto& d : s.squares) squares.push_back(ordered_json::array({d.i, d.a}));
  j["squares"] = squares;
  j["quad_form"] = s.quad_form;
  j["residual"] = s.residual;
  ordered_json transform = ordered_json::object();
  for (std::size_t i = 0; i < s.transform.size(); ++i) transform[names[i]] = s.transform[i];
  j["transform"] = transform;
  return j;
}

SplitSummary split_from(const ordered_json& j, const std::vector<std::string>& names) {
  SplitSummary s;
  s.rank = j.at("rank").get<std::size_t>();
  s.corank = j.at("corank").get<std::size_t>();
  s.bound = j.at("bound").get<int>();
  for (const auto& p : j.at("pairs")) {
    s.pairs.push_back({p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>(), p.at(2).get<std::string>(),
                       p.at(3).get<std::string>()});
  }
  for (const auto& d : j.at("diagonal")) s.diagonal.push_back({d.at(0).get<std::size_t>(), d.at(1).get<std::string>()});
  for (const auto& d : j.at("squares")) s.squares.push_back({d.at(0).get<std::size_t>(), d.at(1).get<std::string>()});
  s.quad_form = j.at("quad_form").get<std::string>();
  s.residual = j.at("residual").get<std::string>();
  for (const auto& n : names) s.transform.push_back(j.at("transform").at(n).get<std::string>());
  return s;
}

ordered_json univariate_json(const UnivariateSummary& u) {
  ordered_json j;
  j["mult"] = u.mult;
  j["e"] = u.e;
  j["q"] = u.q;
  j["k"] = u.k;
  j["determinacy"] = u.determinacy;
  j["mu"] = invariant_json(u.mu);
  j["modality"] = u.modality;
  j["simple"] = u.simple;
  j["normal_form_hint"] = u.normal_form_hint ? ordered_json(*u.normal_form_hint) : ordered_json(nullptr);
  return j;
}

UnivariateSummary univariate_from(const ordered_json& j) {
  UnivariateSummary u;
  u.mult = j.at("mult").get<unsigned>();
  u.e = j.at("e").get<unsigned>();
  u.q = j.at("q").get<unsigned>();
  u.k = j.at("k").get<unsigned>();
  u.determinacy = j.at("determinacy").get<std::uint64_t>();
  u.mu = invariant_from(j.at("mu"), InvariantKind::Milnor);
  u.modality = j.at("modality").get<std::uint64_t>();
  u.simple = j.at("simple").get<bool>();
  if (!j.at("normal_form_hint").is_null()) u.normal_form_hint = j.at("normal_form_hint").get<std::string>();
  return u;
}

}  // namespace detail

namespace {

using nlohmann::ordered_json;
using namespace detail;

template <class F>
void record(std::string& error, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Internal) throw;
    error = e.what();
  }
}

// {"error": msg} when the analysis failed, the value when present, null otherwise.
template <class T, class F>
ordered_json optional_block(const std::optional<T>& value, const std::string& error, F&& to_json) {
  if (value) return to_json(*value);
  if (!error.empty()) return ordered_json{{"error", error}};
  return nullptr;
}

template <class T, class F>
void read_block(const ordered_json& j, std::optional<T>& value, std::string& error, F&& from_json) {
  if (j.is_null()) return;
  if (j.is_object() && j.contains("error")) {
    error = j.at("error").get<std::string>();
    return;
  }
  value = from_json(j);
}

std::string invariant_text(const InvariantValue& v) {
  if (v.value.finite) return std::to_string(v.value.value);
  return "not finite up to " + std::to_string(v.value.bound) + " (>= " + std::to_string(v.value.value) + ")";
}

}  // namespace

SplitSummary summarize_split(const SplitResult& split, const std::vector<std::string>& names) {
  SplitSummary s;
  s.rank = split.quad_rank;
  s.corank = split.corank();
  s.bound = split.bound.value();
  for (const auto& p : split.quadratic.pairs) s.pairs.push_back({p.i, p.j, p.a_i.to_string(), p.a_j.to_string()});
  for (const auto& d : split.quadratic.diagonal) s.diagonal.push_back({d.i, d.a.to_string()});
  for (const auto& d : split.quadratic.squares) s.squares.push_back({d.i, d.a.to_string()});
  s.quad_form = split.quad_form.to_string(names);
  s.residual = split.residual.to_string(names);
  for (const auto& img : split.transform.images()) s.transform.push_back(img.to_string(names));
  return s;
}

UnivariateSummary summarize_univariate(const UnivariateReport& r, const std::vector<std::string>& names) {
  UnivariateSummary u{r.mult, r.e, r.q, r.k, r.determinacy, r.mu, r.modality, r.simple, std::nullopt};
  if (r.normal_form_hint) u.normal_form_hint = r.normal_form_hint->to_string(names);
  return u;
}

SingularityReport build_report(const Polynomial& f, const std::vector<std::string>& names, JetBound cap) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "the zero polynomial has no invariants");
  require_in_maximal_ideal(f);
  SingularityReport r;
  r.polynomial = f.to_string(names);
  r.characteristic = f.field().characteristic();
  r.variables = names;
  r.cap = cap.value();
  r.order = order_of(f);

  record(r.invariants_error, [&] {
    r.mu = milnor_number(f, cap);
    r.tau = tjurina_number(f, cap);
  });
  if (*r.order >= 2) {
    const HessianRank h = hessian_rank_corank(f);
    r.rank = h.rank;
    r.corank = h.corank;
  } else {
    r.rank = f.nvars();
    r.corank = 0;
  }

  record(r.right_determinacy_error, [&] { r.right_determinacy = right_determinacy_bound(f, cap); });
  record(r.contact_determinacy_error, [&] { r.contact_determinacy = contact_determinacy_bound(f, cap); });

  record(r.split_error, [&] {
    int level = cap.value();
    if (r.contact_determinacy) {
      level = std::min(cap.value(), std::max(static_cast<int>(r.contact_determinacy->bound_general), 3));
    } else {
      r.warnings.push_back("jet-level split only");
    }
    r.split = summarize_split(split(f, JetBound(level)), names);
  });

  r.contact_label = classify_contact(f, cap);
  r.right_label = classify_right(f, cap);
  for (const ClassLabel* l : {&r.contact_label, &r.right_label}) {
    if (l->family == Family::Unclassified && l->reason.find("tied candidates") != std::string::npos) {
      r.warnings.push_back("derived-table tie");
    }
  }

  if (f.nvars() == 1 && r.characteristic > 0) {
    record(r.univariate_error, [&] { r.univariate = summarize_univariate(classify_univariate(f, cap), names); });
  }
  return r;
}

ClassLabel label_from_name(std::string_view name, std::optional<unsigned> variant, std::string reason) {
  for (const Family fam : {Family::AInf, Family::DInf, Family::Smooth, Family::NotSimple, Family::Unclassified}) {
    if (name == family_name(fam)) return ClassLabel{fam, 0, variant, std::move(reason)};
  }
  if (name.size() >= 3 && name[1] == '_') {
    const std::string_view head = name.substr(0, 1);
    for (const Family fam : {Family::A, Family::D, Family::E}) {
      if (head != family_name(fam)) continue;
      unsigned index = 0;
      for (char c : name.substr(2)) {
        if (c < '0' || c > '9') throw Error(ErrorCode::InvalidArgument, "bad label " + std::string(name));
        index = index * 10 + static_cast<unsigned>(c - '0');
      }
      return ClassLabel{fam, index, variant, std::move(reason)};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown label " + std::string(name));
}

std::string report_to_json(const SingularityReport& r, int indent) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["input"] = {{"polynomial", r.polynomial},
                {"field", field_name(r.characteristic)},
                {"characteristic", r.characteristic},
                {"variables", r.variables},
                {"cap", r.cap}};
  j["order"] = r.order ? ordered_json(*r.order) : ordered_json(nullptr);
  j["mu"] = r.mu ? invariant_json(*r.mu) : ordered_json(nullptr);
  j["tau"] = r.tau ? invariant_json(*r.tau) : ordered_json(nullptr);
  j["invariants_error"] = r.invariants_error.empty() ? ordered_json(nullptr) : ordered_json(r.invariants_error);
  j["rank"] = r.rank ? ordered_json(*r.rank) : ordered_json(nullptr);
  j["corank"] = r.corank ? ordered_json(*r.corank) : ordered_json(nullptr);
  auto det = [&](const DeterminacyBound& b) { return determinacy_json(b, r.variables); };
  j["determinacy"] = {{"right", optional_block(r.right_determinacy, r.right_determinacy_error, det)},
                      {"contact", optional_block(r.contact_determinacy, r.contact_determinacy_error, det)}};
  j["split"] = optional_block(r.split, r.split_error, [&](const SplitSummary& s) { return split_json(s, r.variables); });
  const bool sc = r.contact_label.is_simple();
  const bool sr = r.right_label.is_simple();
  j["contact"] = label_json(r.contact_label, sc, sr);
  j["right"] = label_json(r.right_label, sc, sr);
  j["univariate"] = optional_block(r.univariate, r.univariate_error, univariate_json);
  j["warnings"] = r.warnings;
  return j.dump(indent);
}

SingularityReport report_from_json(std::string_view text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    if (j.at("schema").get<std::string>() != kReportSchema) {
      throw Error(ErrorCode::InvalidArgument, "unsupported schema " + j.at("schema").get<std::string>());
    }
    SingularityReport r;
    const auto& in = j.at("input");
    r.polynomial = in.at("polynomial").get<std::string>();
    r.characteristic = in.at("characteristic").get<std::uint64_t>();
    r.variables = in.at("variables").get<std::vector<std::string>>();
    r.cap = in.at("cap").get<int>();
    if (!j.at("order").is_null()) r.order = j.at("order").get<unsigned>();
    if (!j.at("mu").is_null()) r.mu = invariant_from(j.at("mu"), InvariantKind::Milnor);
    if (!j.at("tau").is_null()) r.tau = invariant_from(j.at("tau"), InvariantKind::Tjurina);
    if (!j.at("invariants_error").is_null()) r.invariants_error = j.at("invariants_error").get<std::string>();
    if (!j.at("rank").is_null()) r.rank = j.at("rank").get<std::size_t>();
    if (!j.at("corank").is_null()) r.corank = j.at("corank").get<std::size_t>();
    const std::size_t n = r.variables.size();
    read_block(j.at("determinacy").at("right"), r.right_determinacy, r.right_determinacy_error,
               [&](const ordered_json& b) { return determinacy_from(b, Equivalence::Right, n); });
    read_block(j.at("determinacy").at("contact"), r.contact_determinacy, r.contact_determinacy_error,
               [&](const ordered_json& b) { return determinacy_from(b, Equivalence::Contact, n); });
    read_block(j.at("split"), r.split, r.split_error,
               [&](const ordered_json& s) { return split_from(s, r.variables); });
    r.contact_label = label_from(j.at("contact"));
    r.right_label = label_from(j.at("right"));
    read_block(j.at("univariate"), r.univariate, r.univariate_error, univariate_from);
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed report: ") + e.what());
  }
}

std::string report_to_text(const SingularityReport& r) {
  std::ostringstream out;
  out << "polynomial: " << r.polynomial << "\n";
  out << "field: " << field_name(r.characteristic) << "\n";
  out << "order: " << (r.order ? std::to_string(*r.order) : "inf") << "\n";
  if (r.mu) out << "mu: " << invariant_text(*r.mu) << "\n";
  if (r.tau) out << "tau: " << invariant_text(*r.tau) << "\n";
  if (!r.invariants_error.empty()) out << "invariants: " << r.invariants_error << "\n";
  if (r.rank) out << "rank: " << *r.rank << "  corank: " << *r.corank << "\n";
  auto det = [&](const char* name, const std::optional<DeterminacyBound>& b, const std::string& error) {
    out << name << " determinacy: ";
    if (!b) {
      out << error << "\n";
      return;
    }
    out << "highcorner " << monomial_text(b->highcorner, r.variables) << ", k* " << b->k_star << ", general "
        << b->bound_general << ", example reading " << b->example_reading << ", char0 "
        << (b->bound_char0 ? std::to_string(*b->bound_char0) : "-") << ", " << invariant_key(b->equivalence)
        << "-based " << b->bound_mu_tau << "\n";
  };
  det("right", r.right_determinacy, r.right_determinacy_error);
  det("contact", r.contact_determinacy, r.contact_determinacy_error);
  if (r.split) {
    out << "split: rank " << r.split->rank << ", quadratic part " << r.split->quad_form << ", residual "
        << r.split->residual << "\n";
  } else {
    out << "split: " << r.split_error << "\n";
  }
  auto label = [&](const char* name, const ClassLabel& l) {
    out << name << " label: " << l.display();
    if (!l.reason.empty()) out << " (" << l.reason << ")";
    out << "\n";
  };
  label("contact", r.contact_label);
  label("right", r.right_label);
  if (r.univariate) {
    const auto& u = *r.univariate;
    out << "univariate: mult " << u.mult << ", e " << u.e << ", q " << u.q << ", k " << u.k << ", determinacy "
        << u.determinacy << ", modality " << u.modality << (u.simple ? ", simple" : ", not simple") << "\n";
  } else if (!r.univariate_error.empty()) {
    out << "univariate: " << r.univariate_error << "\n";
  }
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string scan_report_json(const ScanReport& scan, const std::vector<ClassLabel>& labels, int indent) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["samples"] = scan.samples;
  j["tau_base"] = scan.tau_base;
  j["mu_base"] = scan.mu_base ? ordered_json(*scan.mu_base) : ordered_json(nullptr);
  j["max_tau_observed"] = scan.max_tau_observed;
  j["max_mu_observed"] = scan.max_mu_observed ? ordered_json(*scan.max_mu_observed) : ordered_json(nullptr);
  j["violations"] = scan.violations;
  ordered_json observed = ordered_json::array();
  for (const auto& l : labels) observed.push_back(l.display());
  j["labels_observed"] = observed;
  return j.dump(indent);
}

}  // namespace singclass
