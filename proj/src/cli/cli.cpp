#include "singclass/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/json_io.hpp"
#include "singclass/errors.hpp"
#include "singclass/oracle.hpp"
#include "singclass/parse.hpp"

namespace singclass {

namespace {

using nlohmann::ordered_json;
using namespace detail;

struct Options {
  std::uint64_t characteristic = 0;
  std::string vars = "x,y";
  int truncate = 0;  // 0: default cap
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  bool json = false;
  std::string file;
  std::string poly;
  unsigned k = 3;
  std::string action = "right";
};

struct Context {
  FieldSpec field;
  std::vector<std::string> names;
  JetBound cap;
  const Options& opt;
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Internal: return kExitInternal;
    case ErrorCode::NotIsolated:
    case ErrorCode::BoundTooSmall:
    case ErrorCode::QNotFound: return kExitNotFinite;
    default: return kExitInputError;
  }
}

ordered_json input_json(const Context& c, const std::string& poly) {
  return {{"polynomial", poly},
          {"field", field_name(c.field.characteristic())},
          {"characteristic", c.field.characteristic()},
          {"variables", c.names},
          {"cap", c.cap.value()}};
}

ordered_json envelope(const Context& c, const std::string& poly) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["input"] = input_json(c, poly);
  return j;
}

std::string invariant_text(const InvariantValue& v) {
  if (v.value.finite) return std::to_string(v.value.value);
  return "not finite up to " + std::to_string(v.value.bound);
}

// One analysis of one polynomial: writes JSON into `j` (already holding the
// envelope) and text into `text`; returns the exit code.
using Handler = std::function<int(const Context&, const Polynomial&, ordered_json& j, std::ostream& text)>;

int do_invariants(const Context& c, const Polynomial& f, ordered_json& j, std::ostream& text) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "the zero polynomial has no invariants");
  require_in_maximal_ideal(f);
  const auto ord = order_of(f);
  const InvariantValue mu = milnor_number(f, c.cap);
  const InvariantValue tau = tjurina_number(f, c.cap);
  j["order"] = *ord;
  j["mu"] = invariant_json(mu);
  j["tau"] = invariant_json(tau);
  text << "order: " << *ord << "\nmu: " << invariant_text(mu) << "\ntau: " << invariant_text(tau) << "\n";
  if (*ord >= 2) {
    const HessianRank h = hessian_rank_corank(f);
    j["rank"] = h.rank;
    j["corank"] = h.corank;
    text << "rank: " << h.rank << "  corank: " << h.corank << "\n";
  }
  return kExitOk;
}

int do_determinacy(const Context& c, const Polynomial& f, ordered_json& j, std::ostream& text) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "the zero polynomial is not finitely determined");
  int worst = kExitOk;
  int available = 0;
  ordered_json det;
  for (const Equivalence e : {Equivalence::Right, Equivalence::Contact}) {
    const std::string name(equivalence_name(e));
    try {
      const DeterminacyBound b =
          e == Equivalence::Right ? right_determinacy_bound(f, c.cap) : contact_determinacy_bound(f, c.cap);
      det[name] = determinacy_json(b, c.names);
      ++available;
      text << name << ": highcorner " << monomial_text(b.highcorner, c.names) << ", k* " << b.k_star
           << ", general " << b.bound_general << ", example reading " << b.example_reading << ", char0 "
           << (b.bound_char0 ? std::to_string(*b.bound_char0) : "-") << ", " << invariant_key(e) << "-based "
           << b.bound_mu_tau << "\n";
    } catch (const Error& err) {
      if (err.code() == ErrorCode::Internal) throw;
      det[name] = {{"error", err.what()}};
      text << name << ": " << err.what() << "\n";
      worst = std::max(worst, exit_code(err.code()));
    }
  }
  j["determinacy"] = det;
  return available > 0 ? kExitOk : worst;
}

int do_split(const Context& c, const Polynomial& f, ordered_json& j, std::ostream& text) {
  int level = c.cap.value();
  if (c.opt.truncate == 0) {
    try {
      level = std::min(level, std::max(static_cast<int>(contact_determinacy_bound(f, c.cap).bound_general), 3));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Internal) throw;
      j["warnings"] = {"jet-level split only"};
      text << "warning: jet-level split only\n";
    }
  }
  const SplitSummary s = summarize_split(split(f, JetBound(level)), c.names);
  j["split"] = split_json(s, c.names);
  text << "rank: " << s.rank << "  corank: " << s.corank << "  (jet level " << s.bound << ")\n";
  text << "quadratic part: " << s.quad_form << "\nresidual: " << s.residual << "\n";
  for (std::size_t i = 0; i < s.transform.size(); ++i) text << c.names[i] << " -> " << s.transform[i] << "\n";
  return kExitOk;
}

int do_classify(const Context& c, const Polynomial& f, ordered_json& j, std::ostream& text) {
  const SingularityReport r = build_report(f, c.names, c.cap);
  j = ordered_json::parse(report_to_json(r));
  text << report_to_text(r);
  return kExitOk;
}

int do_univariate(const Context& c, const Polynomial& f, ordered_json& j, std::ostream& text) {
  const UnivariateSummary u = summarize_univariate(classify_univariate(f, c.cap), c.names);
  j["univariate"] = univariate_json(u);
  text << "mult: " << u.mult << "\ne: " << u.e << "\nq: " << u.q << "\nk: " << u.k << "\ndeterminacy: "
       << u.determinacy << "\nmu: " << invariant_text(u.mu) << "\nmodality: " << u.modality
       << "\nsimple: " << (u.simple ? "yes" : "no") << "\n";
  if (u.normal_form_hint) text << "normal form: " << *u.normal_form_hint << "\n";
  return kExitOk;
}

int do_deform_scan(const Context& c, const Polynomial& f, ordered_json& j, std::ostream& text) {
  const Unfolding u = tjurina_basis_unfolding(f, c.cap);
  const ScanReport scan = semicontinuity_scan(u, c.opt.samples, c.opt.seed, c.cap);
  const std::vector<ClassLabel> labels = adjacency_scan(u, c.opt.samples, c.opt.seed, c.cap);
  const ordered_json s = ordered_json::parse(scan_report_json(scan, labels));
  ordered_json basis = ordered_json::array();
  for (const auto& g : u.basis) basis.push_back(g.to_string(c.names));
  j["basis"] = basis;
  for (const auto& [key, value] : s.items()) {
    if (key != "schema") j[key] = value;
  }
  text << "basis:";
  for (const auto& g : u.basis) text << " " << g.to_string(c.names);
  text << "\nsamples: " << scan.samples << "\ntau_base: " << scan.tau_base
       << "\nmax_tau_observed: " << scan.max_tau_observed << "\n";
  if (scan.mu_base) text << "mu_base: " << *scan.mu_base << "\nmax_mu_observed: " << *scan.max_mu_observed << "\n";
  text << "violations: " << scan.violations.size() << "\nlabels observed:";
  for (const auto& l : labels) text << " " << l.display();
  text << "\n";
  for (const auto& v : scan.violations) text << "violation: " << v << "\n";
  return scan.violations.empty() ? kExitOk : kExitInternal;
}

int do_parse(const Context& c, const Polynomial& f, ordered_json& j, std::ostream& text) {
  j["canonical"] = f.to_string(c.names);
  j["terms"] = f.size();
  text << f.to_string(c.names) << "\n";
  return kExitOk;
}

void emit_error(const Context& c, const std::string& input, const Error& e, bool json_lines, std::ostream& out,
                std::ostream& err) {
  if (json_lines) {
    ordered_json j = envelope(c, input);
    j["error"] = e.what();
    out << j.dump() << "\n";
  } else {
    err << "error: " << e.what() << "\n";
  }
}

// Parses and analyses one input; JSON-lines mode writes compact JSON.
int analyse(const Context& c, const Handler& handler, const std::string& input, bool json_lines, std::ostream& out,
            std::ostream& err) {
  try {
    const Polynomial f = parse_poly(input, c.field, c.names);
    ordered_json j = envelope(c, f.to_string(c.names));
    std::ostringstream text;
    const int code = handler(c, f, j, text);
    if (json_lines) {
      out << j.dump() << "\n";
    } else if (c.opt.json) {
      out << j.dump(2) << "\n";
    } else {
      out << text.str();
    }
    return code;
  } catch (const Error& e) {
    emit_error(c, input, e, json_lines || c.opt.json, out, err);
    return exit_code(e.code());
  }
}

int run_oracle(const Options& opt, std::ostream& out) {
  const std::size_t nvars = parse_var_list(opt.vars).size();
  const Action action = opt.action == "contact" ? Action::Contact : Action::Right;
  if (opt.action != "right" && opt.action != "contact") {
    throw Error(ErrorCode::InvalidArgument, "--action must be right or contact");
  }
  const OrbitTable t = orbit_decomposition(enumerate_jets(opt.characteristic, nvars, opt.k), action);
  if (opt.json) {
    out << orbit_table_json(t) << "\n";
    return kExitOk;
  }
  out << "jets: " << t.space.size << "  group: " << t.group_size << "  orbits: " << t.orbits.size() << "\n";
  const auto names = default_var_names(nvars);
  for (const auto& o : t.orbits) {
    out << t.space.jet(o.rep).to_string(names) << "  size " << o.size << "  tau_k " << o.tau_k << "  mu_k "
        << o.mu_k << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classification and invariants of hypersurface singularities"};
  app.require_subcommand(1, 1);
  Options opt;

  const std::vector<std::pair<std::string, Handler>> handlers{
      {"invariants", do_invariants},   {"determinacy", do_determinacy}, {"split", do_split},
      {"classify", do_classify},       {"univariate", do_univariate},   {"deform-scan", do_deform_scan},
      {"parse", do_parse}};
  const std::map<std::string, std::string> descriptions{
      {"invariants", "Milnor and Tjurina numbers, order, Hessian rank"},
      {"determinacy", "Right and contact determinacy bounds"},
      {"split", "Splitting into a quadratic form plus residual"},
      {"classify", "Full report: invariants, bounds, split, contact and right labels"},
      {"univariate", "Determinacy and modality of a univariate germ in characteristic p"},
      {"deform-scan", "Semicontinuity scan of the Tjurina-basis unfolding"},
      {"parse", "Parse and print in canonical form"}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--char", opt.characteristic, "Characteristic: 0 or a prime");
    sub->add_option("--vars", opt.vars, "Comma-separated variable names")->capture_default_str();
    sub->add_option("--truncate", opt.truncate, "Jet bound cap (default: adaptive up to 64)");
    sub->add_flag("--json", opt.json, "JSON output");
  };
  for (const auto& [name, handler] : handlers) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    common(sub);
    sub->add_option("--file", opt.file, "Batch input, one polynomial per line (JSON-lines output)");
    sub->add_option("poly", opt.poly, "Polynomial");
    if (name == "deform-scan") {
      sub->add_option("--seed", opt.seed, "Sampling seed")->capture_default_str();
      sub->add_option("--samples", opt.samples, "Number of parameter samples")->capture_default_str();
    } else {
      sub->add_option("--seed", opt.seed, "Accepted for uniformity; unused");
    }
  }
  CLI::App* oracle = app.add_subcommand("oracle", "Orbit tables over tiny prime fields (fixtures)");
  common(oracle);
  oracle->add_option("--k", opt.k, "Jet degree")->capture_default_str();
  oracle->add_option("--action", opt.action, "right or contact")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitInputError;
  }

  try {
    const FieldSpec field = FieldSpec::make(opt.characteristic);
    if (oracle->parsed()) return run_oracle(opt, out);
    const JetBound cap = opt.truncate > 0 ? JetBound(opt.truncate) : default_cap();
    const Context ctx{field, parse_var_list(opt.vars), cap, opt};
    const Handler* handler = nullptr;
    for (const auto& [name, h] : handlers) {
      if (app.got_subcommand(name)) handler = &h;
    }
    if (!opt.file.empty()) {
      if (!opt.poly.empty()) throw Error(ErrorCode::InvalidArgument, "give either POLY or --file, not both");
      std::ifstream in(opt.file);
      if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + opt.file);
      int worst = kExitOk;
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        worst = std::max(worst, analyse(ctx, *handler, line, true, out, err));
      }
      return worst;
    }
    if (opt.poly.empty()) throw Error(ErrorCode::InvalidArgument, "missing polynomial argument");
    return analyse(ctx, *handler, opt.poly, false, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
}

}  // namespace singclass
