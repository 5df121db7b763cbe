#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singclass/classify.hpp"
#include "singclass/deform.hpp"
#include "singclass/determinacy.hpp"
#include "singclass/splitting.hpp"

namespace singclass {

inline constexpr std::string_view kReportSchema = "singclass/1";

struct SplitSummary {
  struct Pair {
    std::size_t i = 0;
    std::size_t j = 0;
    std::string a_i;
    std::string a_j;
    friend bool operator==(const Pair&, const Pair&) = default;
  };
  struct Diagonal {
    std::size_t i = 0;
    std::string a;
    friend bool operator==(const Diagonal&, const Diagonal&) = default;
  };

  std::size_t rank = 0;
  std::size_t corank = 0;
  int bound = 0;
  std::vector<Pair> pairs;
  std::vector<Diagonal> diagonal;
  std::vector<Diagonal> squares;
  std::string quad_form;
  std::string residual;
  /// Image of each variable under the splitting transform.
  std::vector<std::string> transform;

  friend bool operator==(const SplitSummary&, const SplitSummary&) = default;
};

SplitSummary summarize_split(const SplitResult& split, const std::vector<std::string>& names);

struct UnivariateSummary {
  unsigned mult = 0;
  unsigned e = 0;
  unsigned q = 0;
  unsigned k = 0;
  std::uint64_t determinacy = 0;
  InvariantValue mu;
  std::uint64_t modality = 0;
  bool simple = false;
  std::optional<std::string> normal_form_hint;

  friend bool operator==(const UnivariateSummary&, const UnivariateSummary&) = default;
};

UnivariateSummary summarize_univariate(const UnivariateReport& r, const std::vector<std::string>& names);

/// Everything the library can say about one germ. Failed sub-analyses leave
/// their optional empty and record "Code: message" in the matching error.
struct SingularityReport {
  std::string polynomial;
  std::uint64_t characteristic = 0;
  std::vector<std::string> variables;
  int cap = 64;

  std::optional<unsigned> order;
  std::optional<InvariantValue> mu;
  std::optional<InvariantValue> tau;
  std::string invariants_error;
  std::optional<std::size_t> rank;
  std::optional<std::size_t> corank;

  std::optional<DeterminacyBound> right_determinacy;
  std::string right_determinacy_error;
  std::optional<DeterminacyBound> contact_determinacy;
  std::string contact_determinacy_error;

  std::optional<SplitSummary> split;
  std::string split_error;

  ClassLabel contact_label;
  ClassLabel right_label;

  std::optional<UnivariateSummary> univariate;
  std::string univariate_error;

  std::vector<std::string> warnings;

  friend bool operator==(const SingularityReport&, const SingularityReport&) = default;
};

/// Throws InvalidArgument for the zero polynomial and NotInMaximalIdeal for
/// a unit; every other failure is recorded inside the report.
SingularityReport build_report(const Polynomial& f, const std::vector<std::string>& names, JetBound cap);

/// Inverse of family/name()/display(): "A_4", "E_6", "D_inf", "Smooth", ...
ClassLabel label_from_name(std::string_view name, std::optional<unsigned> variant, std::string reason);

std::string report_to_json(const SingularityReport& report, int indent = 2);
/// Throws InvalidArgument on malformed input or a schema mismatch.
SingularityReport report_from_json(std::string_view text);

std::string report_to_text(const SingularityReport& report);

/// Shared JSON fragments, serialized with `indent` like report_to_json.
std::string scan_report_json(const ScanReport& scan, const std::vector<ClassLabel>& labels, int indent = 2);

}  // namespace singclass
