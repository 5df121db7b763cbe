#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "singclass/report.hpp"

namespace singclass::detail {

std::string field_name(std::uint64_t p);
std::string monomial_text(const Monomial& m, const std::vector<std::string>& names);
const char* invariant_key(Equivalence e);

nlohmann::ordered_json invariant_json(const InvariantValue& v);
InvariantValue invariant_from(const nlohmann::ordered_json& j, InvariantKind kind);
nlohmann::ordered_json determinacy_json(const DeterminacyBound& b, const std::vector<std::string>& names);
DeterminacyBound determinacy_from(const nlohmann::ordered_json& j, Equivalence e, std::size_t nvars);
nlohmann::ordered_json label_json(const ClassLabel& l, bool simple_contact, bool simple_right);
ClassLabel label_from(const nlohmann::ordered_json& j);
nlohmann::ordered_json split_json(const SplitSummary& s, const std::vector<std::string>& names);
SplitSummary split_from(const nlohmann::ordered_json& j, const std::vector<std::string>& names);
nlohmann::ordered_json univariate_json(const UnivariateSummary& u);
UnivariateSummary univariate_from(const nlohmann::ordered_json& j);

}  // namespace singclass::detail
