#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "singclass/polynomial.hpp"

namespace singclass {

/// Parses a polynomial expression.
///
///   poly   := ['-'] term { ('+'|'-') term }
///   term   := factor { ['*'] factor }
///   factor := atom [ '^' uint ]
///   atom   := uint [ '/' uint ] | var | '(' poly ')'
///
/// This accepts the documented coefficient/monomial grammar plus grouping.
/// When every variable name is a single letter, SINGULAR-style implicit
/// products and exponents are accepted ("x3y" = x^3*y, "2xy" = 2*x*y).
/// Denominators must be invertible in the field.
///
/// Errors: SyntaxError (with position), UnknownVariable,
/// DivisionByZeroInCoefficient, ExponentOverflow.
Polynomial parse_poly(std::string_view text, FieldSpec field, const std::vector<std::string>& var_names);

/// Splits "x,y,z" into names; rejects empty or duplicate names.
std::vector<std::string> parse_var_list(std::string_view text);

}  // namespace singclass
