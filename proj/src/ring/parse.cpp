#include "singclass/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "singclass/errors.hpp"

namespace singclass {

namespace {

class Parser {
 public:
  Parser(std::string_view text, FieldSpec field, const std::vector<std::string>& names)
      : field_(field), names_(names) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      compact_ += text[i];
      origin_.push_back(i);
    }
    origin_.push_back(text.size());
    single_letter_ = std::all_of(names_.begin(), names_.end(),
                                 [](const std::string& n) { return n.size() == 1; });
  }

  Polynomial parse() {
    if (compact_.empty()) fail("empty expression");
    Polynomial result = parse_sum();
    if (pos_ != compact_.size()) fail(std::string("unexpected '") + compact_[pos_] + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    const std::size_t at = origin_[std::min(pos_, origin_.size() - 1)];
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(at), at);
  }

  bool at_end() const { return pos_ >= compact_.size(); }
  char peek() const { return at_end() ? '\0' : compact_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Polynomial parse_sum() {
    const bool negate = accept('-');
    Polynomial acc = parse_term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc = acc + parse_term();
      } else if (accept('-')) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor(char c) const {
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') return true;
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Polynomial parse_term() {
    if (at_end()) fail("expected a term");
    Polynomial acc = parse_factor();
    while (true) {
      if (accept('*')) {
        acc = acc * parse_factor();
      } else if (single_letter_ && !at_end() && starts_factor(peek())) {
        acc = acc * parse_factor();
      } else {
        return acc;
      }
    }
  }

  unsigned parse_uint_exponent() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    unsigned long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned long>(peek() - '0');
      if (value > kMaxExponent) {
        throw Error(ErrorCode::ExponentOverflow,
                    "exponent exceeds " + std::to_string(kMaxExponent) + " at position " +
                        std::to_string(origin_[pos_]),
                    origin_[pos_]);
      }
      ++pos_;
    }
    return static_cast<unsigned>(value);
  }

  static Polynomial power(const Polynomial& base, unsigned e) {
    Polynomial r = Polynomial::constant(base.field(), base.nvars(), 1);
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
  }

  Polynomial parse_factor() {
    Polynomial atom = parse_atom();
    while (accept('^')) atom = power(atom, parse_uint_exponent());
    return atom;
  }

  mpz_class parse_integer() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += compact_[pos_++];
    return mpz_class(digits, 10);
  }

  Polynomial parse_atom() {
    const char c = peek();
    const std::size_t n = names_.size();
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = parse_integer();
      mpz_class den = 1;
      if (accept('/')) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        const std::size_t at = origin_[pos_];
        den = parse_integer();
        if (den == 0 || (!field_.is_rational() && den % field_.characteristic() == 0)) {
          throw Error(ErrorCode::DivisionByZeroInCoefficient,
                      "denominator vanishes in " + field_.name() + " at position " + std::to_string(at),
                      at);
        }
      }
      return Polynomial::constant(field_, n, Scalar::from_fraction(field_, num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      std::string name;
      if (single_letter_) {
        name = std::string(1, compact_[pos_++]);
      } else {
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
          name += compact_[pos_++];
        }
      }
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) {
        throw Error(ErrorCode::UnknownVariable,
                    "'" + name + "' at position " + std::to_string(origin_[start]), origin_[start]);
      }
      unsigned exponent = 1;
      if (single_letter_ && !at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        exponent = parse_uint_exponent();
      }
      const auto index = static_cast<std::size_t>(it - names_.begin());
      return Polynomial::monomial(field_, Monomial::variable(n, index, exponent),
                                  Scalar::from_int(field_, 1));
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  FieldSpec field_;
  const std::vector<std::string>& names_;
  std::string compact_;
  std::vector<std::size_t> origin_;
  std::size_t pos_ = 0;
  bool single_letter_ = false;
};

}  // namespace

Polynomial parse_poly(std::string_view text, FieldSpec field, const std::vector<std::string>& var_names) {
  if (var_names.empty()) throw Error(ErrorCode::InvalidArgument, "no variables declared");
  std::set<std::string> seen(var_names.begin(), var_names.end());
  if (seen.size() != var_names.size()) throw Error(ErrorCode::InvalidArgument, "duplicate variable names");
  return Parser(text, field, var_names).parse();
}

std::vector<std::string> parse_var_list(std::string_view text) {
  std::vector<std::string> names;
  std::string current;
  auto flush = [&] {
    if (current.empty()) throw Error(ErrorCode::InvalidArgument, "empty variable name in list");
    if (!(std::isalpha(static_cast<unsigned char>(current.front())) || current.front() == '_')) {
      throw Error(ErrorCode::InvalidArgument, "variable name '" + current + "' must start with a letter");
    }
    for (char ch : current) {
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) {
        throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + current + "'");
      }
    }
    names.push_back(current);
    current.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') {
      flush();
    } else {
      current += ch;
    }
  }
  flush();
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) throw Error(ErrorCode::InvalidArgument, "duplicate variable names");
  if (names.size() > kMaxVars) {
    throw Error(ErrorCode::InvalidArgument, "at most " + std::to_string(kMaxVars) + " variables supported");
  }
  return names;
}

}  // namespace singclass
