#include "freqlmi/rational.hpp"

#include <cctype>
#include <cmath>

#include "freqlmi/error.hpp"

namespace freqlmi {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
  }
  std::string body(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(body, 10);
}

Rat parse_decimal(std::string_view s) {
  // mantissa [eE exponent]
  std::string_view mant = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mant = s.substr(0, e);
    std::string_view ex = s.substr(e + 1);
    if (!is_integer_literal(ex) || ex.size() > 6) {
      throw Error(ErrorCode::ParseError, "bad exponent in '" + std::string(s) + "'");
    }
    exponent = std::stol(std::string(ex));
  }
  bool negative = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    negative = mant[0] == '-';
    mant.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : mant) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw Error(ErrorCode::ParseError, "not a number: '" + std::string(s) + "'");
    }
  }
  if (digits.empty()) throw Error(ErrorCode::ParseError, "not a number: '" + std::string(s) + "'");
  Rat value(mpz_class(digits, 10));
  long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  if (shift >= 0) {
    value *= scale;
  } else {
    value /= scale;
  }
  value.canonicalize();
  return negative ? Rat(-value) : value;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  if (is_integer_literal(text)) return Rat(parse_integer(text));
  return parse_decimal(text);
}

std::string to_string(const Rat& value) {
  Rat r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat from_double(double d) {
  if (!std::isfinite(d)) throw Error(ErrorCode::BadArgument, "non-finite value");
  Rat r(d);
  r.canonicalize();
  return r;
}

}  // namespace freqlmi
