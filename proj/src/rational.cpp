#include "flagoct/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace flagoct {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

namespace {

Integer parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  Integer numerator = parse_digits(body.substr(0, slash), text);
  Integer denominator = 1;
  if (slash != std::string_view::npos) {
    denominator = parse_digits(body.substr(slash + 1), text);
    if (denominator == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
  }
  Rational value(numerator, denominator);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace flagoct
