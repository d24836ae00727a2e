#include "stablerank/rational.hpp"

#include <cctype>

namespace stablerank {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num))
    throw InputError("not a rational literal: '" + std::string(text) + "'");
  Rational r;
  if (slash == std::string_view::npos) {
    r = Rational(parse_integer(num));
  } else {
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
      throw InputError("not a rational literal: '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0)
      throw InputError("zero denominator in '" + std::string(text) + "'");
    r = Rational(parse_integer(num), d);
    r.canonicalize();
  }
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

const Rational& ExtendedRational::value() const {
  if (!value_)
    throw std::logic_error("value() on an infinite ExtendedRational");
  return *value_;
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinite() || b.is_infinite())
    return a.is_infinite() && b.is_infinite();
  return *a.value_ == *b.value_;
}

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinite())
    return false;
  if (b.is_infinite())
    return true;
  return *a.value_ < *b.value_;
}

std::string to_string(const ExtendedRational& value) {
  return value.is_infinite() ? std::string("inf") : to_string(value.value());
}

Integer lcm_of_denominators(const RationalVector& values) {
  Integer l = 1;
  for (const auto& v : values)
    l = lcm(l, Integer(v.get_den()));
  return l;
}

} // namespace stablerank
