#pragma once

// Exact arithmetic value types shared by every module.
//
// Rational is GMP's mpq_class. All arithmetic on mpq_class yields canonical
// (lowest terms, positive denominator) values; values built from strings go
// through parse_rational, which canonicalizes.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stablerank {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Raised for malformed or out-of-contract input. Computations never throw
/// anything else on well-formed input.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Parses `p/q` or a bare integer `p`. Decimal literals are rejected.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// A rational extended by +infinity. Used for ranks and orders where the
/// paper's conventions put the value at infinity.
class ExtendedRational {
public:
  ExtendedRational() = default; // +inf
  ExtendedRational(Rational value) : value_(std::move(value)) {} // NOLINT

  static ExtendedRational infinity() { return {}; }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) {
    return !(b < a);
  }

private:
  std::optional<Rational> value_;
};

/// "inf" for +infinity, otherwise the rational's string.
std::string to_string(const ExtendedRational& value);

Integer lcm_of_denominators(const RationalVector& values);

} // namespace stablerank
