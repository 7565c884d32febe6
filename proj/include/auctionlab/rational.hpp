#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace auctionlab {

// Arbitrary-precision exact rational. Always kept in canonical form.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

// Exact embedding of a binary double (every finite double is a dyadic rational).
inline Rational rational_from_double(double x) { return Rational(x); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline std::string numerator_string(const Rational& r) { return r.get_num().get_str(); }
inline std::string denominator_string(const Rational& r) { return r.get_den().get_str(); }

// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Decimal expansion truncated after `digits` fractional digits.
std::string to_decimal_string(const Rational& r, int digits = 17);

Rational rational_pow(const Rational& base, unsigned exponent);

// Parses "p/q", an integer, or a decimal such as "0.125" or "-2.5e-3" into the
// exact rational it denotes. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

}  // namespace auctionlab
