#include <cctype>
#include <stdexcept>
#include <string>

#include "auctionlab/rational.hpp"

namespace auctionlab {

std::string to_decimal_string(const Rational& r, int digits) {
  mpz_class num = r.get_num();
  const mpz_class& den = r.get_den();
  std::string out;
  if (sgn(num) < 0) {
    out += '-';
    num = -num;
  }
  mpz_class whole = num / den;
  mpz_class rem = num % den;
  out += whole.get_str();
  if (rem == 0) return out;
  out += '.';
  for (int i = 0; i < digits && rem != 0; ++i) {
    rem *= 10;
    mpz_class digit = rem / den;
    rem %= den;
    out += digit.get_str();
  }
  return out;
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

namespace {

[[noreturn]] void malformed(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) malformed(whole);
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) malformed(whole);
  }
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) malformed(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(s.substr(0, slash), text);
    const mpz_class den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) malformed(text);
    value = Rational(num, den);
  } else {
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_part = s.substr(e + 1);
      s = s.substr(0, e);
      bool exp_negative = false;
      if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
        exp_negative = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      const mpz_class ev = parse_integer(exp_part, text);
      if (!ev.fits_slong_p() || ev > 4096) malformed(text);
      exponent = exp_negative ? -ev.get_si() : ev.get_si();
    }
    std::string digits;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
      const std::string_view int_part = s.substr(0, dot);
      const std::string_view frac_part = s.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) malformed(text);
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      digits = std::string(s);
    }
    mpz_class mantissa = parse_integer(digits, text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    value = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace auctionlab
