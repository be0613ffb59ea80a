#pragma once

// Exact scalars. Integers and rationals are GMP values; mpq_class keeps every
// arithmetic result canonical (lowest terms, positive denominator).

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "dicactus/errors.hpp"

namespace dicactus {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den reduced to lowest terms. Throws on a zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

/// "p/q" in lowest terms with q > 0, or "p" when q = 1.
inline std::string to_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_str();
}

inline std::string to_string(const Integer& value) { return value.get_str(); }

/// Inverse of to_string. Accepts non-canonical input ("2/4") and reduces it.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](std::string_view part) {
    if (part.empty()) return false;
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) return false;
    for (std::size_t k = start; k < part.size(); ++k) {
      if (part[k] < '0' || part[k] > '9') return false;
    }
    return true;
  };
  std::string_view num = std::string_view(s).substr(0, slash);
  std::string_view den = slash == std::string::npos
                             ? std::string_view("1")
                             : std::string_view(s).substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw Error("not a rational literal: '" + s + "'");
  }
  Integer p(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw Error("zero denominator: '" + s + "'");
  return make_rational(p, q);
}

/// Fixed-point rendering rounded half-to-even at `digits` fractional digits,
/// suffixed with '~' to mark it as approximate.
inline std::string to_decimal(const Rational& value, unsigned digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Integer num = abs(value.get_num()) * scale;
  const Integer& den = value.get_den();
  Integer quot;
  Integer rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
              den.get_mpz_t());
  int half = cmp(Integer(rem * 2), den);
  if (half > 0 || (half == 0 && mpz_odd_p(quot.get_mpz_t()))) ++quot;

  std::string body = quot.get_str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  if (sgn(value) < 0 && quot != 0) body.insert(0, "-");
  return body + "~";
}

}  // namespace dicactus
