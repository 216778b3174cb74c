#pragma once

// Exact rational arithmetic used for every degree bound and threshold.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bipgirth/error.hpp"

namespace bipgirth {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  return Rational(Integer(num), Integer(den));  // canonicalised by the backend
}

/// Parses "p/q" or a plain integer "p". Decimal input is rejected so that
/// boundary values like 1/3 are never silently rounded.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::ParseError, "expected rational p/q, got '" + std::string(text) + "'");
  Integer n(std::string(num[0] == '+' ? num.substr(1) : num));
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(n) / Rational(d);
}

/// Always "p/q", including integers ("1/1") and zero ("0/1").
inline std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Integer floor_int(const Rational& r) {
  Integer q = numerator(r) / denominator(r);  // truncates toward zero
  if (r < 0 && q * denominator(r) != numerator(r)) q -= 1;
  return q;
}

inline Integer ceil_int(const Rational& r) { return -floor_int(-r); }

/// ceil(r * n) for a nonnegative count n, as a machine integer.
inline std::int64_t ceil_times(const Rational& r, std::int64_t n) {
  return ceil_int(r * n).convert_to<std::int64_t>();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace bipgirth
