#ifndef FINSLER_RATIONAL_HPP
#define FINSLER_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace finsler {

/// Exact arbitrary-precision rational (GMP-backed).
using Rational = mpq_class;

/// Parses "p/q", "p", or a decimal like "-0.25" into an exact rational.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    // decimal literal: digits after the dot become a power-of-ten denominator
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t frac_len = text.size() - dot - 1;
    mpz_class num(digits, 10);
    mpz_class den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace finsler

#endif
