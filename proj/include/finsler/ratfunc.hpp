#ifndef FINSLER_RATFUNC_HPP
#define FINSLER_RATFUNC_HPP

#include "finsler/mpoly.hpp"

namespace finsler {

/// Exact rational function num/den in s, b2, n. Never reduced to lowest
/// terms; equality is decided by cross-multiplication, which sidesteps
/// multivariate GCD entirely.
class RatFunc {
 public:
  RatFunc() : num_(0L), den_(1L) {}
  explicit RatFunc(const MPoly& num) : num_(num), den_(MPoly(1L)) {}
  RatFunc(MPoly num, MPoly den);
  explicit RatFunc(long c) : num_(c), den_(1L) {}
  explicit RatFunc(const Rational& c) : num_(c), den_(1L) {}

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;

  /// Formal d/ds by the quotient rule (denominator squares, no reduction).
  RatFunc derivative_s() const;

  Rational eval(const Rational& s, const Rational& b2, const Rational& n) const;
  double eval(double s, double b2, double n) const;

  std::string str() const;

 private:
  MPoly num_, den_;
};

/// True iff a and b represent the same rational function:
/// a.num*b.den == b.num*a.den as exact polynomials.
bool rf_equal(const RatFunc& a, const RatFunc& b);

/// The cross-multiplied difference a.num*b.den - b.num*a.den; zero iff equal.
MPoly rf_difference(const RatFunc& a, const RatFunc& b);

}  // namespace finsler

#endif
