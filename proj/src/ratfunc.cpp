#include "finsler/ratfunc.hpp"

#include <stdexcept>

namespace finsler {

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.num_.is_zero()) throw std::domain_error("RatFunc: division by zero function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::derivative_s() const {
  const MPoly dn = num_.derivative(Var::s);
  const MPoly dd = den_.derivative(Var::s);
  return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

Rational RatFunc::eval(const Rational& s, const Rational& b2, const Rational& n) const {
  const Rational d = den_.eval(s, b2, n);
  if (d == 0) throw std::domain_error("RatFunc: evaluation at a pole");
  return num_.eval(s, b2, n) / d;
}

double RatFunc::eval(double s, double b2, double n) const {
  return num_.eval(s, b2, n) / den_.eval(s, b2, n);
}

std::string RatFunc::str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

bool rf_equal(const RatFunc& a, const RatFunc& b) {
  return rf_difference(a, b).is_zero();
}

MPoly rf_difference(const RatFunc& a, const RatFunc& b) {
  return a.num() * b.den() - b.num() * a.den();
}

}  // namespace finsler
