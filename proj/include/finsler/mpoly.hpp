#ifndef FINSLER_MPOLY_HPP
#define FINSLER_MPOLY_HPP

#include <array>
#include <map>
#include <string>

#include "finsler/rational.hpp"

namespace finsler {

/// The three formal variables of the identity-checking engine.
/// b2 stands for b^2: every certified expression is polynomial in b^2,
/// and n (the manifold dimension) stays formal so identities hold for
/// every dimension at once.
enum class Var { s = 0, b2 = 1, n = 2 };

/// Exponent triple (deg_s, deg_b2, deg_n); map ordering gives canonical form.
using Monomial = std::array<int, 3>;

/// Sparse multivariate polynomial in s, b2, n over exact rationals.
/// Zero coefficients are never stored.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(const Rational& c);
  explicit MPoly(long c);

  static MPoly var(Var v, int exponent = 1);
  static MPoly term(const Rational& c, int ds, int db2, int dn);

  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly pow(int e) const;
  MPoly scale(const Rational& c) const;

  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  /// Formal partial derivative.
  MPoly derivative(Var v) const;

  /// Exact evaluation at a rational point.
  Rational eval(const Rational& s, const Rational& b2, const Rational& n) const;
  double eval(double s, double b2, double n) const;

  /// Canonical text form, e.g. "-12*n*s^5 + 9*s^4 - 3".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

MPoly operator*(const Rational& c, const MPoly& p);

}  // namespace finsler

#endif
