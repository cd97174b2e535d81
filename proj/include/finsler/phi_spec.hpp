#ifndef FINSLER_PHI_SPEC_HPP
#define FINSLER_PHI_SPEC_HPP

#include <string>
#include <vector>

#include "finsler/jet.hpp"
#include "finsler/rational.hpp"

namespace finsler {

enum class PhiFamily { riemannian, randers, square, randers_square, custom };

/// The phi function of an (alpha,beta)-metric F = alpha * phi(beta/alpha),
/// restricted to polynomials in s. Coefficients are kept exact so the
/// symbolic engine can consume them; evaluation uses doubles.
class PhiSpec {
 public:
  /// Named family:
  ///   riemannian      phi = 1
  ///   randers         phi = 1 + s
  ///   square          phi = 1 + 2s + s^2    (F = (alpha+beta)^2/alpha)
  ///   randers_square  phi = 1 + 3s + s^2    (F = (alpha+beta)^2/alpha + beta)
  static PhiSpec named(PhiFamily family);
  static PhiSpec named(const std::string& family_name);

  /// Custom polynomial, ascending coefficients; requires phi(0) > 0.
  static PhiSpec custom(std::vector<Rational> coeffs);

  PhiFamily family() const { return family_; }
  const std::string& family_name() const { return name_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const std::vector<double>& coeffs_d() const { return coeffs_d_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  double operator()(double s) const;
  double d1(double s) const;
  double d2(double s) const;

  /// phi evaluated on a jet (exact for polynomials).
  Jet4 eval_jet(const Jet4& s) const;
  /// phi' evaluated on a jet.
  Jet4 d1_jet(const Jet4& s) const;

 private:
  PhiSpec(PhiFamily f, std::string name, std::vector<Rational> coeffs);
  PhiFamily family_;
  std::string name_;
  std::vector<Rational> coeffs_;
  std::vector<double> coeffs_d_;
  std::vector<double> d1_coeffs_d_;
  std::vector<double> d2_coeffs_d_;
};

}  // namespace finsler

#endif
