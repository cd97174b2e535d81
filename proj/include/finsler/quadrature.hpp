#ifndef FINSLER_QUADRATURE_HPP
#define FINSLER_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace finsler {

struct QuadRule {
  std::vector<double> x;  // nodes
  std::vector<double> w;  // weights
};

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton on the Legendre
/// polynomial, machine-precision roots).
QuadRule gauss_legendre(int n);

/// Integrates f over [a, b] with an n-node Gauss-Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace finsler

#endif
