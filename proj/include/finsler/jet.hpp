#ifndef FINSLER_JET_HPP
#define FINSLER_JET_HPP

#include <cmath>
#include <span>
#include <stdexcept>

namespace finsler {

/// Truncated Taylor scalar carrying a value and its first four derivatives
/// with respect to a single seed variable. Arithmetic follows the truncated
/// Leibniz/chain rules, so evaluating a composite expression on a variable
/// jet yields the exact derivatives of that expression (no finite-difference
/// truncation error).
struct Jet4 {
  double f = 0.0;   // value
  double d1 = 0.0;  // first derivative
  double d2 = 0.0;
  double d3 = 0.0;
  double d4 = 0.0;

  static Jet4 constant(double c) { return {c, 0.0, 0.0, 0.0, 0.0}; }
  static Jet4 variable(double x) { return {x, 1.0, 0.0, 0.0, 0.0}; }

  /// Jet of f' as a function: shifts the derivative stack down one slot.
  /// The shifted jet is exact only through order 3 (the top slot is filled
  /// with zero because f^(5) is not tracked).
  Jet4 derivative_shift() const { return {d1, d2, d3, d4, 0.0}; }
};

inline Jet4 operator+(const Jet4& a, const Jet4& b) {
  return {a.f + b.f, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3, a.d4 + b.d4};
}
inline Jet4 operator-(const Jet4& a, const Jet4& b) {
  return {a.f - b.f, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3, a.d4 - b.d4};
}
inline Jet4 operator-(const Jet4& a) { return {-a.f, -a.d1, -a.d2, -a.d3, -a.d4}; }

inline Jet4 operator*(const Jet4& a, const Jet4& b) {
  // Leibniz with binomial weights 1,1 / 1,2,1 / 1,3,3,1 / 1,4,6,4,1
  return {a.f * b.f,
          a.d1 * b.f + a.f * b.d1,
          a.d2 * b.f + 2.0 * a.d1 * b.d1 + a.f * b.d2,
          a.d3 * b.f + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.f * b.d3,
          a.d4 * b.f + 4.0 * a.d3 * b.d1 + 6.0 * a.d2 * b.d2 + 4.0 * a.d1 * b.d3 +
              a.f * b.d4};
}

inline Jet4 operator*(double c, const Jet4& a) {
  return {c * a.f, c * a.d1, c * a.d2, c * a.d3, c * a.d4};
}
inline Jet4 operator*(const Jet4& a, double c) { return c * a; }
inline Jet4 operator+(const Jet4& a, double c) { return {a.f + c, a.d1, a.d2, a.d3, a.d4}; }
inline Jet4 operator+(double c, const Jet4& a) { return a + c; }
inline Jet4 operator-(const Jet4& a, double c) { return a + (-c); }
inline Jet4 operator-(double c, const Jet4& a) { return (-a) + c; }

/// h = a/b, solved recursively from a = h*b.
inline Jet4 operator/(const Jet4& a, const Jet4& b) {
  if (b.f == 0.0) throw std::domain_error("Jet4: division by zero-valued jet");
  Jet4 h;
  h.f = a.f / b.f;
  h.d1 = (a.d1 - h.f * b.d1) / b.f;
  h.d2 = (a.d2 - 2.0 * h.d1 * b.d1 - h.f * b.d2) / b.f;
  h.d3 = (a.d3 - 3.0 * h.d2 * b.d1 - 3.0 * h.d1 * b.d2 - h.f * b.d3) / b.f;
  h.d4 = (a.d4 - 4.0 * h.d3 * b.d1 - 6.0 * h.d2 * b.d2 - 4.0 * h.d1 * b.d3 -
          h.f * b.d4) / b.f;
  return h;
}
inline Jet4 operator/(const Jet4& a, double c) { return a * (1.0 / c); }
inline Jet4 operator/(double c, const Jet4& a) { return Jet4::constant(c) / a; }

/// r = sqrt(a), solved recursively from r*r = a.
inline Jet4 sqrt(const Jet4& a) {
  if (a.f <= 0.0) throw std::domain_error("Jet4: sqrt of non-positive jet");
  Jet4 r;
  r.f = std::sqrt(a.f);
  const double inv = 1.0 / (2.0 * r.f);
  r.d1 = a.d1 * inv;
  r.d2 = (a.d2 - 2.0 * r.d1 * r.d1) * inv;
  r.d3 = (a.d3 - 6.0 * r.d2 * r.d1) * inv;
  r.d4 = (a.d4 - 8.0 * r.d3 * r.d1 - 6.0 * r.d2 * r.d2) * inv;
  return r;
}

/// Horner evaluation of a polynomial (ascending coefficients) on a jet.
inline Jet4 poly_eval(std::span<const double> coeffs, const Jet4& x) {
  Jet4 acc = Jet4::constant(0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace finsler

#endif
