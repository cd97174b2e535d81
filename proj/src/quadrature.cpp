#include "finsler/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace finsler {

namespace {

// Legendre P_n and P_n' by the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

namespace {
QuadRule build_gauss_legendre(int n);
}  // namespace

QuadRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  static std::mutex mutex;
  static std::map<int, QuadRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gauss_legendre(n)).first;
  return it->second;
}

namespace {
QuadRule build_gauss_legendre(int n) {
  QuadRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  const double tol = 4.0 * std::numeric_limits<double>::epsilon();
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess, then Newton
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre(n, x, p, dp);
      const double dx = -p / dp;
      x += dx;
      if (std::abs(dx) <= tol * std::max(1.0, std::abs(x))) break;
    }
    legendre(n, x, p, dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.x[i] = -x;
    rule.w[i] = w;
    rule.x[n - 1 - i] = x;
    rule.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.x[n / 2] = 0.0;
  return rule;
}
}  // namespace

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
  const QuadRule rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += rule.w[i] * f(mid + rad * rule.x[i]);
  return acc * rad;
}

}  // namespace finsler
