#include "finsler/scurvature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "finsler/metric.hpp"
#include "finsler/phicalc.hpp"

namespace finsler {

namespace {

struct Point {
  double alpha = 0.0;
  double s = 0.0;
  double b = 0.0;
  KVector br;  // [v,y]_k
  double br_y = 0.0;
  double br_v = 0.0;
};

Point evaluate_point(const LieModel& m, int n, const KVector& y) {
  if (n < 2) throw std::invalid_argument("s-curvature: n must be >= 2");
  Point p;
  p.alpha = alpha(m, y);
  if (p.alpha == 0.0)
    throw std::domain_error("s-curvature: y = 0 is outside the slit tangent bundle");
  p.b = m.b();
  p.s = std::clamp(beta(m, y) / p.alpha, -p.b, p.b);
  p.br = m.bracket_k(m.v(), y);
  p.br_y = m.dot(p.br, y);
  p.br_v = m.dot(p.br, m.v());
  return p;
}

double horner(std::initializer_list<double> ascending, double x) {
  double acc = 0.0;
  const double* data = ascending.begin();
  for (std::size_t k = ascending.size(); k-- > 0;) acc = acc * x + data[k];
  return acc;
}

}  // namespace

double s_general(const LieModel& m, const PhiSpec& phi, int n, const KVector& y) {
  const Point p = evaluate_point(m, n, y);
  const auto q = quantities_generic(phi, make_context(n, p.b, p.s));
  return q.Phi / (2.0 * p.alpha * q.Delta * q.Delta) *
         (p.br_y + p.alpha * q.Q * p.br_v);
}

double s_square(const LieModel& m, int n, const KVector& y) {
  const Point p = evaluate_point(m, n, y);
  const double s = p.s, b2 = p.b * p.b, nd = n;
  const double shen = 1.0 - 3.0 * s * s + 2.0 * b2;
  const double a_num = horner({-(1.0 + nd) * (1.0 + 2.0 * b2),
                               2.0 + 2.0 * nd + (4.0 * nd - 2.0) * b2,
                               3.0 * (nd + 1.0),
                               -6.0 * nd},
                              s);
  const double a = a_num / (shen * shen);
  return a * (2.0 / (1.0 - s) * p.br_v + p.br_y / p.alpha);
}

double s_randers_square(const LieModel& m, int n, const KVector& y) {
  const Point p = evaluate_point(m, n, y);
  const double s = p.s, b2 = p.b * p.b, nd = n;
  const double shen = 1.0 - 3.0 * s * s + 2.0 * b2;
  const double delta_num =
      horner({2.0 * b2 + 1.0, 6.0 * b2 + 3.0, 2.0 * b2 - 2.0, -9.0, -3.0}, s);
  const double b_num = horner({-(3.0 + 6.0 * b2 + 6.0 * nd * b2 + 3.0 * nd),
                               -12.0 * b2,
                               18.0 * nd * b2 + 18.0 * nd - 18.0 * b2 + 18.0,
                               8.0 * nd * b2 + 4.0 * nd - 4.0 * b2 + 16.0,
                               -27.0 * nd + 9.0,
                               -12.0 * nd},
                              s);
  const double bfac = b_num / (2.0 * shen * delta_num);
  return bfac * ((2.0 * s + 3.0) / (1.0 - s * s) * p.br_v + p.br_y / p.alpha);
}

std::vector<KVector> sphere_directions(int dim, int count, unsigned seed) {
  if (dim < 1) throw std::invalid_argument("sphere_directions: dim must be >= 1");
  if (count < 1) throw std::invalid_argument("sphere_directions: count must be >= 1");

  // generalized-golden-ratio Kronecker sequence in [0,1)^dim
  double g = 1.5;
  for (int it = 0; it < 64; ++it) g = std::pow(1.0 + g, 1.0 / (dim + 1));
  std::vector<double> alphas(dim);
  double p = 1.0;
  for (int j = 0; j < dim; ++j) {
    p /= g;
    alphas[j] = p;
  }

  // Acklam's rational approximation of the standard normal inverse CDF;
  // accuracy is irrelevant here, any smooth monotone map to N(0,1) gives a
  // uniform direction set after normalization.
  auto inv_norm = [](double u) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1.0 - plow;
    if (u < plow) {
      const double q = std::sqrt(-2.0 * std::log(u));
      return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
             ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (u > phigh) {
      const double q = std::sqrt(-2.0 * std::log(1.0 - u));
      return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
             ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = u - 0.5, r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  };

  std::vector<KVector> dirs;
  dirs.reserve(count);
  const double shift = 0.5 + 1e-3 * static_cast<double>(seed % 1000);
  for (int k = 0; k < count; ++k) {
    KVector z(dim);
    for (int j = 0; j < dim; ++j) {
      double u = shift + (k + 1.0) * alphas[j];
      u -= std::floor(u);
      u = std::min(std::max(u, 1e-12), 1.0 - 1e-12);
      z[j] = inv_norm(u);
    }
    const double norm = z.norm();
    if (norm < 1e-12) {
      z.setZero();
      z[k % dim] = 1.0;
      dirs.push_back(z);
    } else {
      dirs.push_back(z / norm);
    }
  }
  return dirs;
}

IsotropyReport isotropy_classify(const LieModel& m, const PhiSpec& phi, int n,
                                 int samples, double tol) {
  if (samples < 1) throw std::invalid_argument("isotropy_classify: samples must be >= 1");
  IsotropyReport rep;
  rep.samples = samples;
  rep.tol = tol;

  // scale from the bracket table so the tolerance tracks the model size
  double bracket_scale = 1.0;
  const int dk = m.dim_k();
  for (int i = 0; i < dk; ++i)
    for (int j = i + 1; j < dk; ++j) {
      KVector ei = KVector::Zero(dk), ej = KVector::Zero(dk);
      ei[i] = 1.0;
      ej[j] = 1.0;
      const KVector br = m.bracket_k(ei, ej);
      bracket_scale = std::max(bracket_scale, std::sqrt(m.dot(br, br)));
    }

  double sum_sf = 0.0, sum_ff = 0.0, max_abs = 0.0;
  std::vector<double> svals, fvals;
  svals.reserve(samples);
  fvals.reserve(samples);
  for (const KVector& dir : sphere_directions(dk, samples)) {
    const double a = alpha(m, dir);
    const KVector y = dir / a;  // alpha-normalized
    const double sv = s_general(m, phi, n, y);
    const double fv = F(m, phi, y);
    svals.push_back(sv);
    fvals.push_back(fv);
    max_abs = std::max(max_abs, std::abs(sv));
    sum_sf += sv * fv;
    sum_ff += fv * fv;
  }
  rep.max_abs_s = max_abs;
  rep.c_fit = sum_ff > 0.0 ? sum_sf / ((n + 1.0) * sum_ff) : 0.0;
  double rss = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double r = svals[k] - (n + 1.0) * rep.c_fit * fvals[k];
    rss += r * r;
  }
  rep.c_residual = std::sqrt(rss / samples);
  if (m.b() > 0.0) rep.s_at_v = s_general(m, phi, n, m.v());
  rep.verdict = max_abs < tol * bracket_scale ? IsotropyVerdict::vanishing
                                              : IsotropyVerdict::non_vanishing;
  return rep;
}

}  // namespace finsler
