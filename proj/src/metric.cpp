#include "finsler/metric.hpp"

#include <cmath>
#include <stdexcept>

#include "finsler/jet.hpp"
#include "finsler/quadrature.hpp"

namespace finsler {

double alpha(const LieModel& m, const KVector& y) {
  return std::sqrt(std::max(0.0, m.dot(y, y)));
}

double beta(const LieModel& m, const KVector& y) { return m.dot(m.v(), y); }

double F(const LieModel& m, const PhiSpec& phi, const KVector& y) {
  const double a = alpha(m, y);
  if (a == 0.0)
    throw std::domain_error("F: y = 0 is outside the slit tangent bundle");
  return a * phi(beta(m, y) / a);
}

ValidityReport shen_validity(const PhiSpec& phi, double b, int grid_n) {
  if (!(b >= 0.0 && b < 1.0))
    throw std::domain_error("shen_validity: b must lie in [0, 1)");
  if (grid_n < 3) throw std::invalid_argument("shen_validity: grid_n must be >= 3");

  ValidityReport rep;
  rep.b = b;
  rep.grid_n = grid_n;
  const double b2 = b * b;
  double min_phi = std::numeric_limits<double>::infinity();
  double min_cond = min_phi;
  for (int k = 0; k < grid_n; ++k) {
    const double s = b == 0.0 ? 0.0 : -b + 2.0 * b * k / (grid_n - 1);
    const double p = phi(s);
    const double cond = p - s * phi.d1(s) + (b2 - s * s) * phi.d2(s);
    min_phi = std::min(min_phi, p);
    min_cond = std::min(min_cond, cond);
  }
  rep.min_phi = min_phi;
  rep.min_condition = min_cond;
  rep.valid = min_phi > 0.0 && min_cond > 0.0;
  if (phi.family() == PhiFamily::square || phi.family() == PhiFamily::randers_square)
    rep.closed_form_margin = 1.0 - b2;
  rep.near_degenerate = std::min(min_phi, min_cond) < 1e-3;
  return rep;
}

namespace {

/// 1/2 F(y + t*u)^2 as a jet in t at t = 0.
Jet4 half_f2_jet(const LieModel& m, const PhiSpec& phi, const KVector& y,
                 const KVector& u) {
  const Jet4 a2{m.dot(y, y), 2.0 * m.dot(y, u), 2.0 * m.dot(u, u), 0.0, 0.0};
  const Jet4 a = sqrt(a2);
  const Jet4 be{m.dot(m.v(), y), m.dot(m.v(), u), 0.0, 0.0, 0.0};
  const Jet4 f = a * phi.eval_jet(be / a);
  return 0.5 * f * f;
}

double vol_unit_ball(int n) {
  switch (n) {
    case 2: return M_PI;
    case 3: return 4.0 * M_PI / 3.0;
    case 4: return M_PI * M_PI / 2.0;
    default: throw std::domain_error("vol_unit_ball: dimension out of range");
  }
}

}  // namespace

Eigen::MatrixXd fundamental_tensor(const LieModel& m, const PhiSpec& phi,
                                   const KVector& y) {
  const int dk = m.dim_k();
  if (y.size() != dk) throw std::invalid_argument("fundamental_tensor: bad y size");
  if (alpha(m, y) == 0.0)
    throw std::domain_error("fundamental_tensor: y = 0 is outside the slit bundle");
  Eigen::MatrixXd g(dk, dk);
  auto hess_dir = [&](const KVector& u) { return half_f2_jet(m, phi, y, u).d2; };
  for (int i = 0; i < dk; ++i) {
    KVector ei = KVector::Zero(dk);
    ei[i] = 1.0;
    g(i, i) = hess_dir(ei);
    for (int j = i + 1; j < dk; ++j) {
      KVector ej = KVector::Zero(dk);
      ej[j] = 1.0;
      const double plus = hess_dir(ei + ej);
      const double minus = hess_dir(ei - ej);
      g(i, j) = g(j, i) = 0.25 * (plus - minus);
    }
  }
  return g;
}

double distortion(const LieModel& m, const PhiSpec& phi, const KVector& y, int quad_n) {
  const int n = m.dim_k();
  if (n < 2 || n > 4)
    throw std::domain_error("distortion: quadrature supports dim k in [2, 4]");
  if (quad_n < 8) throw std::invalid_argument("distortion: quad_n too small");

  const Eigen::MatrixXd g = fundamental_tensor(m, phi, y);
  const double detg = g.determinant();
  if (!(detg > 0.0)) throw std::domain_error("distortion: metric not positive-definite");

  auto radial = [&](const KVector& u) {
    const double f = F(m, phi, u);
    if (!(f > 0.0)) throw std::domain_error("distortion: F <= 0 on the sphere");
    return std::pow(f, -n);
  };

  // Vol{F<1} = (1/n) * integral of F(u)^{-n} over the Euclidean unit sphere
  double integral = 0.0;
  if (n == 2) {
    const double dth = 2.0 * M_PI / quad_n;
    for (int k = 0; k < quad_n; ++k) {
      const double th = k * dth;
      KVector u(2);
      u << std::cos(th), std::sin(th);
      integral += radial(u) * dth;
    }
  } else if (n == 3) {
    const QuadRule gl = gauss_legendre(quad_n);
    const double dph = 2.0 * M_PI / quad_n;
    for (int a = 0; a < quad_n; ++a) {
      const double c = gl.x[a];  // cos(theta)
      const double st = std::sqrt(std::max(0.0, 1.0 - c * c));
      for (int k = 0; k < quad_n; ++k) {
        const double ph = k * dph;
        KVector u(3);
        u << st * std::cos(ph), st * std::sin(ph), c;
        integral += gl.w[a] * dph * radial(u);
      }
    }
  } else {  // n == 4
    const QuadRule gl = gauss_legendre(quad_n);
    const double dph = 2.0 * M_PI / quad_n;
    for (int a = 0; a < quad_n; ++a) {
      // chi in [0, pi], weight sin^2(chi)
      const double chi = 0.5 * M_PI * (gl.x[a] + 1.0);
      const double wchi = gl.w[a] * 0.5 * M_PI * std::sin(chi) * std::sin(chi);
      for (int bq = 0; bq < quad_n; ++bq) {
        const double c = gl.x[bq];  // cos(theta)
        const double st = std::sqrt(std::max(0.0, 1.0 - c * c));
        for (int k = 0; k < quad_n; ++k) {
          const double ph = k * dph;
          KVector u(4);
          u << std::sin(chi) * st * std::cos(ph), std::sin(chi) * st * std::sin(ph),
              std::sin(chi) * c, std::cos(chi);
          integral += wchi * gl.w[bq] * dph * radial(u);
        }
      }
    }
  }
  const double vol = integral / n;
  const double sigma_f = vol_unit_ball(n) / vol;
  return std::log(std::sqrt(detg) / sigma_f);
}

}  // namespace finsler
