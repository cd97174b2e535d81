#include "finsler/meanberwald.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "finsler/metric.hpp"
#include "finsler/scurvature.hpp"

namespace finsler {

namespace {

double horner(std::initializer_list<double> ascending, double x) {
  double acc = 0.0;
  const double* data = ascending.begin();
  for (std::size_t k = ascending.size(); k-- > 0;) acc = acc * x + data[k];
  return acc;
}

void require_orthonormal(const LieModel& m) {
  if (!m.is_orthonormal(1e-9))
    throw std::domain_error(
        "mean Berwald curvature: model must be orthonormalized first");
}

}  // namespace

SDerivs s_derivs(const LieModel& m, const KVector& y) {
  require_orthonormal(m);
  const int dk = m.dim_k();
  if (y.size() != dk) throw std::invalid_argument("s_derivs: bad y size");
  const double a = y.norm();
  if (a == 0.0) throw std::domain_error("s_derivs: y = 0");
  const KVector& b = m.v();
  const double s = b.dot(y) / a;
  SDerivs out;
  out.first = (b * a - s * y) / (a * a);
  out.second.resize(dk, dk);
  const double a4 = a * a * a * a;
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) {
      double val = -(b[i] * y[j] + b[j] * y[i]) * a + 3.0 * s * y[i] * y[j];
      if (i == j) val -= a * a * s;
      out.second(i, j) = val / a4;
    }
  return out;
}

double a_factor(const CurvContext& ctx, int order) {
  const double s = ctx.s, b2 = ctx.b * ctx.b, n = ctx.n;
  const double shen = 1.0 - 3.0 * s * s + 2.0 * b2;
  switch (order) {
    case 0: {
      const double num = horner({-(1.0 + n) * (1.0 + 2.0 * b2),
                                 2.0 + 2.0 * n + (4.0 * n - 2.0) * b2,
                                 3.0 * (n + 1.0),
                                 -6.0 * n},
                                s);
      return num / (shen * shen);
    }
    case 1: {
      const double num = horner(
          {2.0 + 2.0 * b2 - 4.0 * b2 * b2 + 2.0 * n + 8.0 * n * b2 * b2 + 8.0 * n * b2,
           -6.0 * n - 12.0 * n * b2 - 6.0 - 12.0 * b2,
           18.0 - 18.0 * b2,
           18.0 * n + 18.0,
           -18.0 * n},
          s);
      return num / (shen * shen * shen);
    }
    case 2: {
      const double num = horner(
          {-1.0 - n - 4.0 * n * b2 - 4.0 * b2 - 4.0 * n * b2 * b2 - 4.0 * b2 * b2,
           12.0 * b2 + 6.0 * n + 24.0 * n * b2 - 24.0 * b2 * b2 + 24.0 * n * b2 * b2 +
               12.0,
           -6.0 * n - 12.0 * n * b2 - 12.0 * b2 - 6.0,
           -24.0 * n * b2 - 36.0 * b2 + 36.0 - 12.0 * n,
           27.0 + 27.0 * n,
           -18.0 * n},
          s);
      return 6.0 * num / (shen * shen * shen * shen);
    }
    default:
      throw std::invalid_argument("a_factor: order must be 0, 1 or 2");
  }
}

double b_factor(const CurvContext& ctx, int order) {
  static const PhiSpec rsq = PhiSpec::named(PhiFamily::randers_square);
  const CurvatureFactor w = curvature_factor(rsq, ctx);
  switch (order) {
    case 0: return w.value;
    case 1: return w.ds;
    case 2: return w.ds2;
    default: throw std::invalid_argument("b_factor: order must be 0, 1 or 2");
  }
}

EijMatrix eij_closed(const LieModel& m, PhiFamily family, int n, const KVector& y) {
  require_orthonormal(m);
  const int dk = m.dim_k();
  if (y.size() != dk) throw std::invalid_argument("eij_closed: bad y size");
  const double a = y.norm();
  if (a == 0.0) throw std::domain_error("eij_closed: y = 0");

  const double b = m.b();
  const double s = std::clamp(m.v().dot(y) / a, -b, b);
  const CurvContext ctx = make_context(n, b, s);

  double w, wp, wpp, q, qp, qpp;
  if (family == PhiFamily::square) {
    w = a_factor(ctx, 0);
    wp = a_factor(ctx, 1);
    wpp = a_factor(ctx, 2);
    const auto quant = quantities_square(ctx);
    q = quant.Q;
    qp = quant.Qp;
    qpp = quant.Qpp;
  } else if (family == PhiFamily::randers_square) {
    w = b_factor(ctx, 0);
    wp = b_factor(ctx, 1);
    wpp = b_factor(ctx, 2);
    const auto quant = quantities_randers_square(ctx);
    q = quant.Q;
    qp = quant.Qp;
    qpp = quant.Qpp;
  } else {
    throw std::invalid_argument("eij_closed: family must be square or randers_square");
  }

  const SDerivs sd = s_derivs(m, y);
  const KVector bvy = m.bracket_k(m.v(), y);
  const double p_yy = bvy.dot(y);   // <[v,y]_k, y>
  const double p_yv = bvy.dot(m.v());
  std::vector<KVector> bve(dk);
  for (int i = 0; i < dk; ++i) {
    KVector ei = KVector::Zero(dk);
    ei[i] = 1.0;
    bve[i] = m.bracket_k(m.v(), ei);  // [v, e_i]_k
  }

  const double a2 = a * a, a3 = a2 * a, a5 = a3 * a2;
  Eigen::VectorXd dW(dk);          // dW/dy^i = W' s_{y^i}
  Eigen::VectorXd p2(dk), p4(dk);  // <[v,e_i],y> + <[v,y],e_i>; <[v,e_i],v>
  for (int i = 0; i < dk; ++i) {
    dW[i] = wp * sd.first[i];
    p2[i] = bve[i].dot(y) + bvy[i];
    p4[i] = bve[i].dot(m.v());
  }

  EijMatrix out;
  out.y = y;
  out.entries.resize(dk, dk);
  for (int i = 0; i < dk; ++i)
    for (int j = i; j < dk; ++j) {
      const double d2w = wpp * sd.first[i] * sd.first[j] + wp * sd.second(i, j);
      const double p5 = bve[j][i] + bve[i][j];  // <[v,e_j],e_i> + <[v,e_i],e_j>
      double e = (d2w / a - y[i] * dW[j] / a3 - y[j] * dW[i] / a3 -
                  (i == j ? w / a3 : 0.0) + 3.0 * w * y[i] * y[j] / a5) *
                 p_yy;
      e += (dW[j] / a - w * y[j] / a3) * p2[i];
      e += (dW[i] / a - w * y[i] / a3) * p2[j];
      e += w / a * p5;
      e += (q * d2w + qp * sd.first[i] * dW[j] + qp * sd.first[j] * dW[i] +
            qpp * w * sd.first[i] * sd.first[j] + qp * w * sd.second(i, j)) *
           p_yv;
      e += (q * dW[j] + qp * w * sd.first[j]) * p4[i];
      e += (q * dW[i] + qp * w * sd.first[i]) * p4[j];
      out.entries(i, j) = out.entries(j, i) = 0.5 * e;
    }
  return out;
}

EijNumeric eij_numeric(const LieModel& m, const PhiSpec& phi, int n, const KVector& y,
                       double h) {
  const int dk = m.dim_k();
  if (y.size() != dk) throw std::invalid_argument("eij_numeric: bad y size");
  const double a = alpha(m, y);
  if (a == 0.0) throw std::domain_error("eij_numeric: y = 0");
  if (h <= 0.0) h = 1e-4 * a;

  auto hessian = [&](double step) {
    Eigen::MatrixXd hess(dk, dk);
    const double s0 = s_general(m, phi, n, y);
    for (int i = 0; i < dk; ++i) {
      KVector ei = KVector::Zero(dk);
      ei[i] = step;
      hess(i, i) = (s_general(m, phi, n, y + ei) - 2.0 * s0 +
                    s_general(m, phi, n, y - ei)) /
                   (step * step);
      for (int j = i + 1; j < dk; ++j) {
        KVector ej = KVector::Zero(dk);
        ej[j] = step;
        const double pp = s_general(m, phi, n, y + ei + ej);
        const double pm = s_general(m, phi, n, y + ei - ej);
        const double mp = s_general(m, phi, n, y - ei + ej);
        const double mm = s_general(m, phi, n, y - ei - ej);
        hess(i, j) = hess(j, i) = (pp - pm - mp + mm) / (4.0 * step * step);
      }
    }
    return hess;
  };

  const Eigen::MatrixXd e1 = 0.5 * hessian(h);
  const Eigen::MatrixXd e2 = 0.5 * hessian(0.5 * h);
  EijNumeric out;
  out.y = y;
  out.entries = (4.0 * e2 - e1) / 3.0;
  out.entries = 0.5 * (out.entries + out.entries.transpose()).eval();
  out.richardson_gap = (e2 - e1).cwiseAbs().maxCoeff();
  out.converged =
      out.richardson_gap <= 1e-4 * (1.0 + out.entries.cwiseAbs().maxCoeff());
  return out;
}

}  // namespace finsler
