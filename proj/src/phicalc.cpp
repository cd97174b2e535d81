#include "finsler/phicalc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "finsler/quadrature.hpp"

namespace finsler {

namespace {

struct QuantityJets {
  Jet4 Q;      // exact through order 4
  Jet4 Qp;     // order 3
  Jet4 Qpp;    // order 2
  Jet4 Delta;  // order 3
  Jet4 Phi;    // order 2
};

QuantityJets quantity_jets(const PhiSpec& phi, const CurvContext& ctx) {
  const Jet4 s = Jet4::variable(ctx.s);
  const Jet4 p = phi.eval_jet(s);
  const Jet4 pp = phi.d1_jet(s);
  const Jet4 w = p - s * pp;  // phi - s phi'
  if (std::abs(w.f) < 1e-14 * (1.0 + std::abs(p.f)))
    throw std::domain_error("quantities: singular context (phi - s phi' ~ 0)");

  QuantityJets q;
  q.Q = pp / w;
  q.Qp = q.Q.derivative_shift();
  q.Qpp = q.Qp.derivative_shift();
  const double b2 = ctx.b * ctx.b;
  const Jet4 b2ms2{b2 - ctx.s * ctx.s, -2.0 * ctx.s, -2.0, 0.0, 0.0};
  q.Delta = 1.0 + s * q.Q + b2ms2 * q.Qp;
  const Jet4 one_sq = 1.0 + s * q.Q;
  q.Phi = (s * q.Qp - q.Q) * (static_cast<double>(ctx.n) * q.Delta + one_sq) -
          b2ms2 * one_sq * q.Qpp;
  return q;
}

double horner(std::initializer_list<double> ascending, double x) {
  double acc = 0.0;
  const double* data = ascending.begin();
  for (std::size_t k = ascending.size(); k-- > 0;) acc = acc * x + data[k];
  return acc;
}

}  // namespace

CurvContext make_context(int n, double b, double s) {
  if (n < 2) throw std::invalid_argument("CurvContext: n must be >= 2");
  if (!(b >= 0.0 && b < 1.0))
    throw std::domain_error("CurvContext: b must lie in [0, 1)");
  if (std::abs(s) > b + 1e-9)
    throw std::domain_error("CurvContext: |s| must not exceed b");
  return {n, b, std::clamp(s, -b, b)};
}

PhiQuantities quantities_generic(const PhiSpec& phi, const CurvContext& ctx) {
  const QuantityJets q = quantity_jets(phi, ctx);
  if (q.Delta.f == 0.0)
    throw std::domain_error("quantities: singular context (Delta = 0)");
  PhiQuantities out;
  out.Q = q.Q.f;
  out.Qp = q.Q.d1;
  out.Qpp = q.Q.d2;
  out.Delta = q.Delta.f;
  out.psi = out.Qp / (2.0 * out.Delta);
  out.Phi = q.Phi.f;
  return out;
}

PhiQuantities quantities_square(const CurvContext& ctx) {
  const double s = ctx.s, b2 = ctx.b * ctx.b;
  const double n = ctx.n;
  const double ms = 1.0 - s;
  const double shen = 1.0 - 3.0 * s * s + 2.0 * b2;
  PhiQuantities out;
  out.Q = 2.0 / ms;
  out.Qp = 2.0 / (ms * ms);
  out.Qpp = 4.0 / (ms * ms * ms);
  out.Delta = shen / (ms * ms);
  out.psi = out.Qp / (2.0 * out.Delta);
  const double num = horner({-(1.0 + n) * (1.0 + 2.0 * b2),
                             2.0 + 2.0 * n + (4.0 * n - 2.0) * b2,
                             3.0 * (n + 1.0),
                             -6.0 * n},
                            s);
  out.Phi = 2.0 * num / (ms * ms * ms * ms);
  return out;
}

PhiQuantities quantities_randers_square(const CurvContext& ctx) {
  const double s = ctx.s, b2 = ctx.b * ctx.b;
  const double n = ctx.n;
  const double ms2 = 1.0 - s * s;
  const double ms2_2 = ms2 * ms2;
  PhiQuantities out;
  out.Q = (2.0 * s + 3.0) / ms2;
  out.Qp = horner({2.0, 6.0, 2.0}, s) / ms2_2;
  out.Qpp = horner({6.0, 12.0, 18.0, 4.0}, s) / (ms2_2 * ms2);
  out.Delta = horner({2.0 * b2 + 1.0, 6.0 * b2 + 3.0, 2.0 * b2 - 2.0, -9.0, -3.0}, s) /
              ms2_2;
  out.psi = out.Qp / (2.0 * out.Delta);
  const double num = horner({-(6.0 * n * b2 + 6.0 * b2 + 3.0 * n + 3.0),
                             -(18.0 * n * b2 + 30.0 * b2 + 9.0 * n + 9.0),
                             12.0 * n * b2 - 60.0 * b2 + 15.0 * n + 15.0,
                             62.0 * n * b2 - 70.0 * b2 + 58.0 * n + 70.0,
                             42.0 * n * b2 - 30.0 * b2 + 3.0 * n + 75.0,
                             8.0 * n * b2 - 4.0 * b2 - 89.0 * n + 43.0,
                             9.0 - 63.0 * n,
                             -12.0 * n},
                            s);
  out.Phi = num / (ms2_2 * ms2_2);
  return out;
}

double t_function(const PhiSpec& phi, const CurvContext& ctx) {
  const double s = ctx.s, b2 = ctx.b * ctx.b;
  const double p = phi(s);
  const double w = p - s * phi.d1(s);
  double wpow = 1.0;
  for (int k = 0; k < ctx.n - 2; ++k) wpow *= w;
  return p * wpow * (w + (b2 - s * s) * phi.d2(s));
}

VolumeFactor volume_factor(const PhiSpec& phi, double b, int n, VolumeForm form,
                           int quad_n) {
  if (!(b >= 0.0 && b < 1.0))
    throw std::domain_error("volume_factor: b must lie in [0, 1)");
  if (n < 2) throw std::invalid_argument("volume_factor: n must be >= 2");
  if (quad_n < 2) throw std::invalid_argument("volume_factor: quad_n too small");

  // a zero of phi(b cos t) inside the range makes the BH integrand singular
  bool pole_in_range = false;
  auto sin_pow = [n](double t) { return std::pow(std::sin(t), n - 2); };
  auto evaluate = [&](int nodes) {
    const double i_sin = integrate_gl(sin_pow, 0.0, M_PI, nodes);
    if (form == VolumeForm::busemann_hausdorff) {
      const double den = integrate_gl(
          [&](double t) {
            const double p = phi(b * std::cos(t));
            if (p <= 0.0) pole_in_range = true;
            return sin_pow(t) / std::pow(p, n);
          },
          0.0, M_PI, nodes);
      return i_sin / den;
    }
    CurvContext ctx{n, b, 0.0};
    const double num = integrate_gl(
        [&](double t) {
          ctx.s = b * std::cos(t);
          return sin_pow(t) * t_function(phi, ctx);
        },
        0.0, M_PI, nodes);
    return num / i_sin;
  };

  constexpr int kMaxNodes = 1 << 14;
  VolumeFactor out;
  int nodes = quad_n;
  double prev = evaluate(nodes);
  out.refinement_gap = std::numeric_limits<double>::infinity();
  while (nodes * 2 <= kMaxNodes) {
    nodes *= 2;
    const double cur = evaluate(nodes);
    out.refinement_gap = std::abs(cur - prev);
    prev = cur;
    if (out.refinement_gap <= 1e-10) break;
  }
  out.value = prev;
  out.nodes_used = nodes;
  out.converged =
      std::isfinite(prev) && !pole_in_range && out.refinement_gap <= 1e-8;
  return out;
}

double phiquant_derivative(const PhiSpec& phi, const CurvContext& ctx, PhiField field,
                           int order) {
  if (order < 1 || order > 2)
    throw std::invalid_argument("phiquant_derivative: order must be 1 or 2");
  const QuantityJets q = quantity_jets(phi, ctx);
  const Jet4 psi = q.Qp / (2.0 * q.Delta);
  const Jet4* jet = nullptr;
  switch (field) {
    case PhiField::Q: jet = &q.Q; break;
    case PhiField::Qp: jet = &q.Qp; break;
    case PhiField::Qpp: jet = &q.Qpp; break;
    case PhiField::Delta: jet = &q.Delta; break;
    case PhiField::psi: jet = &psi; break;
    case PhiField::Phi: jet = &q.Phi; break;
  }
  return order == 1 ? jet->d1 : jet->d2;
}

CurvatureFactor curvature_factor(const PhiSpec& phi, const CurvContext& ctx) {
  const QuantityJets q = quantity_jets(phi, ctx);
  if (q.Delta.f == 0.0)
    throw std::domain_error("curvature_factor: singular context (Delta = 0)");
  const Jet4 w = q.Phi / (2.0 * q.Delta * q.Delta);
  return {w.f, w.d1, w.d2};
}

}  // namespace finsler
