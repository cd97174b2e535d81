#ifndef FINSLER_PHICALC_HPP
#define FINSLER_PHICALC_HPP

#include "finsler/phi_spec.hpp"

namespace finsler {

/// Evaluation point of the auxiliary curvature quantities: manifold
/// dimension n, Riemannian length b of beta, and s = beta/alpha.
struct CurvContext {
  int n = 2;
  double b = 0.0;
  double s = 0.0;
};

/// Builds a context, validating n >= 2, 0 <= b < 1 and |s| <= b
/// (s is clamped to [-b, b] to absorb roundoff from beta/alpha).
CurvContext make_context(int n, double b, double s);

struct PhiQuantities {
  double Q = 0.0;
  double Qp = 0.0;
  double Qpp = 0.0;
  double Delta = 0.0;
  double psi = 0.0;  // Q'/(2 Delta)
  double Phi = 0.0;
};

/// Q = phi'/(phi - s phi'), Delta = 1 + sQ + (b^2-s^2)Q',
/// Phi = (sQ' - Q)(n Delta + 1 + sQ) - (b^2-s^2)(1+sQ)Q'', assembled from
/// order-4 jets of phi at s. Works for any polynomial phi; throws a
/// domain_error when phi - s phi' vanishes (singular context).
PhiQuantities quantities_generic(const PhiSpec& phi, const CurvContext& ctx);

/// Closed forms for phi = 1 + 2s + s^2.
PhiQuantities quantities_square(const CurvContext& ctx);

/// Closed forms for phi = 1 + 3s + s^2.
PhiQuantities quantities_randers_square(const CurvContext& ctx);

/// T(s) = phi (phi - s phi')^{n-2} {(phi - s phi') + (b^2-s^2) phi''}.
double t_function(const PhiSpec& phi, const CurvContext& ctx);

enum class VolumeForm { busemann_hausdorff, holmes_thompson };

struct VolumeFactor {
  double value = 0.0;
  bool converged = false;
  double refinement_gap = 0.0;  // |last - previous| in the doubling ladder
  int nodes_used = 0;
};

/// Volume-form factor f(b) with dV = f(b) dV_alpha, by Gauss-Legendre
/// quadrature of the sin^{n-2} t integrals over [0, pi]:
///   BH: f = (int sin^{n-2}) / (int sin^{n-2} / phi(b cos t)^n)
///   HT: f = (int sin^{n-2} T(b cos t)) / (int sin^{n-2})
/// The node count doubles until successive values agree to 1e-10; the
/// report flags non-convergence when the final gap exceeds 1e-8.
VolumeFactor volume_factor(const PhiSpec& phi, double b, int n, VolumeForm form,
                           int quad_n = 64);

enum class PhiField { Q, Qp, Qpp, Delta, psi, Phi };

/// d^order/ds^order of the chosen quantity, from the same jet assembly
/// (order 1 or 2).
double phiquant_derivative(const PhiSpec& phi, const CurvContext& ctx, PhiField field,
                           int order);

/// W = Phi/(2 Delta^2) and its first two s-derivatives: the scalar factor
/// of the homogeneous S-curvature formula (A for the square family, B for
/// the Randers-changed square family).
struct CurvatureFactor {
  double value = 0.0;
  double ds = 0.0;
  double ds2 = 0.0;
};

CurvatureFactor curvature_factor(const PhiSpec& phi, const CurvContext& ctx);

}  // namespace finsler

#endif
