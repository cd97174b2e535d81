#ifndef FINSLER_MEANBERWALD_HPP
#define FINSLER_MEANBERWALD_HPP

#include "finsler/lie_model.hpp"
#include "finsler/phi_spec.hpp"
#include "finsler/phicalc.hpp"

namespace finsler {

/// First and second y-derivatives of s = beta/alpha in the orthonormal
/// frame at the origin:
///   s_{y^i}     = (b_i alpha - s y_i)/alpha^2
///   s_{y^i y^j} = (-(b_i y_j + b_j y_i) alpha + 3 s y_i y_j
///                  - alpha^2 s delta_ij)/alpha^4
struct SDerivs {
  Eigen::VectorXd first;
  Eigen::MatrixXd second;
};

SDerivs s_derivs(const LieModel& m, const KVector& y);

/// Bracket factor A of the square family and its first two s-derivatives,
/// as closed-form rational expressions (order selects 0, 1 or 2).
double a_factor(const CurvContext& ctx, int order);

/// Bracket factor B of the Randers-changed square family, from jet
/// differentiation of the definitional assembly Phi/(2 Delta^2).
double b_factor(const CurvContext& ctx, int order);

struct EijMatrix {
  Eigen::MatrixXd entries;
  KVector y;
};

/// Mean Berwald curvature E_ij(H,y) assembled from the closed-form
/// expansion: bracket factor W (A or B), its chain-rule y-derivatives
/// through s_{y^i}, and the family Q-factors. Requires an orthonormalized
/// model (the expansion fixes a_ij = delta_ij at the origin).
EijMatrix eij_closed(const LieModel& m, PhiFamily family, int n, const KVector& y);

struct EijNumeric {
  Eigen::MatrixXd entries;
  KVector y;
  double richardson_gap = 0.0;
  bool converged = false;  // false when the two Richardson levels disagree
};

/// E_ij as half the central-difference Hessian of s_general, with one
/// Richardson extrapolation step (h, h/2). h defaults to 1e-4 * alpha(y).
EijNumeric eij_numeric(const LieModel& m, const PhiSpec& phi, int n, const KVector& y,
                       double h = 0.0);

}  // namespace finsler

#endif
