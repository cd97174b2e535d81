#ifndef FINSLER_METRIC_HPP
#define FINSLER_METRIC_HPP

#include <optional>

#include "finsler/lie_model.hpp"
#include "finsler/phi_spec.hpp"

namespace finsler {

/// alpha(y) = sqrt(<y,y>) with the model inner product.
double alpha(const LieModel& m, const KVector& y);

/// beta(y) = <v,y>.
double beta(const LieModel& m, const KVector& y);

/// F(y) = alpha(y) * phi(beta/alpha); throws for y = 0 (slit tangent bundle).
double F(const LieModel& m, const PhiSpec& phi, const KVector& y);

struct ValidityReport {
  bool valid = false;
  double min_phi = 0.0;        // min of phi(s) over the s-grid
  double min_condition = 0.0;  // min of phi - s phi' + (b^2-s^2) phi''
  // 1 - b^2 for the square / randers_square families (condition minimum at s=±b)
  std::optional<double> closed_form_margin;
  bool near_degenerate = false;  // min(min_phi, min_condition) < 1e-3
  double b = 0.0;
  int grid_n = 0;
};

/// Checks the positivity criterion phi > 0 and
/// phi - s phi' + (b^2 - s^2) phi'' > 0 on a uniform s-grid over [-b, b].
ValidityReport shen_validity(const PhiSpec& phi, double b, int grid_n = 1001);

/// Fundamental tensor g_ij = 1/2 d^2(F^2)/dy^i dy^j, computed with
/// second-order directional jets and the polarization identity.
Eigen::MatrixXd fundamental_tensor(const LieModel& m, const PhiSpec& phi,
                                   const KVector& y);

/// Distortion tau(y) = log(sqrt(det g(y)) / sigma_F) where
/// sigma_F = Vol(B^n) / Vol{F < 1}; the unit-ball volume is computed by
/// spherical quadrature of F(u)^{-n}/n (uniform angular grid in dim 2,
/// product Gauss-Legendre in dims 3-4). Requires 2 <= dim k <= 4.
double distortion(const LieModel& m, const PhiSpec& phi, const KVector& y,
                  int quad_n = 512);

}  // namespace finsler

#endif
