#ifndef FINSLER_IDENTITIES_HPP
#define FINSLER_IDENTITIES_HPP

#include <vector>

#include "finsler/phi_spec.hpp"
#include "finsler/ratfunc.hpp"

namespace finsler {

/// The Cheng-Shen auxiliary quantities as exact rational functions of
/// (s, b2, n), built by formal differentiation from the definitional
/// assembly. W = Phi/(2*Delta^2) is the scalar factor multiplying the
/// bracket terms in the homogeneous S-curvature formula.
struct SymbolicQuantities {
  RatFunc Q, Qp, Qpp;
  RatFunc Delta, psi, Phi;
  RatFunc W, Wp, Wpp;
};

/// Builds the quantities from an exact polynomial phi (ascending coeffs).
/// Throws if phi - s*phi' is identically zero (degenerate phi).
SymbolicQuantities build_quantities_symbolic(const std::vector<Rational>& phi_coeffs);
SymbolicQuantities build_quantities_symbolic(PhiFamily family);

/// One certified identity: a closed-form expression used somewhere in the
/// numeric fast paths, checked by cross-multiplication against the
/// definitional assembly. `expect_hold` records the suite's anticipated
/// verdict (the sign probe is expected to fail by construction).
struct ClaimResult {
  std::string id;
  std::string location;   // which library function relies on the closed form
  bool holds = false;
  bool expect_hold = true;
  std::string difference; // canonical difference polynomial when !holds
};

/// Certifies every closed form hard-coded in phicalc/scurvature/meanberwald,
/// for all dimensions n and all (s, b2) at once.
std::vector<ClaimResult> certify_all_claims();

/// Verdict that the specialized S-curvature formula (closed bracket factor
/// times the family Q factor) equals the general homogeneous formula.
struct EquivalenceVerdict {
  bool factor_ok = false;  // closed bracket factor == Phi/(2*Delta^2)
  bool q_ok = false;       // closed inline factor == Q
  std::string factor_diff;
  std::string q_diff;
  bool ok() const { return factor_ok && q_ok; }
};

EquivalenceVerdict certify_equivalence_e10_vs_closed(PhiFamily family);

/// Closed-form bracket factors as exact rational functions (the expressions
/// the fast numeric paths use); exposed for the consistency tests.
RatFunc closed_factor_square();          // A(s, b2, n)
RatFunc closed_factor_randers_square();  // B(s, b2, n)
RatFunc closed_q_square();               // 2/(1-s)
RatFunc closed_q_randers_square();       // (2s+3)/(1-s^2)

}  // namespace finsler

#endif
