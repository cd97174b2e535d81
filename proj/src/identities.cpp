#include "finsler/identities.hpp"

#include <stdexcept>

namespace finsler {

namespace {

MPoly C(long v) { return MPoly(v); }
MPoly S() { return MPoly::var(Var::s); }
MPoly B2() { return MPoly::var(Var::b2); }
MPoly N() { return MPoly::var(Var::n); }

/// Polynomial in s with MPoly coefficients, ascending degree.
MPoly in_s(const std::vector<MPoly>& coeffs) {
  MPoly acc;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    acc = acc + coeffs[k] * MPoly::var(Var::s, static_cast<int>(k));
  return acc;
}

// 1 - 3s^2 + 2b2: the shared Shen-condition polynomial of both families.
MPoly shen_poly() { return C(1) - C(3) * S().pow(2) + C(2) * B2(); }

// Delta numerator of the randers_square family (denominator (1-s^2)^2).
MPoly delta_num_rsq() {
  return in_s({C(1) + C(2) * B2(), C(3) + C(6) * B2(), C(2) * B2() - C(2), C(-9), C(-3)});
}

// Bracket-factor numerator shared by the square family's S-curvature closed
// form (and, doubled, by its Phi).
MPoly a_num_square() {
  const MPoly n = N(), b2 = B2();
  return in_s({-(C(1) + n) * (C(1) + C(2) * b2),
               C(2) + C(2) * n + (C(4) * n - C(2)) * b2,
               C(3) * (n + C(1)),
               C(-6) * n});
}

MPoly phi_num_rsq() {
  const MPoly n = N(), b2 = B2();
  return in_s({-(C(6) * n * b2 + C(6) * b2 + C(3) * n + C(3)),
               -(C(18) * n * b2 + C(30) * b2 + C(9) * n + C(9)),
               C(12) * n * b2 - C(60) * b2 + C(15) * n + C(15),
               C(62) * n * b2 - C(70) * b2 + C(58) * n + C(70),
               C(42) * n * b2 - C(30) * b2 + C(3) * n + C(75),
               C(8) * n * b2 - C(4) * b2 - C(89) * n + C(43),
               C(9) - C(63) * n,
               C(-12) * n});
}

MPoly b_num_rsq(bool flip_linear_sign) {
  const MPoly n = N(), b2 = B2();
  const MPoly lin = flip_linear_sign ? C(12) * b2 : C(-12) * b2;
  return in_s({-(C(3) + C(6) * b2 + C(6) * n * b2 + C(3) * n),
               lin,
               C(18) * n * b2 + C(18) * n - C(18) * b2 + C(18),
               C(8) * n * b2 + C(4) * n - C(4) * b2 + C(16),
               C(-27) * n + C(9),
               C(-12) * n});
}

MPoly da_num_square() {
  const MPoly n = N(), b2 = B2();
  return in_s({C(2) + C(2) * b2 - C(4) * b2.pow(2) + C(2) * n + C(8) * n * b2.pow(2) +
                   C(8) * n * b2,
               C(-6) * n - C(12) * n * b2 - C(6) - C(12) * b2,
               C(18) - C(18) * b2,
               C(18) * n + C(18),
               C(-18) * n});
}

MPoly d2a_num_square() {
  const MPoly n = N(), b2 = B2();
  const MPoly inner =
      in_s({-C(1) - n - C(4) * n * b2 - C(4) * b2 - C(4) * n * b2.pow(2) - C(4) * b2.pow(2),
            C(12) * b2 + C(6) * n + C(24) * n * b2 - C(24) * b2.pow(2) +
                C(24) * n * b2.pow(2) + C(12),
            C(-6) * n - C(12) * n * b2 - C(12) * b2 - C(6),
            C(-24) * n * b2 - C(36) * b2 + C(36) - C(12) * n,
            C(27) + C(27) * n,
            C(-18) * n});
  return C(6) * inner;
}

MPoly db_num_rsq() {
  const MPoly n = N(), b2 = B2();
  const MPoly b4 = b2.pow(2);
  return in_s({C(9) + C(24) * b2 + C(36) * n * b4 + C(12) * b4 + C(36) * n * b2 + C(9) * n,
               C(96) * n * b4 + C(6) * n + C(6) - C(48) * b4 - C(12) * b2 + C(60) * n * b2,
               C(-228) * b2 + C(156) * n * b4 - C(108) * b4 - C(33) - C(60) * n * b2 -
                   C(69) * n,
               C(-30) * n + C(186) + C(96) * n * b4 - C(408) * b2 - C(120) * n * b2 -
                   C(48) * b4,
               C(-488) * b2 + C(631) - C(80) * n * b2 + C(199) * n - C(8) * b4 +
                   C(16) * n * b4,
               C(-252) * b2 + C(90) * n - C(36) * n * b2 + C(522),
               C(-207) * n - C(36) * b2 + C(225),
               C(-162) * n + C(54),
               C(-36) * n});
}

MPoly d2b_num_rsq() {
  const MPoly n = N(), b2 = B2();
  const MPoly b4 = b2.pow(2), b6 = b2.pow(3);
  return in_s(
      {C(-24) - C(24) * n - C(120) * n * b6 - C(120) * b6 - C(126) * b2 -
           C(216) * n * b4 - C(126) * n * b2 - C(216) * b4,
       C(-90) * n * b2 - C(15) * n - C(162) * b2 - C(180) * n * b4 + C(21) -
           C(468) * b4 - C(120) * n * b6 - C(120) * b6,
       C(1476) * n * b4 + C(1368) * n * b2 + C(720) * b2 + C(315) * n - C(1116) * b4 +
           C(639),
       C(2634) * n * b2 + C(3960) * n * b4 + C(1700) - C(4680) * b4 + C(40) * b6 +
           C(40) * n * b6 + C(332) * n + C(402) * b2,
       C(3132) - C(7560) * b4 - C(1080) * n + C(5400) * n * b4 - C(3834) * b2 +
           C(54) * n * b2,
       C(8706) - C(4884) * b4 - C(4254) * n * b2 - C(1122) * n - C(8574) * b2 +
           C(3756) * n * b4,
       C(15894) - C(10188) * b2 + C(1260) * n * b4 + C(1638) * n - C(1332) * b4 -
           C(6300) * n * b2,
       C(-144) * b4 - C(6570) * b2 + C(144) * n * b4 + C(1440) * n - C(4338) * n * b2 +
           C(13356),
       C(5940) - C(2052) * b2 - C(1404) * n * b2 - C(1512) * n,
       C(1593) - C(216) * b2 - C(144) * n * b2 - C(1935) * n,
       C(243) - C(729) * n,
       C(-108) * n});
}

ClaimResult make_claim(std::string id, std::string location, const RatFunc& closed,
                       const RatFunc& definitional, bool expect_hold = true) {
  ClaimResult r;
  r.id = std::move(id);
  r.location = std::move(location);
  r.expect_hold = expect_hold;
  const MPoly diff = rf_difference(closed, definitional);
  r.holds = diff.is_zero();
  if (!r.holds) r.difference = diff.str();
  return r;
}

}  // namespace

SymbolicQuantities build_quantities_symbolic(const std::vector<Rational>& phi_coeffs) {
  MPoly phi;
  for (std::size_t k = 0; k < phi_coeffs.size(); ++k)
    phi = phi + MPoly::term(phi_coeffs[k], static_cast<int>(k), 0, 0);
  const MPoly phip = phi.derivative(Var::s);
  const MPoly w = phi - S() * phip;  // phi - s*phi'
  if (w.is_zero())
    throw std::domain_error("build_quantities_symbolic: phi - s*phi' vanishes identically");

  SymbolicQuantities q;
  q.Q = RatFunc(phip, w);
  q.Qp = q.Q.derivative_s();
  q.Qpp = q.Qp.derivative_s();

  const RatFunc s_rf{RatFunc(S())};
  const RatFunc b2_minus_s2{RatFunc(B2() - S().pow(2))};
  const RatFunc n_rf{RatFunc(N())};
  const RatFunc one{RatFunc(1L)};

  q.Delta = one + s_rf * q.Q + b2_minus_s2 * q.Qp;
  q.psi = q.Qp / (RatFunc(2L) * q.Delta);
  const RatFunc one_sQ = one + s_rf * q.Q;
  q.Phi = (s_rf * q.Qp - q.Q) * (n_rf * q.Delta + one_sQ) - b2_minus_s2 * one_sQ * q.Qpp;
  q.W = q.Phi / (RatFunc(2L) * q.Delta * q.Delta);
  q.Wp = q.W.derivative_s();
  q.Wpp = q.Wp.derivative_s();
  return q;
}

SymbolicQuantities build_quantities_symbolic(PhiFamily family) {
  return build_quantities_symbolic(PhiSpec::named(family).coeffs());
}

RatFunc closed_factor_square() { return RatFunc(a_num_square(), shen_poly().pow(2)); }

RatFunc closed_factor_randers_square() {
  return RatFunc(b_num_rsq(false), C(2) * shen_poly() * delta_num_rsq());
}

RatFunc closed_q_square() { return RatFunc(C(2), C(1) - S()); }

RatFunc closed_q_randers_square() {
  return RatFunc(C(2) * S() + C(3), C(1) - S().pow(2));
}

std::vector<ClaimResult> certify_all_claims() {
  std::vector<ClaimResult> out;

  // Square family.
  {
    const auto q = build_quantities_symbolic(PhiFamily::square);
    const MPoly one_minus_s = C(1) - S();
    out.push_back(make_claim("square.Q", "phicalc::quantities_square", closed_q_square(), q.Q));
    out.push_back(make_claim("square.Qp", "phicalc::quantities_square",
                             RatFunc(C(2), one_minus_s.pow(2)), q.Qp));
    out.push_back(make_claim("square.Qpp", "phicalc::quantities_square",
                             RatFunc(C(4), one_minus_s.pow(3)), q.Qpp));
    out.push_back(make_claim("square.Delta", "phicalc::quantities_square",
                             RatFunc(shen_poly(), one_minus_s.pow(2)), q.Delta));
    out.push_back(make_claim("square.Phi", "phicalc::quantities_square",
                             RatFunc(C(2) * a_num_square(), one_minus_s.pow(4)), q.Phi));
    out.push_back(make_claim("square.A", "scurvature::s_square, meanberwald::a_factor",
                             closed_factor_square(), q.W));
    out.push_back(make_claim("square.dA", "meanberwald::a_factor",
                             RatFunc(da_num_square(), shen_poly().pow(3)), q.Wp));
    out.push_back(make_claim("square.d2A", "meanberwald::a_factor",
                             RatFunc(d2a_num_square(), shen_poly().pow(4)), q.Wpp));
  }

  // Randers-changed square family.
  {
    const auto q = build_quantities_symbolic(PhiFamily::randers_square);
    const MPoly one_minus_s2 = C(1) - S().pow(2);
    out.push_back(make_claim("randers_square.Q", "phicalc::quantities_randers_square",
                             closed_q_randers_square(), q.Q));
    out.push_back(make_claim("randers_square.Qp", "phicalc::quantities_randers_square",
                             RatFunc(in_s({C(2), C(6), C(2)}), one_minus_s2.pow(2)), q.Qp));
    out.push_back(make_claim("randers_square.Qpp", "phicalc::quantities_randers_square",
                             RatFunc(in_s({C(6), C(12), C(18), C(4)}), one_minus_s2.pow(3)),
                             q.Qpp));
    out.push_back(make_claim("randers_square.Delta", "phicalc::quantities_randers_square",
                             RatFunc(delta_num_rsq(), one_minus_s2.pow(2)), q.Delta));
    out.push_back(make_claim("randers_square.Phi", "phicalc::quantities_randers_square",
                             RatFunc(phi_num_rsq(), one_minus_s2.pow(4)), q.Phi));
    out.push_back(make_claim("randers_square.B", "scurvature::s_randers_square",
                             closed_factor_randers_square(), q.W));
    out.push_back(make_claim(
        "randers_square.B_sign_probe",
        "sign probe: +12*b2*s variant of the bracket factor (expected false)",
        RatFunc(b_num_rsq(true), C(2) * shen_poly() * delta_num_rsq()), q.W,
        /*expect_hold=*/false));
    out.push_back(make_claim(
        "randers_square.dB", "cross-check of meanberwald::b_factor jet derivatives",
        RatFunc(db_num_rsq(), C(2) * shen_poly() * delta_num_rsq().pow(2)), q.Wp));
    out.push_back(make_claim(
        "randers_square.d2B", "cross-check of meanberwald::b_factor jet derivatives",
        RatFunc(d2b_num_rsq(), shen_poly() * delta_num_rsq().pow(3)), q.Wpp));
  }

  // Specialized S-curvature route == general homogeneous route.
  for (PhiFamily fam : {PhiFamily::square, PhiFamily::randers_square}) {
    const auto v = certify_equivalence_e10_vs_closed(fam);
    const bool is_sq = fam == PhiFamily::square;
    ClaimResult r;
    r.id = is_sq ? "equivalence.square" : "equivalence.randers_square";
    r.location = is_sq ? "scurvature::s_square vs scurvature::s_general"
                       : "scurvature::s_randers_square vs scurvature::s_general";
    r.holds = v.ok();
    if (!v.factor_ok) r.difference = "factor: " + v.factor_diff;
    if (!v.q_ok) r.difference += (r.difference.empty() ? "" : "; ") + ("Q: " + v.q_diff);
    out.push_back(std::move(r));
  }
  return out;
}

EquivalenceVerdict certify_equivalence_e10_vs_closed(PhiFamily family) {
  RatFunc closed_factor, closed_q;
  switch (family) {
    case PhiFamily::square:
      closed_factor = closed_factor_square();
      closed_q = closed_q_square();
      break;
    case PhiFamily::randers_square:
      closed_factor = closed_factor_randers_square();
      closed_q = closed_q_randers_square();
      break;
    case PhiFamily::riemannian: {
      // Phi vanishes identically, so both routes are zero.
      const auto q = build_quantities_symbolic(PhiFamily::riemannian);
      EquivalenceVerdict v;
      v.factor_ok = q.W.is_zero() && q.Phi.is_zero();
      v.q_ok = q.Q.is_zero();
      return v;
    }
    default:
      throw std::invalid_argument("certify_equivalence: no closed form for this family");
  }
  const auto q = build_quantities_symbolic(family);
  EquivalenceVerdict v;
  const MPoly fd = rf_difference(closed_factor, q.W);
  const MPoly qd = rf_difference(closed_q, q.Q);
  v.factor_ok = fd.is_zero();
  v.q_ok = qd.is_zero();
  if (!v.factor_ok) v.factor_diff = fd.str();
  if (!v.q_ok) v.q_diff = qd.str();
  return v;
}

}  // namespace finsler
