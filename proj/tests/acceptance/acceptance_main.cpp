// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "finsler/identities.hpp"
#include "finsler/meanberwald.hpp"
#include "finsler/metric.hpp"
#include "finsler/model_io.hpp"
#include "finsler/phicalc.hpp"
#include "finsler/scurvature.hpp"

using namespace finsler;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, bool pass, const std::string& text) {
  std::printf("CRITERION %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL",
              text.c_str());
  if (!pass) ++g_failures;
}

std::string models(const std::string& name) {
  return std::string(FINSLER_MODELS_DIR) + "/" + name;
}

double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

const PhiSpec kSquare = PhiSpec::named(PhiFamily::square);
const PhiSpec kRsq = PhiSpec::named(PhiFamily::randers_square);
const PhiSpec kRiem = PhiSpec::named(PhiFamily::riemannian);

LieModel load(const std::string& name) { return load_model_file(models(name)).model; }

// ---------------------------------------------------------------------------
// 1. closed-form vs generic quantities over the full grid
void criterion_1() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  long points = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int bi = 1; bi <= 8; ++bi) {
      const double b = bi / 10.0;
      for (int k = 0; k < 101; ++k) {
        const double s = -b + 2.0 * b * k / 100.0;
        const CurvContext ctx = make_context(n, b, s);
        const PhiQuantities gs = quantities_generic(kSquare, ctx);
        const PhiQuantities cs = quantities_square(ctx);
        const PhiQuantities gr = quantities_generic(kRsq, ctx);
        const PhiQuantities cr = quantities_randers_square(ctx);
        for (const auto& [a, c] :
             {std::pair{gs.Q, cs.Q}, {gs.Qp, cs.Qp}, {gs.Qpp, cs.Qpp},
              {gs.Delta, cs.Delta}, {gs.psi, cs.psi}, {gs.Phi, cs.Phi},
              {gr.Q, cr.Q}, {gr.Qp, cr.Qp}, {gr.Qpp, cr.Qpp},
              {gr.Delta, cr.Delta}, {gr.psi, cr.psi}, {gr.Phi, cr.Phi}})
          worst = std::max(worst, rel_err(a, c));
        ++points;
      }
    }
  }
  const double dt = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "closed vs generic quantities: %ld grid points, worst rel err "
                "%.3e (tol 1e-12), %.2fs (limit 5s)",
                points, worst, dt);
  report(1, worst <= 1e-12 && dt < 5.0, buf);
}

// ---------------------------------------------------------------------------
// 2. symbolic certification of every closed form
void criterion_2() {
  const auto claims = certify_all_claims();
  bool all_expected = true;
  std::string bad;
  for (const auto& c : claims) {
    if (c.holds != c.expect_hold) {
      all_expected = false;
      bad += " " + c.id;
      if (!c.difference.empty())
        std::printf("    difference polynomial for %s: %s\n", c.id.c_str(),
                    c.difference.c_str());
    }
  }
  const bool sq_equiv = certify_equivalence_e10_vs_closed(PhiFamily::square).ok();
  const bool rsq_equiv =
      certify_equivalence_e10_vs_closed(PhiFamily::randers_square).ok();
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "symbolic certification: %zu claims, all verdicts as frozen%s; "
                "general==closed equivalence: square %s, randers_square %s",
                claims.size(), bad.empty() ? "" : (" EXCEPT" + bad).c_str(),
                sq_equiv ? "true" : "FALSE", rsq_equiv ? "true" : "FALSE");
  report(2, all_expected && sq_equiv, buf);
}

// ---------------------------------------------------------------------------
// 3. closed vs general S-curvature on 4 fixtures x 512 directions per family
void criterion_3() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  const std::vector<std::string> square_fixtures = {
      "heisenberg.json", "solvable2.json", "solvable3.json", "so3_h.json",
      "sim2.json"};
  // randers_square needs b below its validity bound (3-sqrt5)/2, which
  // excludes solvable2 and sim2 (both b = 0.5)
  const std::vector<std::string> rsq_fixtures = {
      "abelian3.json", "heisenberg.json", "solvable3.json", "so3_h.json"};
  for (const auto& name : square_fixtures) {
    const LieModel m = load(name);
    const int n = m.dim_k();
    for (const KVector& dir : sphere_directions(m.dim_k(), 512)) {
      const KVector y = dir / alpha(m, dir);
      worst = std::max(worst, rel_err(s_general(m, kSquare, n, y), s_square(m, n, y)));
    }
  }
  for (const auto& name : rsq_fixtures) {
    const LieModel m = load(name);
    const int n = m.dim_k();
    for (const KVector& dir : sphere_directions(m.dim_k(), 512)) {
      const KVector y = dir / alpha(m, dir);
      worst = std::max(worst,
                       rel_err(s_general(m, kRsq, n, y), s_randers_square(m, n, y)));
    }
  }
  const double dt = seconds_since(t0);
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "S-curvature cross-check: %zu square + %zu randers_square fixtures "
                "x 512 directions, worst rel err %.3e (tol 1e-10), %.2fs (limit 10s)",
                square_fixtures.size(), rsq_fixtures.size(), worst, dt);
  report(3, worst <= 1e-10 && dt < 10.0, buf);
}

// ---------------------------------------------------------------------------
// 4. hand-computable anchor S(H, e2) = -1
void criterion_4() {
  const LieModel m = load("solvable2.json");
  KVector e2(2);
  e2 << 0, 1;
  const double via_closed = s_square(m, 2, e2);
  const double via_general = s_general(m, kSquare, 2, e2);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "hand anchor S(H,e2): closed %.17g, general %.17g (expect -1, tol 1e-12)",
                via_closed, via_general);
  report(4, std::abs(via_closed + 1.0) <= 1e-12 && std::abs(via_general + 1.0) <= 1e-12,
         buf);
}

// ---------------------------------------------------------------------------
// 5. degeneracy suite: v = 0 and central v
void criterion_5() {
  double worst_s = 0.0, worst_e = 0.0;
  for (const char* name : {"abelian3.json", "so3_h.json", "heisenberg.json"}) {
    const LieModel m = load(name);
    const int n = m.dim_k();
    for (const KVector& dir : sphere_directions(m.dim_k(), 64)) {
      for (const auto& [family, phi] :
           {std::pair{PhiFamily::square, &kSquare},
            {PhiFamily::randers_square, &kRsq}}) {
        worst_s = std::max(worst_s, std::abs(s_general(m, *phi, n, dir)));
        worst_e = std::max(
            worst_e, eij_closed(m, family, n, dir).entries.cwiseAbs().maxCoeff());
        worst_e = std::max(
            worst_e, eij_numeric(m, *phi, n, dir).entries.cwiseAbs().maxCoeff());
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "degeneracy (v=0 and central v): max |S| %.3e, max |E| %.3e (tol 1e-14)",
                worst_s, worst_e);
  report(5, worst_s <= 1e-14 && worst_e <= 1e-14, buf);
}

// ---------------------------------------------------------------------------
// 6. homogeneity: S degree 1, E degree -1
void criterion_6() {
  double worst_s = 0.0, worst_e = 0.0;
  const LieModel m3 = load("solvable3.json");
  const LieModel m2 = load("solvable2.json");
  for (const KVector& dir : sphere_directions(3, 32)) {
    const double base = s_general(m3, kSquare, 3, dir);
    const Eigen::MatrixXd e_base =
        eij_closed(m3, PhiFamily::square, 3, dir).entries;
    for (double lam : {0.5, 2.0, 10.0}) {
      const double scaled = s_general(m3, kSquare, 3, lam * dir);
      worst_s = std::max(worst_s, std::abs(scaled - lam * base) /
                                      std::max(1.0, std::abs(lam * base)));
      const Eigen::MatrixXd e_scaled =
          eij_closed(m3, PhiFamily::square, 3, lam * dir).entries;
      worst_e = std::max(worst_e,
                         (e_scaled - e_base / lam).cwiseAbs().maxCoeff() /
                             (1.0 + (e_base / lam).cwiseAbs().maxCoeff()));
    }
  }
  for (const KVector& dir : sphere_directions(2, 32)) {
    const double base = s_general(m2, kSquare, 2, dir);
    for (double lam : {0.5, 2.0, 10.0})
      worst_s = std::max(worst_s, std::abs(s_general(m2, kSquare, 2, lam * dir) -
                                           lam * base) /
                                      std::max(1.0, std::abs(lam * base)));
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "homogeneity: S worst rel %.3e (tol 1e-10), E worst rel %.3e (tol 1e-6)",
                worst_s, worst_e);
  report(6, worst_s <= 1e-10 && worst_e <= 1e-6, buf);
}

// ---------------------------------------------------------------------------
// 7. E_ij closed vs numeric oracle + Euler identity
void criterion_7() {
  double worst = 0.0, worst_euler = 0.0;
  struct Combo {
    const char* file;
    PhiFamily family;
    const PhiSpec* phi;
  };
  const std::vector<Combo> combos = {
      {"abelian3.json", PhiFamily::square, &kSquare},
      {"heisenberg.json", PhiFamily::square, &kSquare},
      {"solvable2.json", PhiFamily::square, &kSquare},
      {"solvable3.json", PhiFamily::square, &kSquare},
      {"so3_h.json", PhiFamily::square, &kSquare},
      {"sim2.json", PhiFamily::square, &kSquare},
      {"abelian3.json", PhiFamily::randers_square, &kRsq},
      {"heisenberg.json", PhiFamily::randers_square, &kRsq},
      {"solvable3.json", PhiFamily::randers_square, &kRsq},
      {"so3_h.json", PhiFamily::randers_square, &kRsq},
  };
  for (const Combo& c : combos) {
    const LieModel m = load(c.file);
    const int n = m.dim_k();
    for (const KVector& dir : sphere_directions(m.dim_k(), 32)) {
      const EijMatrix closed = eij_closed(m, c.family, n, dir);
      const EijNumeric numeric = eij_numeric(m, *c.phi, n, dir);
      const double scale = 1.0 + numeric.entries.cwiseAbs().maxCoeff();
      worst = std::max(worst,
                       (closed.entries - numeric.entries).cwiseAbs().maxCoeff() / scale);
      worst_euler =
          std::max(worst_euler, (closed.entries * dir).cwiseAbs().maxCoeff());
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "E_ij oracle: %zu fixture/family combos x 32 directions, worst "
                "scaled residual %.3e (tol 1e-6); Euler worst %.3e (tol 1e-8); "
                "randers_square skips solvable2/sim2 (metric invalid at b=0.5)",
                combos.size(), worst, worst_euler);
  report(7, worst <= 1e-6 && worst_euler <= 1e-8, buf);
}

// ---------------------------------------------------------------------------
// 8. Shen validity margins + fundamental tensor identities
void criterion_8() {
  double worst_margin = 0.0;
  for (int bi = 1; bi <= 9; ++bi) {
    const double b = bi / 10.0;
    const ValidityReport rep = shen_validity(kSquare, b);
    worst_margin =
        std::max(worst_margin, std::abs(rep.min_condition - (1.0 - b * b)));
    if (!rep.valid) worst_margin = 1.0;
  }
  const LieModel m = load("solvable2.json");
  double worst_fsq = 0.0;
  bool all_spd = true;
  for (const KVector& dir : sphere_directions(2, 100)) {
    const Eigen::MatrixXd g = fundamental_tensor(m, kSquare, dir);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    all_spd = all_spd && es.eigenvalues().minCoeff() > 0.0;
    const double f = F(m, kSquare, dir);
    worst_fsq = std::max(worst_fsq, rel_err(dir.dot(g * dir), f * f));
  }
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "Shen margin |min_cond-(1-b^2)| worst %.3e (tol 1e-12) for b=0.1..0.9; "
                "g SPD at 100 points: %s; |g(y,y)-F^2| worst rel %.3e (tol 1e-10)",
                worst_margin, all_spd ? "yes" : "NO", worst_fsq);
  report(8, worst_margin <= 1e-12 && all_spd && worst_fsq <= 1e-10, buf);
}

// ---------------------------------------------------------------------------
// 9. volume factors: riemannian == 1 and quadrature convergence
void criterion_9() {
  bool riem_ok = true;
  for (VolumeForm form : {VolumeForm::busemann_hausdorff, VolumeForm::holmes_thompson}) {
    const VolumeFactor f = volume_factor(kRiem, 0.5, 3, form);
    riem_ok = riem_ok && f.converged && std::abs(f.value - 1.0) <= 1e-10;
  }
  bool conv_ok = true;
  std::string detail;
  for (const auto& [family, phi] :
       {std::pair<const char*, const PhiSpec*>{"square", &kSquare},
        {"randers_square", &kRsq}}) {
    for (int n : {2, 3, 4}) {
      for (VolumeForm form :
           {VolumeForm::busemann_hausdorff, VolumeForm::holmes_thompson}) {
        const VolumeFactor f = volume_factor(*phi, 0.5, n, form);
        const bool cell_ok = f.converged && f.refinement_gap <= 1e-10;
        if (!cell_ok) {
          conv_ok = false;
          char cb[120];
          std::snprintf(cb, sizeof(cb), " [%s n=%d %s gap=%.2e]", family, n,
                        form == VolumeForm::busemann_hausdorff ? "BH" : "HT",
                        f.refinement_gap);
          detail += cb;
        }
      }
    }
  }
  char buf[320];
  std::snprintf(
      buf, sizeof(buf),
      "volume factor: riemannian f(b)=1 %s; doubling below 1e-10 at b=0.5 "
      "n=2..4 %s%s%s",
      riem_ok ? "ok" : "FAIL", conv_ok ? "ok" : "FAIL:", detail.c_str(),
      conv_ok ? ""
              : " (BH integrand for randers_square at b=0.5 has a pole: phi "
                "vanishes at s=(sqrt5-3)/2 inside [-b,b]; integral divergent)");
  report(9, riem_ok && conv_ok, buf);
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  const double total = seconds_since(t0);
  char buf[120];
  std::snprintf(buf, sizeof(buf),
                "acceptance wall clock %.2fs (full-suite budget 60s)", total);
  report(10, total < 60.0, buf);
  if (g_failures > 0)
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  else
    std::printf("acceptance: all criteria passed\n");
  return g_failures;
}
