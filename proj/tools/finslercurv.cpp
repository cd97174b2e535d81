// finslercurv: validation, S-curvature, mean Berwald curvature, auxiliary
// quantities, exact identity certification and volume factors for reductive
// homogeneous spaces with square / Randers-changed square metrics.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "finsler/identities.hpp"
#include "finsler/meanberwald.hpp"
#include "finsler/metric.hpp"
#include "finsler/model_io.hpp"
#include "finsler/phicalc.hpp"
#include "finsler/scurvature.hpp"

using nlohmann::json;
using namespace finsler;

namespace {

bool use_color() {
  return isatty(fileno(stdout)) && std::getenv("FINSLER_NO_COLOR") == nullptr;
}

std::string mark(bool ok) {
  if (!use_color()) return ok ? "ok" : "FAIL";
  return ok ? "\x1b[32mok\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

PhiSpec resolve_phi(const std::string& phi_arg, const std::optional<PhiSpec>& from_model) {
  if (!phi_arg.empty()) {
    if (phi_arg.front() == '@') return load_phi_file(phi_arg.substr(1));
    return PhiSpec::named(phi_arg);
  }
  if (from_model) return *from_model;
  return PhiSpec::named(PhiFamily::square);
}

json validity_json(const ValidityReport& rep) {
  json j;
  j["valid"] = rep.valid;
  j["min_phi"] = rep.min_phi;
  j["min_condition"] = rep.min_condition;
  j["near_degenerate"] = rep.near_degenerate;
  j["b"] = rep.b;
  j["grid_n"] = rep.grid_n;
  if (rep.closed_form_margin) j["closed_form_margin"] = *rep.closed_form_margin;
  return j;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json vector_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

int cmd_validate(const std::string& model_path, const std::string& phi_arg,
                 int grid_n, const std::string& out_path) {
  const ModelFile mf = load_model_file(model_path);
  const PhiSpec phi = resolve_phi(phi_arg, mf.phi);
  const ValidationReport& rep = mf.model.validation();

  json j;
  j["model"] = model_path;
  j["b"] = rep.b;
  j["phi"] = phi.family_name();
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  bool metric_ok = false;
  std::string metric_detail;
  if (rep.b < 1.0) {
    const ValidityReport vr = shen_validity(phi, rep.b, grid_n);
    metric_ok = vr.valid;
    j["shen_validity"] = validity_json(vr);
  } else {
    metric_detail = "norm bound violated: b >= 1";
  }
  json metric_check;
  metric_check["name"] = "shen_validity";
  metric_check["pass"] = metric_ok;
  if (!metric_detail.empty()) metric_check["detail"] = metric_detail;
  checks.push_back(metric_check);
  j["checks"] = checks;
  j["notes"] = rep.notes;
  const bool all = rep.all_pass() && metric_ok;
  j["all_pass"] = all;
  emit(j.dump(2) + "\n", out_path);
  return all ? 0 : 1;
}

int cmd_scurv(const std::string& model_path, const std::string& phi_arg, int n_override,
              int samples, unsigned seed, double tol, const std::string& format,
              const std::string& out_path) {
  const ModelFile mf = load_model_file(model_path);
  const LieModel& m = mf.model;
  if (!m.algebra_valid())
    throw std::domain_error("model failed algebraic validation; run `validate`");
  const PhiSpec phi = resolve_phi(phi_arg, mf.phi);
  const int n = n_override > 0 ? n_override : m.dim_k();

  const ValidityReport vr = shen_validity(phi, m.b());
  if (!vr.valid)
    throw std::domain_error("metric invalid at b=" + fmt_double(m.b()) +
                            " (min_phi=" + fmt_double(vr.min_phi) +
                            ", min_condition=" + fmt_double(vr.min_condition) + ")");

  const bool has_closed =
      phi.family() == PhiFamily::square || phi.family() == PhiFamily::randers_square;
  std::vector<SCurvatureSample> rows;
  for (const KVector& dir : sphere_directions(m.dim_k(), samples, seed)) {
    SCurvatureSample sample;
    sample.y = dir / alpha(m, dir);
    sample.s_general = s_general(m, phi, n, sample.y);
    if (has_closed) {
      sample.s_closed = phi.family() == PhiFamily::square
                            ? s_square(m, n, sample.y)
                            : s_randers_square(m, n, sample.y);
      sample.residual = std::abs(sample.s_general - sample.s_closed);
    }
    rows.push_back(std::move(sample));
  }
  const IsotropyReport iso = isotropy_classify(m, phi, n, samples, tol);

  json summary;
  summary["model"] = model_path;
  summary["phi"] = phi.family_name();
  summary["n"] = n;
  summary["samples"] = samples;
  summary["verdict"] =
      iso.verdict == IsotropyVerdict::vanishing ? "vanishing" : "non-vanishing";
  summary["max_abs_s"] = iso.max_abs_s;
  summary["c_fit"] = iso.c_fit;
  summary["c_residual"] = iso.c_residual;
  summary["s_at_v"] = iso.s_at_v;
  double max_res = 0.0;
  for (const auto& r : rows) max_res = std::max(max_res, r.residual);
  if (has_closed) summary["max_route_residual"] = max_res;

  if (format == "csv") {
    std::ostringstream csv;
    for (int i = 0; i < rows.front().y.size(); ++i) csv << "y" << i << ",";
    csv << "s_general,s_closed,residual\n";
    for (const auto& r : rows) {
      for (int i = 0; i < r.y.size(); ++i) csv << fmt_double(r.y[i]) << ",";
      csv << fmt_double(r.s_general) << ",";
      if (has_closed)
        csv << fmt_double(r.s_closed) << "," << fmt_double(r.residual);
      else
        csv << ",";
      csv << "\n";
    }
    emit(csv.str(), out_path);
    std::cout << summary.dump(2) << "\n";  // verdict always lands on stdout
  } else {
    json rows_json = json::array();
    for (const auto& r : rows) {
      json rj;
      rj["y"] = vector_json(r.y);
      rj["s_general"] = r.s_general;
      if (has_closed) {
        rj["s_closed"] = r.s_closed;
        rj["residual"] = r.residual;
      }
      rows_json.push_back(rj);
    }
    json full;
    full["summary"] = summary;
    full["rows"] = rows_json;
    emit(full.dump(2) + "\n", out_path);
  }
  return 0;
}

int cmd_eij(const std::string& model_path, const std::string& family_name,
            const std::string& y_arg, int n_override, double h,
            const std::string& format, const std::string& out_path) {
  const ModelFile mf = load_model_file(model_path);
  if (!mf.model.algebra_valid())
    throw std::domain_error("model failed algebraic validation; run `validate`");
  const PhiSpec phi = PhiSpec::named(family_name);
  if (phi.family() != PhiFamily::square && phi.family() != PhiFamily::randers_square)
    throw std::domain_error("eij: family must be square or randers_square");

  auto [model, cob] = mf.model.orthonormalize();
  const int n = n_override > 0 ? n_override : model.dim_k();

  std::vector<double> y_vals;
  std::stringstream ss(y_arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) y_vals.push_back(std::stod(tok));
  if (static_cast<int>(y_vals.size()) != mf.model.dim_k())
    throw std::domain_error("eij: y must have dim_k components");
  KVector y_orig(mf.model.dim_k());
  for (int i = 0; i < y_orig.size(); ++i) y_orig[i] = y_vals[i];
  // original coordinates -> orthonormal frame
  const KVector y = cob.inverse() * y_orig;

  const EijMatrix closed = eij_closed(model, phi.family(), n, y);
  const EijNumeric numeric = eij_numeric(model, phi, n, y, h);
  const double max_residual =
      (closed.entries - numeric.entries).cwiseAbs().maxCoeff();

  if (format == "csv") {
    std::ostringstream csv;
    csv << "i,j,e_closed,e_numeric\n";
    for (int i = 0; i < closed.entries.rows(); ++i)
      for (int j = 0; j < closed.entries.cols(); ++j)
        csv << i << "," << j << "," << fmt_double(closed.entries(i, j)) << ","
            << fmt_double(numeric.entries(i, j)) << "\n";
    emit(csv.str(), out_path);
  } else {
    json j;
    j["model"] = model_path;
    j["family"] = family_name;
    j["n"] = n;
    j["y"] = vector_json(y);
    j["orthonormalized"] = !mf.model.is_orthonormal(0.0);
    j["E_closed"] = matrix_json(closed.entries);
    j["E_numeric"] = matrix_json(numeric.entries);
    j["max_residual"] = max_residual;
    j["richardson_converged"] = numeric.converged;
    emit(j.dump(2) + "\n", out_path);
  }
  return 0;
}

int cmd_phiquant(const std::string& phi_arg, double s, double b, int n,
                 const std::string& out_path) {
  const PhiSpec phi = resolve_phi(phi_arg, std::nullopt);
  const CurvContext ctx = make_context(n, b, s);
  const PhiQuantities gen = quantities_generic(phi, ctx);

  json j;
  j["phi"] = phi.family_name();
  j["n"] = n;
  j["b"] = b;
  j["s"] = ctx.s;
  json gj;
  gj["Q"] = gen.Q;
  gj["Qp"] = gen.Qp;
  gj["Qpp"] = gen.Qpp;
  gj["Delta"] = gen.Delta;
  gj["psi"] = gen.psi;
  gj["Phi"] = gen.Phi;
  j["generic"] = gj;
  if (phi.family() == PhiFamily::square || phi.family() == PhiFamily::randers_square) {
    const PhiQuantities cl = phi.family() == PhiFamily::square
                                 ? quantities_square(ctx)
                                 : quantities_randers_square(ctx);
    json cj;
    cj["Q"] = cl.Q;
    cj["Qp"] = cl.Qp;
    cj["Qpp"] = cl.Qpp;
    cj["Delta"] = cl.Delta;
    cj["psi"] = cl.psi;
    cj["Phi"] = cl.Phi;
    j["closed"] = cj;
    double max_rel = 0.0;
    auto rel = [](double a, double c) {
      return std::abs(a - c) / std::max({1.0, std::abs(a), std::abs(c)});
    };
    max_rel = std::max({rel(gen.Q, cl.Q), rel(gen.Qp, cl.Qp), rel(gen.Qpp, cl.Qpp),
                        rel(gen.Delta, cl.Delta), rel(gen.psi, cl.psi),
                        rel(gen.Phi, cl.Phi)});
    j["max_route_residual"] = max_rel;
  }
  j["T"] = t_function(phi, ctx);
  json d;
  d["dQ"] = phiquant_derivative(phi, ctx, PhiField::Q, 1);
  d["dDelta"] = phiquant_derivative(phi, ctx, PhiField::Delta, 1);
  d["dPhi"] = phiquant_derivative(phi, ctx, PhiField::Phi, 1);
  d["d2Delta"] = phiquant_derivative(phi, ctx, PhiField::Delta, 2);
  d["d2Phi"] = phiquant_derivative(phi, ctx, PhiField::Phi, 2);
  j["derivatives"] = d;
  j["W"] = json::object();
  const CurvatureFactor w = curvature_factor(phi, ctx);
  j["W"]["value"] = w.value;
  j["W"]["ds"] = w.ds;
  j["W"]["ds2"] = w.ds2;
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

int cmd_identity_check(const std::string& format, const std::string& out_path) {
  const std::vector<ClaimResult> claims = certify_all_claims();
  bool all_as_expected = true;
  for (const auto& c : claims) all_as_expected &= c.holds == c.expect_hold;

  if (format == "json") {
    json arr = json::array();
    for (const auto& c : claims) {
      json cj;
      cj["id"] = c.id;
      cj["location"] = c.location;
      cj["holds"] = c.holds;
      cj["expected"] = c.expect_hold;
      if (!c.difference.empty()) cj["difference"] = c.difference;
      arr.push_back(cj);
    }
    json j;
    j["claims"] = arr;
    j["all_as_expected"] = all_as_expected;
    emit(j.dump(2) + "\n", out_path);
  } else {
    std::ostringstream os;
    for (const auto& c : claims) {
      os << c.id << "  [" << c.location << "]  "
         << (c.holds ? "holds" : "does NOT hold")
         << (c.holds == c.expect_hold ? "" : "  (unexpected!)") << "\n";
      if (!c.holds && !c.difference.empty())
        os << "    difference: " << c.difference << "\n";
    }
    emit(os.str(), out_path);
    std::cout << "identity-check: " << mark(all_as_expected) << "\n";
  }
  return all_as_expected ? 0 : 1;
}

int cmd_volume(const std::string& phi_arg, double b, int n, const std::string& form_name,
               int quad_n, const std::string& out_path) {
  const PhiSpec phi = resolve_phi(phi_arg, std::nullopt);
  VolumeForm form;
  if (form_name == "bh")
    form = VolumeForm::busemann_hausdorff;
  else if (form_name == "ht")
    form = VolumeForm::holmes_thompson;
  else
    throw std::domain_error("volume: form must be bh or ht");
  const VolumeFactor f = volume_factor(phi, b, n, form, quad_n);
  json j;
  j["phi"] = phi.family_name();
  j["b"] = b;
  j["n"] = n;
  j["form"] = form_name;
  j["f"] = f.value;
  j["converged"] = f.converged;
  j["refinement_gap"] = f.refinement_gap;
  j["nodes_used"] = f.nodes_used;
  emit(j.dump(2) + "\n", out_path);
  return f.converged ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvature toolkit for homogeneous Finsler spaces with square metrics"};
  app.require_subcommand(1);

  std::string model_path, phi_arg, out_path, format = "json";
  std::string family = "square", y_arg, form_name = "bh";
  int n_override = 0, samples = 512, grid_n = 1001, quad_n = 64, n_ctx = 2;
  unsigned seed = 0;
  double tol = 1e-9, s_val = 0.0, b_val = 0.0, h_step = 0.0;

  auto* validate = app.add_subcommand("validate", "check every model invariant");
  validate->add_option("--model", model_path, "model JSON file")->required();
  validate->add_option("--phi", phi_arg, "phi family name or @file");
  validate->add_option("--grid", grid_n, "validity grid size");
  validate->add_option("--out", out_path, "output path (default stdout)");

  auto* scurv = app.add_subcommand("scurv", "sample S-curvature over directions");
  scurv->add_option("--model", model_path)->required();
  scurv->add_option("--phi", phi_arg);
  scurv->add_option("--n", n_override, "dimension parameter (default dim k)");
  scurv->add_option("--samples", samples)->check(CLI::PositiveNumber);
  scurv->add_option("--seed", seed);
  scurv->add_option("--tol", tol, "vanishing tolerance")->check(CLI::PositiveNumber);
  scurv->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  scurv->add_option("--out", out_path);

  auto* eij = app.add_subcommand("eij", "mean Berwald curvature at a direction");
  eij->add_option("--model", model_path)->required();
  eij->add_option("--family", family)->check(CLI::IsMember({"square", "randers_square"}));
  eij->add_option("--y", y_arg, "direction, comma-separated")->required();
  eij->add_option("--n", n_override);
  eij->add_option("--step", h_step, "finite-difference step (default 1e-4*alpha)");
  eij->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  eij->add_option("--out", out_path);

  auto* phiquant = app.add_subcommand("phiquant", "auxiliary quantities at (s, b, n)");
  phiquant->add_option("--phi", phi_arg);
  phiquant->add_option("--s", s_val)->required();
  phiquant->add_option("--b", b_val)->required();
  phiquant->add_option("--n", n_ctx);
  phiquant->add_option("--out", out_path);

  auto* identity = app.add_subcommand("identity-check",
                                      "certify closed forms against definitions");
  identity->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  identity->add_option("--out", out_path);

  auto* volume = app.add_subcommand("volume", "volume-form factor f(b)");
  volume->add_option("--phi", phi_arg);
  volume->add_option("--b", b_val)->required();
  volume->add_option("--n", n_ctx);
  volume->add_option("--form", form_name)->check(CLI::IsMember({"bh", "ht"}));
  volume->add_option("--quad", quad_n, "initial quadrature nodes");
  volume->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed())
      return cmd_validate(model_path, phi_arg, grid_n, out_path);
    if (scurv->parsed())
      return cmd_scurv(model_path, phi_arg, n_override, samples, seed, tol, format,
                       out_path);
    if (eij->parsed())
      return cmd_eij(model_path, family, y_arg, n_override, h_step, format, out_path);
    if (phiquant->parsed())
      return cmd_phiquant(phi_arg, s_val, b_val, n_ctx, out_path);
    if (identity->parsed())
      return cmd_identity_check(format == "csv" ? "text" : format, out_path);
    if (volume->parsed())
      return cmd_volume(phi_arg, b_val, n_ctx, form_name, quad_n, out_path);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
