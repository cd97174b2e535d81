#include "finsler/lie_model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace finsler {

namespace {
constexpr double kTol = 1e-12;

std::string tuple3(int i, int j, int l) {
  std::ostringstream os;
  os << "(i,j,l)=(" << i << "," << j << "," << l << ")";
  return os.str();
}
}  // namespace

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

LieModel::LieModel(int dim_g, std::vector<int> h_indices, std::vector<int> k_indices,
                   std::vector<BracketTerm> structure, Eigen::MatrixXd inner_k,
                   KVector v, bool exact_input)
    : dim_g_(dim_g),
      h_indices_(std::move(h_indices)),
      k_indices_(std::move(k_indices)),
      structure_(std::move(structure)),
      inner_(std::move(inner_k)),
      v_(std::move(v)),
      exact_input_(exact_input) {
  if (dim_g_ < 1) throw std::invalid_argument("LieModel: dim_g must be >= 1");
  std::set<int> seen;
  for (int idx : h_indices_) seen.insert(idx);
  for (int idx : k_indices_) {
    if (!seen.insert(idx).second)
      throw std::invalid_argument("LieModel: h and k indices overlap");
  }
  if (static_cast<int>(seen.size()) != dim_g_ ||
      (!seen.empty() && (*seen.begin() < 0 || *seen.rbegin() >= dim_g_)))
    throw std::invalid_argument("LieModel: h and k must partition 0..dim_g-1");
  const int dk = dim_k();
  if (inner_.rows() != dk || inner_.cols() != dk)
    throw std::invalid_argument("LieModel: inner_k must be dim_k x dim_k");
  if (v_.size() != dk)
    throw std::invalid_argument("LieModel: v must have dim_k coordinates");
  for (const auto& t : structure_) {
    if (t.i < 0 || t.i >= dim_g_ || t.j < 0 || t.j >= dim_g_ || t.l < 0 || t.l >= dim_g_)
      throw std::invalid_argument("LieModel: structure index out of range");
  }

  pos_in_k_.assign(dim_g_, -1);
  for (int p = 0; p < dk; ++p) pos_in_k_[k_indices_[p]] = p;

  c_dense_.assign(static_cast<std::size_t>(dim_g_) * dim_g_ * dim_g_, 0.0);
  for (const auto& t : structure_)
    c_dense_[(static_cast<std::size_t>(t.i) * dim_g_ + t.j) * dim_g_ + t.l] +=
        t.c.get_d();

  b_ = std::sqrt(std::max(0.0, v_.dot(inner_ * v_)));
  report_ = run_validation();
}

double LieModel::dot(const KVector& x, const KVector& y) const {
  if (x.size() != dim_k() || y.size() != dim_k())
    throw std::invalid_argument("LieModel::dot: dimension mismatch");
  return x.dot(inner_ * y);
}

GVector LieModel::embed_k(const KVector& x) const {
  if (x.size() != dim_k())
    throw std::invalid_argument("LieModel::embed_k: dimension mismatch");
  GVector g = GVector::Zero(dim_g_);
  for (int p = 0; p < dim_k(); ++p) g[k_indices_[p]] = x[p];
  return g;
}

KVector LieModel::project_k(const GVector& x) const {
  if (x.size() != dim_g_)
    throw std::invalid_argument("LieModel::project_k: dimension mismatch");
  KVector k = KVector::Zero(dim_k());
  for (int p = 0; p < dim_k(); ++p) k[p] = x[k_indices_[p]];
  return k;
}

GVector LieModel::bracket(const GVector& x, const GVector& y) const {
  const GVector xg = x.size() == dim_k() ? embed_k(x) : x;
  const GVector yg = y.size() == dim_k() ? embed_k(y) : y;
  if (xg.size() != dim_g_ || yg.size() != dim_g_)
    throw std::invalid_argument("LieModel::bracket: dimension mismatch");
  GVector out = GVector::Zero(dim_g_);
  for (int i = 0; i < dim_g_; ++i) {
    if (xg[i] == 0.0) continue;
    for (int j = 0; j < dim_g_; ++j) {
      if (yg[j] == 0.0) continue;
      const double w = xg[i] * yg[j];
      const std::size_t base = (static_cast<std::size_t>(i) * dim_g_ + j) * dim_g_;
      for (int l = 0; l < dim_g_; ++l) out[l] += w * c_dense_[base + l];
    }
  }
  return out;
}

KVector LieModel::bracket_k(const KVector& x, const KVector& y) const {
  if (!algebra_valid())
    throw std::domain_error("LieModel::bracket_k: model failed algebraic validation");
  return project_k(bracket(embed_k(x), embed_k(y)));
}

bool LieModel::algebra_valid() const {
  for (const char* name : {"antisymmetry", "jacobi", "reductivity"}) {
    const CheckResult* c = report_.find(name);
    if (!c || !c->pass) return false;
  }
  return true;
}

bool LieModel::is_orthonormal(double tol) const {
  return (inner_ - Eigen::MatrixXd::Identity(dim_k(), dim_k())).cwiseAbs().maxCoeff() <=
         tol;
}

ValidationReport LieModel::run_validation() const {
  ValidationReport rep;
  const int dim = dim_g_;
  const double tol = exact_input_ ? 0.0 : kTol;

  // Exact structure-constant map with duplicates summed.
  std::map<std::array<int, 3>, Rational> c;
  for (const auto& t : structure_) c[{t.i, t.j, t.l}] += t.c;
  auto cval = [&](int i, int j, int l) -> Rational {
    auto it = c.find({i, j, l});
    return it == c.end() ? Rational(0) : it->second;
  };
  auto near_zero = [&](const Rational& r) {
    return exact_input_ ? r == 0 : std::abs(r.get_d()) <= kTol;
  };

  // antisymmetry: c^l_{ij} = -c^l_{ji}, diagonal zero
  {
    CheckResult chk{"antisymmetry", true, ""};
    for (const auto& [key, val] : c) {
      (void)val;
      const auto [i, j, l] = std::array{key[0], key[1], key[2]};
      const Rational r = cval(i, j, l) + cval(j, i, l);
      if (!near_zero(r) || (i == j && !near_zero(cval(i, j, l)))) {
        chk.pass = false;
        chk.detail = tuple3(i, j, l);
        break;
      }
    }
    rep.checks.push_back(chk);
  }

  // Jacobi identity on all basis triples
  {
    CheckResult chk{"jacobi", true, ""};
    for (int i = 0; i < dim && chk.pass; ++i)
      for (int j = i + 1; j < dim && chk.pass; ++j)
        for (int k = j + 1; k < dim && chk.pass; ++k)
          for (int l = 0; l < dim && chk.pass; ++l) {
            Rational sum(0);
            for (int m = 0; m < dim; ++m) {
              sum += cval(j, k, m) * cval(i, m, l);
              sum += cval(k, i, m) * cval(j, m, l);
              sum += cval(i, j, m) * cval(k, m, l);
            }
            if (!near_zero(sum)) {
              chk.pass = false;
              std::ostringstream os;
              os << "(i,j,k,l)=(" << i << "," << j << "," << k << "," << l << ")";
              chk.detail = os.str();
            }
          }
    rep.checks.push_back(chk);
  }

  // reductivity: [h,k] has no h-component
  {
    CheckResult chk{"reductivity", true, ""};
    for (int hi : h_indices_) {
      for (int kj : k_indices_) {
        for (int hl : h_indices_) {
          if (!near_zero(cval(hi, kj, hl)) || !near_zero(cval(kj, hi, hl))) {
            chk.pass = false;
            chk.detail = tuple3(hi, kj, hl);
          }
          if (!chk.pass) break;
        }
        if (!chk.pass) break;
      }
      if (!chk.pass) break;
    }
    rep.checks.push_back(chk);
  }

  // h closed under the bracket ([h,h] stays in h; h is the isotropy algebra)
  {
    CheckResult chk{"h_subalgebra", true, ""};
    for (int hi : h_indices_) {
      for (int hj : h_indices_) {
        for (int kl : k_indices_) {
          if (!near_zero(cval(hi, hj, kl))) {
            chk.pass = false;
            chk.detail = tuple3(hi, hj, kl);
          }
          if (!chk.pass) break;
        }
        if (!chk.pass) break;
      }
      if (!chk.pass) break;
    }
    rep.checks.push_back(chk);
  }

  // inner_k symmetric positive-definite
  {
    CheckResult chk{"inner_spd", true, ""};
    const double asym = (inner_ - inner_.transpose()).cwiseAbs().maxCoeff();
    if (asym > std::max(tol, 1e-12)) {
      chk.pass = false;
      chk.detail = "not symmetric";
    } else {
      Eigen::LLT<Eigen::MatrixXd> llt(inner_);
      if (llt.info() != Eigen::Success) {
        chk.pass = false;
        chk.detail = "not positive-definite";
      }
    }
    rep.checks.push_back(chk);
  }

  // 0 <= b < 1
  {
    CheckResult chk{"b_bound", b_ < 1.0, ""};
    if (!chk.pass) {
      std::ostringstream os;
      os << "norm bound violated: b=" << b_;
      chk.detail = os.str();
    }
    rep.b = b_;
    rep.checks.push_back(chk);
  }

  // infinitesimal invariance: [w, v] = 0 for every basis w of h
  {
    CheckResult chk{"h_invariance", true, ""};
    const GVector vg = embed_k(v_);
    for (int hi : h_indices_) {
      GVector w = GVector::Zero(dim);
      w[hi] = 1.0;
      const GVector br = bracket(w, vg);
      if (br.cwiseAbs().maxCoeff() > kTol * (1.0 + v_.cwiseAbs().maxCoeff())) {
        chk.pass = false;
        std::ostringstream os;
        os << "[e_" << hi << ", v] != 0";
        chk.detail = os.str();
        break;
      }
    }
    rep.checks.push_back(chk);
    if (!h_indices_.empty() && chk.pass)
      rep.notes.push_back(
          "h-invariance was checked infinitesimally ([w,v]=0 for basis w of h); "
          "this is equivalent to invariance under the isotropy group only when "
          "that group is connected.");
  }

  return rep;
}

std::pair<LieModel, Eigen::MatrixXd> LieModel::orthonormalize() const {
  const CheckResult* spd = report_.find("inner_spd");
  if (!spd || !spd->pass)
    throw std::domain_error("LieModel::orthonormalize: inner_k is not SPD");
  const int dk = dim_k();
  const Eigen::MatrixXd ident = Eigen::MatrixXd::Identity(dk, dk);

  if (is_orthonormal(0.0)) {
    // already orthonormal: keep the exact structure untouched
    return {*this, ident};
  }

  Eigen::LLT<Eigen::MatrixXd> llt(inner_);
  const Eigen::MatrixXd L = llt.matrixL();
  const Eigen::MatrixXd M = L.transpose().inverse();  // new basis columns

  // full-g transforms: identity on h, M / L^T on the k block
  Eigen::MatrixXd T = Eigen::MatrixXd::Identity(dim_g_, dim_g_);
  Eigen::MatrixXd Tinv = Eigen::MatrixXd::Identity(dim_g_, dim_g_);
  for (int a = 0; a < dk; ++a)
    for (int i = 0; i < dk; ++i) {
      T(k_indices_[i], k_indices_[a]) = M(i, a);
      Tinv(k_indices_[a], k_indices_[i]) = L(i, a);  // (L^T)(a,i)
    }

  std::vector<BracketTerm> new_structure;
  for (int a = 0; a < dim_g_; ++a)
    for (int bjdx = 0; bjdx < dim_g_; ++bjdx)
      for (int lp = 0; lp < dim_g_; ++lp) {
        double acc = 0.0;
        for (int i = 0; i < dim_g_; ++i) {
          if (T(i, a) == 0.0) continue;
          for (int j = 0; j < dim_g_; ++j) {
            if (T(j, bjdx) == 0.0) continue;
            const std::size_t base = (static_cast<std::size_t>(i) * dim_g_ + j) * dim_g_;
            for (int l = 0; l < dim_g_; ++l)
              acc += T(i, a) * T(j, bjdx) * c_dense_[base + l] * Tinv(lp, l);
          }
        }
        if (acc != 0.0)
          new_structure.push_back({a, bjdx, lp, Rational(acc)});
      }

  const KVector v_new = L.transpose() * v_;
  LieModel out(dim_g_, h_indices_, k_indices_, std::move(new_structure), ident, v_new,
               /*exact_input=*/false);
  return {std::move(out), M};
}

}  // namespace finsler
