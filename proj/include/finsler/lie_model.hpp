#ifndef FINSLER_LIE_MODEL_HPP
#define FINSLER_LIE_MODEL_HPP

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finsler/rational.hpp"

namespace finsler {

/// Tangent vector at the origin, in coordinates of the k-basis.
using KVector = Eigen::VectorXd;
/// Vector in the full Lie algebra g.
using GVector = Eigen::VectorXd;

/// One structure constant c^l_{ij}: [e_i, e_j] contains c * e_l.
struct BracketTerm {
  int i, j, l;
  Rational c;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first violating index tuple when failing
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  double b = 0.0;
  std::vector<std::string> notes;
  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
};

/// Reductive homogeneous space as Lie-algebra data: a basis of g split into
/// h- and k-indices, exact structure constants, the inner product on k
/// induced by alpha, and the invariant vector v corresponding to beta.
///
/// Instances are immutable; validation runs once at construction and the
/// report is stored. All operations are const and safe to call concurrently.
class LieModel {
 public:
  /// v is given in k-coordinates (length = |k_indices|). exact_input marks
  /// whether the algebraic checks may use exact rational equality (file and
  /// fixture data) or roundoff tolerances (transformed models).
  LieModel(int dim_g, std::vector<int> h_indices, std::vector<int> k_indices,
           std::vector<BracketTerm> structure, Eigen::MatrixXd inner_k, KVector v,
           bool exact_input = true);

  int dim_g() const { return dim_g_; }
  int dim_k() const { return static_cast<int>(k_indices_.size()); }
  const std::vector<int>& h_indices() const { return h_indices_; }
  const std::vector<int>& k_indices() const { return k_indices_; }
  const std::vector<BracketTerm>& structure() const { return structure_; }
  const Eigen::MatrixXd& inner() const { return inner_; }
  const KVector& v() const { return v_; }

  /// Riemannian length of beta: sqrt(<v,v>).
  double b() const { return b_; }

  const ValidationReport& validation() const { return report_; }
  bool validated() const { return report_.all_pass(); }
  bool algebra_valid() const;  // antisymmetry + Jacobi + reductivity
  bool is_orthonormal(double tol = 1e-12) const;

  /// <x,y> with the model inner product (k-coordinates).
  double dot(const KVector& x, const KVector& y) const;

  /// Lie bracket of two g-vectors (k-vectors are embedded first).
  GVector bracket(const GVector& x, const GVector& y) const;

  /// [x,y] projected onto k (h-components dropped). Requires the algebraic
  /// invariants to have validated.
  KVector bracket_k(const KVector& x, const KVector& y) const;

  /// Gram-Schmidt (Cholesky) change of the k-basis bringing inner_k to the
  /// identity; structure constants and v are transformed consistently.
  /// Returns the new model and the k x k change-of-basis matrix whose
  /// columns are the new basis vectors in old k-coordinates.
  std::pair<LieModel, Eigen::MatrixXd> orthonormalize() const;

  GVector embed_k(const KVector& x) const;
  KVector project_k(const GVector& x) const;

 private:
  ValidationReport run_validation() const;

  int dim_g_;
  std::vector<int> h_indices_, k_indices_;
  std::vector<BracketTerm> structure_;
  Eigen::MatrixXd inner_;
  KVector v_;
  bool exact_input_;
  double b_ = 0.0;
  std::vector<double> c_dense_;  // c[(i*dim+j)*dim+l], double evaluation path
  std::vector<int> pos_in_k_;    // g-index -> position in k_indices_, or -1
  ValidationReport report_;
};

}  // namespace finsler

#endif
