#include <doctest.h>

#include "finsler/lie_model.hpp"

using namespace finsler;

namespace {

Eigen::MatrixXd ident(int n) { return Eigen::MatrixXd::Identity(n, n); }

KVector kv(std::initializer_list<double> vals) {
  KVector v(static_cast<int>(vals.size()));
  int i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

LieModel abelian3() { return LieModel(3, {}, {0, 1, 2}, {}, ident(3), kv({0, 0, 0})); }

LieModel heisenberg(double vz = 0.5) {
  return LieModel(3, {}, {0, 1, 2}, {{0, 1, 2, Rational(1)}, {1, 0, 2, Rational(-1)}},
                  ident(3), kv({0, 0, vz}));
}

LieModel so3() {
  // c^l_{ij} = epsilon_{ijl}
  std::vector<BracketTerm> c;
  auto add = [&](int i, int j, int l) {
    c.push_back({i, j, l, Rational(1)});
    c.push_back({j, i, l, Rational(-1)});
  };
  add(0, 1, 2);
  add(1, 2, 0);
  add(2, 0, 1);
  return LieModel(3, {}, {0, 1, 2}, std::move(c), ident(3), kv({0, 0, 0}));
}

LieModel solvable2() {
  return LieModel(2, {}, {0, 1}, {{0, 1, 1, Rational(1)}, {1, 0, 1, Rational(-1)}},
                  ident(2), kv({0.5, 0}));
}

}  // namespace

TEST_CASE("abelian model: zero brackets, all checks pass, b = 0") {
  const LieModel m = abelian3();
  CHECK(m.validated());
  CHECK(m.b() == 0.0);
  const GVector br = m.bracket(kv({1, 2, 3}), kv({-1, 0, 5}));
  CHECK(br.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Heisenberg brackets and validation") {
  const LieModel m = heisenberg();
  CHECK(m.validated());
  CHECK(m.b() == doctest::Approx(0.5).epsilon(1e-15));
  GVector e0 = GVector::Zero(3), e1 = GVector::Zero(3);
  e0[0] = 1;
  e1[1] = 1;
  const GVector b01 = m.bracket(e0, e1);
  CHECK(b01[2] == 1.0);
  const GVector b10 = m.bracket(e1, e0);
  CHECK(b10[2] == -1.0);
}

TEST_CASE("so(3)-style structure satisfies Jacobi and cycles the basis") {
  const LieModel m = so3();
  CHECK(m.validated());
  CHECK(m.bracket(kv({1, 0, 0}), kv({0, 1, 0}))[2] == 1.0);
  CHECK(m.bracket(kv({0, 1, 0}), kv({0, 0, 1}))[0] == 1.0);
}

TEST_CASE("bracket_k properties") {
  const LieModel m = solvable2();
  // trivial projection when h is empty
  CHECK(m.bracket_k(kv({1, 0}), kv({0, 1}))[1] == 1.0);
  // [e0, a e0 + b e1]_k = b e1
  const KVector r = m.bracket_k(kv({1, 0}), kv({3, -2}));
  CHECK(r[0] == 0.0);
  CHECK(r[1] == -2.0);
  // antisymmetry on sampled pairs, and [y,y] = 0
  for (int k = 0; k < 10; ++k) {
    const KVector x = kv({std::sin(1.0 + k), std::cos(2.0 * k)});
    const KVector y = kv({std::cos(3.0 + k), std::sin(0.5 * k)});
    CHECK((m.bracket_k(x, y) + m.bracket_k(y, x)).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(m.bracket_k(y, y).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("bracket dimension mismatch throws") {
  const LieModel m = solvable2();
  CHECK_THROWS_AS(m.bracket(kv({1, 0, 0}), kv({0, 1})), std::invalid_argument);
}

TEST_CASE("constructed antisymmetry violation is reported with its tuple") {
  const LieModel m(3, {}, {0, 1, 2}, {{1, 2, 0, Rational(1)}, {2, 1, 0, Rational(0)}},
                   ident(3), kv({0, 0, 0}));
  const CheckResult* c = m.validation().find("antisymmetry");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  CHECK(c->detail.find("1,2,0") != std::string::npos);
  CHECK_FALSE(m.validated());
  CHECK_THROWS_AS(m.bracket_k(kv({1, 0, 0}), kv({0, 1, 0})), std::domain_error);
}

TEST_CASE("Jacobi violation is caught exactly") {
  // [e0,e1]=e2, [e0,e2]=e0 breaks Jacobi on (0,1,2)
  const LieModel m(3, {}, {0, 1, 2},
                   {{0, 1, 2, Rational(1)},
                    {1, 0, 2, Rational(-1)},
                    {0, 2, 0, Rational(1)},
                    {2, 0, 0, Rational(-1)}},
                   ident(3), kv({0, 0, 0}));
  const CheckResult* c = m.validation().find("jacobi");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
}

TEST_CASE("reductivity violation: [h,k] leaking into h") {
  const LieModel m(3, {0}, {1, 2}, {{0, 1, 0, Rational(1)}, {1, 0, 0, Rational(-1)}},
                   ident(2), kv({0, 0}));
  const CheckResult* c = m.validation().find("reductivity");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
}

TEST_CASE("norm bound: b >= 1 fails validation") {
  const LieModel m(2, {}, {0, 1}, {}, ident(2), kv({2, 0}));
  const CheckResult* c = m.validation().find("b_bound");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  CHECK(c->detail.find("norm bound") != std::string::npos);
}

TEST_CASE("infinitesimal invariance [h, v] = 0") {
  std::vector<BracketTerm> c;
  auto add = [&](int i, int j, int l) {
    c.push_back({i, j, l, Rational(1)});
    c.push_back({j, i, l, Rational(-1)});
  };
  add(0, 1, 2);
  add(1, 2, 0);
  add(2, 0, 1);
  const LieModel bad(3, {2}, {0, 1}, c, ident(2), kv({1.0 / 4, 0}));
  const CheckResult* chk = bad.validation().find("h_invariance");
  REQUIRE(chk != nullptr);
  CHECK_FALSE(chk->pass);

  const LieModel good(3, {2}, {0, 1}, c, ident(2), kv({0, 0}));
  CHECK(good.validated());
  // the disconnected-H caveat is documented on the report
  REQUIRE_FALSE(good.validation().notes.empty());
  CHECK(good.validation().notes.front().find("connected") != std::string::npos);
}

TEST_CASE("bracket_k projects out the h-component") {
  // so(3) with h = span{e2}: [e0, e1] = e2 lies entirely in h
  std::vector<BracketTerm> c;
  auto add = [&](int i, int j, int l) {
    c.push_back({i, j, l, Rational(1)});
    c.push_back({j, i, l, Rational(-1)});
  };
  add(0, 1, 2);
  add(1, 2, 0);
  add(2, 0, 1);
  const LieModel m(3, {2}, {0, 1}, c, ident(2), kv({0, 0}));
  const GVector full = m.bracket(kv({1, 0}), kv({0, 1}));
  CHECK(full[2] == 1.0);
  CHECK(m.bracket_k(kv({1, 0}), kv({0, 1})).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("orthonormalize leaves the h-block alone") {
  // plane-similarity algebra with a stretched inner product on k
  std::vector<BracketTerm> c = {{3, 0, 1, Rational(1)},  {0, 3, 1, Rational(-1)},
                                {3, 1, 0, Rational(-1)}, {1, 3, 0, Rational(1)},
                                {2, 0, 0, Rational(1)},  {0, 2, 0, Rational(-1)},
                                {2, 1, 1, Rational(1)},  {1, 2, 1, Rational(-1)}};
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(3, 3);
  g(2, 2) = 4.0;
  const LieModel m(4, {3}, {0, 1, 2}, c, g, kv({0, 0, 0.25}));
  CHECK(m.validated());
  CHECK(m.b() == doctest::Approx(0.5).epsilon(1e-15));
  const auto [ortho, cob] = m.orthonormalize();
  CHECK(ortho.validated());
  CHECK(ortho.b() == doctest::Approx(0.5).epsilon(1e-12));
  // the dilation generator is rescaled: e2' = e2/2, so [e2', e0] = e0/2
  const KVector br = ortho.bracket_k(kv({0, 0, 1}), kv({1, 0, 0}));
  CHECK(br[0] == doctest::Approx(0.5).epsilon(1e-12));
  // the h-action on k is untouched by a k-only change of basis
  GVector e3 = GVector::Zero(4);
  e3[3] = 1.0;
  const GVector rot = ortho.bracket(e3, ortho.embed_k(kv({1, 0, 0})));
  CHECK(rot[1] == doctest::Approx(1.0).epsilon(1e-12));
  (void)cob;
}

TEST_CASE("orthonormalize: identity inner product is a no-op") {
  const LieModel m = heisenberg();
  const auto [m2, cob] = m.orthonormalize();
  CHECK((cob - ident(3)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(m2.is_orthonormal(0.0));
  CHECK(m2.b() == m.b());
}

TEST_CASE("orthonormalize: diagonal inner product rescales basis and v") {
  Eigen::MatrixXd g(2, 2);
  g << 4, 0, 0, 1;
  const LieModel m(2, {}, {0, 1}, {{0, 1, 1, Rational(1)}, {1, 0, 1, Rational(-1)}}, g,
                   kv({0.25, 0}));
  CHECK(m.b() == doctest::Approx(0.5).epsilon(1e-15));
  const auto [m2, cob] = m.orthonormalize();
  CHECK(m2.is_orthonormal(1e-15));
  CHECK(m2.b() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(m2.v()[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cob(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  // [f0, f1] = (1/2)[e0, e1] = (1/2) e1 = (1/2) f1
  const KVector br = m2.bracket_k(kv({1, 0}), kv({0, 1}));
  CHECK(br[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("orthonormalize: random SPD inner product, brackets preserved") {
  Eigen::MatrixXd a(3, 3);
  a << 1.1, 0.3, -0.2, 0.0, 0.9, 0.4, 0.2, -0.1, 1.3;
  Eigen::MatrixXd g = a.transpose() * a + 0.5 * ident(3);
  std::vector<BracketTerm> c = {{0, 1, 1, Rational(1)},   {1, 0, 1, Rational(-1)},
                                {0, 2, 1, Rational(1)},   {2, 0, 1, Rational(-1)},
                                {0, 2, 2, Rational(1)},   {2, 0, 2, Rational(-1)}};
  const LieModel m(3, {}, {0, 1, 2}, c, g, kv({0.2, 0.1, -0.1}));
  const auto [m2, cob] = m.orthonormalize();
  CHECK(m2.is_orthonormal(1e-12));
  CHECK(std::abs(m2.b() - m.b()) <= 1e-12);
  // coordinate map old->new is cob^{-1}; brackets must commute with it
  const Eigen::MatrixXd to_new = cob.inverse();
  for (int k = 0; k < 8; ++k) {
    const KVector x = kv({std::sin(1.0 + k), std::cos(2.0 + k), std::sin(0.3 * k)});
    const KVector y = kv({std::cos(1.5 * k), std::sin(2.5 + k), std::cos(0.7 * k)});
    const KVector lhs = to_new * m.bracket_k(x, y);
    const KVector rhs = m2.bracket_k(to_new * x, to_new * y);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
  }
  // inner products of transformed vectors are preserved
  const KVector x = kv({0.3, -1.2, 0.7});
  CHECK(std::abs(m2.dot(to_new * x, to_new * x) - m.dot(x, x)) <= 1e-12);
}

TEST_CASE("orthonormalize requires an SPD inner product") {
  Eigen::MatrixXd g(2, 2);
  g << 1, 2, 2, 1;  // indefinite
  const LieModel m(2, {}, {0, 1}, {}, g, kv({0, 0}));
  CHECK_THROWS_AS(m.orthonormalize(), std::domain_error);
}

TEST_CASE("exact Jacobi residual on validated models") {
  for (const LieModel& m : {heisenberg(), so3(), solvable2()}) {
    const CheckResult* c = m.validation().find("jacobi");
    REQUIRE(c != nullptr);
    CHECK(c->pass);
  }
}
