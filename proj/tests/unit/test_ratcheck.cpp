#include <doctest.h>

#include "finsler/mpoly.hpp"
#include "finsler/ratfunc.hpp"

using namespace finsler;

namespace {
MPoly S() { return MPoly::var(Var::s); }
MPoly C(long v) { return MPoly(v); }

// deterministic small-rational generator for the ring-axiom sweeps
struct Lcg {
  unsigned long state = 12345;
  long next(long lo, long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((state >> 33) % static_cast<unsigned long>(hi - lo + 1));
  }
  MPoly poly() {
    MPoly p;
    const int terms = static_cast<int>(next(1, 4));
    for (int t = 0; t < terms; ++t) {
      Rational c(next(-6, 6), next(1, 4));
      c.canonicalize();
      p = p + MPoly::term(c, static_cast<int>(next(0, 3)), static_cast<int>(next(0, 2)),
                          static_cast<int>(next(0, 2)));
    }
    return p;
  }
};
}  // namespace

TEST_CASE("basic products") {
  CHECK((C(1) - S()) * (C(1) + S()) == C(1) - S().pow(2));
  const MPoly p = (C(1) - S()).pow(4);
  const auto& t = p.terms();
  CHECK(t.at({0, 0, 0}) == 1);
  CHECK(t.at({1, 0, 0}) == -4);
  CHECK(t.at({2, 0, 0}) == 6);
  CHECK(t.at({3, 0, 0}) == -4);
  CHECK(t.at({4, 0, 0}) == 1);
}

TEST_CASE("n stays a formal variable of degree one") {
  const MPoly delta = C(1) + MPoly::var(Var::b2);
  const MPoly p = MPoly::var(Var::n) * delta;
  for (const auto& [m, c] : p.terms()) {
    (void)c;
    CHECK(m[2] == 1);
  }
}

TEST_CASE("ring axioms hold exactly on randomized triples") {
  Lcg gen;
  for (int rep = 0; rep < 50; ++rep) {
    const MPoly a = gen.poly(), b = gen.poly(), c = gen.poly();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("formal derivative and evaluation") {
  const MPoly p = (C(1) - S()).pow(3);
  CHECK(p.derivative(Var::s) == C(-3) * (C(1) - S()).pow(2));
  CHECK(p.eval(Rational(1, 2), Rational(0), Rational(0)) == Rational(1, 8));
  // (1-s^2)/(1-s) at s = 1/3 -> 4/3
  const RatFunc r(C(1) - S().pow(2), C(1) - S());
  CHECK(r.eval(Rational(1, 3), Rational(0), Rational(0)) == Rational(4, 3));
}

TEST_CASE("rf_equal decides by cross-multiplication") {
  const RatFunc a(C(2), C(1) - S());
  const RatFunc b(C(2) + C(2) * S(), C(1) - S().pow(2));
  const RatFunc c(C(2), C(1) + S());
  CHECK(rf_equal(a, b));
  CHECK_FALSE(rf_equal(a, c));
  CHECK_FALSE(rf_difference(a, c).is_zero());
}

TEST_CASE("rf_equal is an equivalence relation on sampled functions") {
  Lcg gen;
  std::vector<RatFunc> fns;
  for (int k = 0; k < 6; ++k) {
    MPoly den = gen.poly();
    if (den.is_zero()) den = C(1);
    fns.emplace_back(gen.poly(), den);
  }
  // reflexive; symmetric; transitive over scaled copies
  for (const auto& f : fns) CHECK(rf_equal(f, f));
  for (const auto& f : fns) {
    const RatFunc g(f.num() * (C(3) * S() + C(1)), f.den() * (C(3) * S() + C(1)));
    CHECK(rf_equal(f, g));
    CHECK(rf_equal(g, f));
    const RatFunc h(g.num().scale(Rational(5)), g.den().scale(Rational(5)));
    CHECK(rf_equal(g, h));
    CHECK(rf_equal(f, h));
  }
}

TEST_CASE("quotient-rule derivative") {
  const RatFunc q(C(1), C(1) - S());
  CHECK(rf_equal(q.derivative_s(), RatFunc(C(1), (C(1) - S()).pow(2))));
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(RatFunc(C(1), MPoly()), std::domain_error);
  CHECK_THROWS_AS(S().pow(600), std::overflow_error);
  const RatFunc zero_den_eval(C(1), C(1) - S());
  CHECK_THROWS_AS(zero_den_eval.eval(Rational(1), Rational(0), Rational(0)),
                  std::domain_error);
}

TEST_CASE("canonical text form") {
  const MPoly p = C(-12) * MPoly::var(Var::n) * S().pow(5) + C(9) * S().pow(4) - C(3);
  CHECK(p.str() == "-12*s^5*n + 9*s^4 - 3");
  CHECK(MPoly().str() == "0");
}
