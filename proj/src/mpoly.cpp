#include "finsler/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace finsler {

namespace {
// guards runaway exponent growth from repeated cross-multiplication
constexpr int kMaxDegree = 512;
}  // namespace

MPoly::MPoly(const Rational& c) {
  Rational cc = c;
  cc.canonicalize();
  if (cc != 0) terms_[{0, 0, 0}] = cc;
}

MPoly::MPoly(long c) {
  if (c != 0) terms_[{0, 0, 0}] = Rational(c);
}

MPoly MPoly::var(Var v, int exponent) {
  MPoly p;
  Monomial m{0, 0, 0};
  m[static_cast<int>(v)] = exponent;
  p.terms_[m] = Rational(1);
  return p;
}

MPoly MPoly::term(const Rational& c, int ds, int db2, int dn) {
  MPoly p;
  Rational cc = c;
  cc.canonicalize();
  if (cc != 0) p.terms_[{ds, db2, dn}] = cc;
  return p;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2]);
  return d;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m[0] + m[1] + m[2] > kMaxDegree)
    throw std::overflow_error("MPoly: exponent overflow guard tripped");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  return r;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
  MPoly r(1L);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

MPoly MPoly::scale(const Rational& c) const {
  MPoly r;
  Rational cs = c;
  cs.canonicalize();
  if (cs == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_[m] = cc * cs;
  return r;
}

MPoly MPoly::derivative(Var v) const {
  const int vi = static_cast<int>(v);
  MPoly r;
  for (const auto& [m, c] : terms_) {
    if (m[vi] == 0) continue;
    Monomial md = m;
    md[vi] -= 1;
    r.add_term(md, c * m[vi]);
  }
  return r;
}

Rational MPoly::eval(const Rational& s, const Rational& b2, const Rational& n) const {
  Rational sc = s, b2c = b2, nc = n;
  sc.canonicalize();
  b2c.canonicalize();
  nc.canonicalize();
  auto rpow = [](const Rational& x, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  };
  Rational acc(0);
  for (const auto& [m, c] : terms_)
    acc += c * rpow(sc, m[0]) * rpow(b2c, m[1]) * rpow(nc, m[2]);
  return acc;
}

double MPoly::eval(double s, double b2, double n) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < m[0]; ++i) t *= s;
    for (int i = 0; i < m[1]; ++i) t *= b2;
    for (int i = 0; i < m[2]; ++i) t *= n;
    acc += t;
  }
  return acc;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest total degree first for readability; map iteration is already canonical,
  // so walk it in reverse (lex order puts high s-degrees last)
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    const bool has_vars = m[0] + m[1] + m[2] > 0;
    if (a != 1 || !has_vars) {
      os << a.get_str();
      if (has_vars) os << "*";
    }
    const char* names[3] = {"s", "b2", "n"};
    bool star = false;
    for (int v = 0; v < 3; ++v) {
      if (m[v] == 0) continue;
      if (star) os << "*";
      os << names[v];
      if (m[v] > 1) os << "^" << m[v];
      star = true;
    }
  }
  return os.str();
}

MPoly operator*(const Rational& c, const MPoly& p) { return p.scale(c); }

}  // namespace finsler
