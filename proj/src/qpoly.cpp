#include "critinf/qpoly.hpp"

#include <tuple>

namespace critinf {

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QPoly QPoly::variable() { return QPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

QPoly QPoly::monomial(int deg, Rational c) {
  if (c.is_zero()) return QPoly();
  std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
  v.back() = std::move(c);
  return QPoly(std::move(v));
}

const Rational& QPoly::lc() const {
  if (c_.empty()) throw Error("lc of zero polynomial");
  return c_.back();
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(v));
}

QPoly QPoly::scale(const Rational& a) const {
  if (a.is_zero()) return QPoly();
  QPoly r = *this;
  for (auto& c : r.c_) c *= a;
  return r;
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  QPoly r = a;
  if (a.degree() < b.degree()) return {QPoly(), r};
  std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
  Rational inv_lc = b.lc().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rational c = r.lc() * inv_lc;
    q[static_cast<size_t>(k)] = c;
    // r -= c * X^k * b
    for (int i = 0; i <= b.degree(); ++i)
      r.c_[static_cast<size_t>(i + k)] -= c * b.c_[static_cast<size_t>(i)];
    r.trim();
  }
  return {QPoly(std::move(q)), r};
}

QPoly QPoly::div_exact(const QPoly& a, const QPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return scale(lc().inverse());
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<Rational> v(c_.size() - 1, Rational(0));
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return QPoly(std::move(v));
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  QPoly f = a, g = b;
  while (!g.is_zero()) {
    QPoly r = divrem(f, g).second;
    f = std::move(g);
    g = r.monic();  // keep coefficients small
  }
  return f.monic();
}

std::tuple<QPoly, QPoly, QPoly> QPoly::xgcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0{Rational(1)}, s1;
  QPoly t0, t1{Rational(1)};
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    QPoly s = s0 - q * s1;
    QPoly t = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s);
    t0 = std::move(t1); t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = r0.lc().inverse();
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

QPoly QPoly::squarefree_part() const {
  if (is_zero()) throw Error("squarefree part of zero polynomial");
  if (is_constant()) return QPoly(Rational(1));
  QPoly g = gcd(*this, derivative());
  return div_exact(*this, g).monic();
}

std::pair<QPoly, Rational> QPoly::primitive_integer() const {
  if (is_zero()) return {QPoly(), Rational(0)};
  mpz_class den_lcm = 1;
  for (const auto& c : c_) den_lcm = lcm(den_lcm, c.den());
  mpz_class num_gcd = 0;
  for (const auto& c : c_) num_gcd = ::gcd(num_gcd, mpz_class(c.num() * (den_lcm / c.den())));
  Rational scale_by(mpq_class(den_lcm, num_gcd));  // primitive = this * scale_by
  if (lc().sign() < 0) scale_by = -scale_by;
  QPoly prim = scale(scale_by);
  return {prim, scale_by.inverse()};
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational a = c;
    if (out.empty()) {
      if (a.sign() < 0) { out += "-"; a = -a; }
    } else {
      out += (a.sign() < 0) ? "-" : "+";
      if (a.sign() < 0) a = -a;
    }
    if (i == 0) { out += a.str(); continue; }
    if (!a.is_one()) out += a.str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace critinf
