#include "critinf/field.hpp"

#include <tuple>

namespace critinf {

namespace {

RatFunc reduce_fraction(QPoly num, QPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) return {QPoly(), QPoly(Rational(1))};
  QPoly g = QPoly::gcd(num, den);
  if (!g.is_one()) {
    num = QPoly::div_exact(num, g);
    den = QPoly::div_exact(den, g);
  }
  Rational lc_inv = den.lc().inverse();
  return {num.scale(lc_inv), den.scale(lc_inv)};
}

const RatFunc& as_rf(const FieldElement& a) { return std::get<RatFunc>(a); }
const AlgElem& as_alg(const FieldElement& a) { return std::get<AlgElem>(a); }

}  // namespace

FieldPtr FieldSpec::rationals() {
  return FieldPtr(new FieldSpec(FieldKind::Rationals, "", QPoly()));
}

FieldPtr FieldSpec::rational_functions(std::string param) {
  if (param.empty()) throw Error("field parameter name must be nonempty");
  return FieldPtr(new FieldSpec(FieldKind::RationalFunctions, std::move(param), QPoly()));
}

FieldPtr FieldSpec::algebraic_extension(std::string param, QPoly modulus) {
  if (param.empty()) throw Error("field parameter name must be nonempty");
  if (modulus.degree() < 1) throw Error("extension modulus must have degree >= 1");
  QPoly m = modulus.monic();
  if (QPoly::gcd(m, m.derivative()).degree() > 0)
    throw Error("extension modulus must be squarefree");
  return FieldPtr(new FieldSpec(FieldKind::AlgebraicExtension, std::move(param), std::move(m)));
}

AlgElem FieldSpec::reduce(QPoly p) const {
  return {QPoly::divrem(p, modulus_).second};
}

FieldElement FieldSpec::from_rational(const Rational& r) const {
  switch (kind_) {
    case FieldKind::Rationals: return r;
    case FieldKind::RationalFunctions: return RatFunc{QPoly(r), QPoly(Rational(1))};
    case FieldKind::AlgebraicExtension: return AlgElem{QPoly(r)};
  }
  throw Error("unreachable");
}

FieldElement FieldSpec::generator() const {
  switch (kind_) {
    case FieldKind::Rationals: throw Error("rationals have no parameter");
    case FieldKind::RationalFunctions:
      return RatFunc{QPoly::variable(), QPoly(Rational(1))};
    case FieldKind::AlgebraicExtension: return reduce(QPoly::variable());
  }
  throw Error("unreachable");
}

FieldElement FieldSpec::from_param_poly(const QPoly& p) const {
  switch (kind_) {
    case FieldKind::Rationals:
      if (!p.is_constant()) throw Error("nonconstant value in the rational field");
      return p.is_zero() ? Rational(0) : p.coeff(0);
    case FieldKind::RationalFunctions: return RatFunc{p, QPoly(Rational(1))};
    case FieldKind::AlgebraicExtension: return reduce(p);
  }
  throw Error("unreachable");
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
  switch (kind_) {
    case FieldKind::Rationals: return std::get<Rational>(a) + std::get<Rational>(b);
    case FieldKind::RationalFunctions: {
      const RatFunc &x = as_rf(a), &y = as_rf(b);
      return reduce_fraction(x.num * y.den + y.num * x.den, x.den * y.den);
    }
    case FieldKind::AlgebraicExtension:
      return AlgElem{as_alg(a).residue + as_alg(b).residue};
  }
  throw Error("unreachable");
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
  switch (kind_) {
    case FieldKind::Rationals: return std::get<Rational>(a) * std::get<Rational>(b);
    case FieldKind::RationalFunctions: {
      const RatFunc &x = as_rf(a), &y = as_rf(b);
      return reduce_fraction(x.num * y.num, x.den * y.den);
    }
    case FieldKind::AlgebraicExtension:
      return reduce(as_alg(a).residue * as_alg(b).residue);
  }
  throw Error("unreachable");
}

FieldElement FieldSpec::neg(const FieldElement& a) const {
  switch (kind_) {
    case FieldKind::Rationals: return -std::get<Rational>(a);
    case FieldKind::RationalFunctions: return RatFunc{-as_rf(a).num, as_rf(a).den};
    case FieldKind::AlgebraicExtension: return AlgElem{-as_alg(a).residue};
  }
  throw Error("unreachable");
}

FieldElement FieldSpec::invert(const FieldElement& a) const {
  if (is_zero(a)) throw DivisionByZero();
  switch (kind_) {
    case FieldKind::Rationals: return std::get<Rational>(a).inverse();
    case FieldKind::RationalFunctions: {
      const RatFunc& x = as_rf(a);
      return reduce_fraction(x.den, x.num);
    }
    case FieldKind::AlgebraicExtension: {
      const QPoly& r = as_alg(a).residue;
      auto [g, u, v] = QPoly::xgcd(r, modulus_);
      (void)v;
      if (g.degree() > 0) throw ZeroDivisorError(g);  // proper common factor
      // u*r + v*m = 1, so u is the inverse mod m.
      return reduce(u);
    }
  }
  throw Error("unreachable");
}

FieldElement FieldSpec::div(const FieldElement& a, const FieldElement& b) const {
  return mul(a, invert(b));
}

bool FieldSpec::is_zero(const FieldElement& a) const {
  switch (kind_) {
    case FieldKind::Rationals: return std::get<Rational>(a).is_zero();
    case FieldKind::RationalFunctions: return as_rf(a).num.is_zero();
    case FieldKind::AlgebraicExtension: return as_alg(a).residue.is_zero();
  }
  throw Error("unreachable");
}

bool FieldSpec::is_one(const FieldElement& a) const {
  switch (kind_) {
    case FieldKind::Rationals: return std::get<Rational>(a).is_one();
    case FieldKind::RationalFunctions:
      return as_rf(a).num.is_one() && as_rf(a).den.is_one();
    case FieldKind::AlgebraicExtension: return as_alg(a).residue.is_one();
  }
  throw Error("unreachable");
}

bool FieldSpec::equal(const FieldElement& a, const FieldElement& b) const {
  return a == b;  // canonical forms make representational equality semantic
}

namespace {
int cmp_qpoly(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) < b.coeff(i)) return -1;
    if (b.coeff(i) < a.coeff(i)) return 1;
  }
  return 0;
}
}  // namespace

int FieldSpec::cmp(const FieldElement& a, const FieldElement& b) const {
  switch (kind_) {
    case FieldKind::Rationals: {
      const Rational &x = std::get<Rational>(a), &y = std::get<Rational>(b);
      return x < y ? -1 : (y < x ? 1 : 0);
    }
    case FieldKind::RationalFunctions: {
      int c = cmp_qpoly(as_rf(a).den, as_rf(b).den);
      if (c) return c;
      return cmp_qpoly(as_rf(a).num, as_rf(b).num);
    }
    case FieldKind::AlgebraicExtension:
      return cmp_qpoly(as_alg(a).residue, as_alg(b).residue);
  }
  throw Error("unreachable");
}

bool FieldSpec::is_rational(const FieldElement& a) const {
  switch (kind_) {
    case FieldKind::Rationals: return true;
    case FieldKind::RationalFunctions:
      return as_rf(a).num.is_constant() && as_rf(a).den.is_one();
    case FieldKind::AlgebraicExtension: return as_alg(a).residue.is_constant();
  }
  throw Error("unreachable");
}

Rational FieldSpec::to_rational(const FieldElement& a) const {
  if (!is_rational(a)) throw Error("field element is not a rational constant");
  switch (kind_) {
    case FieldKind::Rationals: return std::get<Rational>(a);
    case FieldKind::RationalFunctions: {
      const QPoly& n = as_rf(a).num;
      return n.is_zero() ? Rational(0) : n.coeff(0);
    }
    case FieldKind::AlgebraicExtension: {
      const QPoly& r = as_alg(a).residue;
      return r.is_zero() ? Rational(0) : r.coeff(0);
    }
  }
  throw Error("unreachable");
}

std::string FieldSpec::str(const FieldElement& a) const {
  switch (kind_) {
    case FieldKind::Rationals: return std::get<Rational>(a).str();
    case FieldKind::RationalFunctions: {
      const RatFunc& x = as_rf(a);
      if (x.den.is_one()) return x.num.str(param_);
      return "(" + x.num.str(param_) + ")/(" + x.den.str(param_) + ")";
    }
    case FieldKind::AlgebraicExtension: return as_alg(a).residue.str(param_);
  }
  throw Error("unreachable");
}

bool FieldSpec::operator==(const FieldSpec& o) const {
  return kind_ == o.kind_ && param_ == o.param_ && modulus_ == o.modulus_;
}

}  // namespace critinf
