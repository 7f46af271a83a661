#include "critinf/upoly.hpp"

#include <algorithm>

namespace critinf {

UPoly::UPoly(FieldPtr field, std::vector<FieldElement> coeffs)
    : F_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && F_->is_zero(c_.back())) c_.pop_back();
}

UPoly UPoly::constant(FieldPtr field, const Rational& c) {
  FieldElement fe = field->from_rational(c);
  return UPoly(std::move(field), {std::move(fe)});
}

UPoly UPoly::variable(FieldPtr field) {
  std::vector<FieldElement> v{field->zero(), field->one()};
  return UPoly(std::move(field), std::move(v));
}

bool UPoly::is_one() const { return c_.size() == 1 && F_->is_one(c_[0]); }

const FieldElement& UPoly::lc() const {
  if (c_.empty()) throw Error("lc of zero polynomial");
  return c_.back();
}

FieldElement UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return F_->zero();
  return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = F_->neg(c);
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<FieldElement> v(std::max(c_.size(), o.c_.size()), F_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] = F_->add(v[i], o.c_[i]);
  return UPoly(F_, std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(F_);
  std::vector<FieldElement> v(c_.size() + o.c_.size() - 1, F_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      v[i + j] = F_->add(v[i + j], F_->mul(c_[i], o.c_[j]));
  return UPoly(F_, std::move(v));
}

UPoly UPoly::scale(const FieldElement& a) const {
  if (F_->is_zero(a)) return UPoly(F_);
  UPoly r = *this;
  for (auto& c : r.c_) c = F_->mul(c, a);
  r.trim();
  return r;
}

bool UPoly::operator==(const UPoly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!F_->equal(c_[i], o.c_[i])) return false;
  return true;
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const auto& F = *a.F_;
  UPoly r = a;
  if (a.degree() < b.degree()) return {UPoly(a.F_), r};
  std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, F.zero());
  FieldElement inv_lc = F.invert(b.lc());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    FieldElement c = F.mul(r.lc(), inv_lc);
    q[static_cast<std::size_t>(k)] = c;
    for (int i = 0; i <= b.degree(); ++i) {
      auto& rc = r.c_[static_cast<std::size_t>(i + k)];
      rc = F.sub(rc, F.mul(c, b.c_[static_cast<std::size_t>(i)]));
    }
    r.trim();
  }
  return {UPoly(a.F_, std::move(q)), r};
}

UPoly UPoly::div_exact(const UPoly& a, const UPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly f = a, g = b;
  while (!g.is_zero()) {
    UPoly r = divrem(f, g).second;
    f = std::move(g);
    g = r.monic();
  }
  return f.monic();
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scale(F_->invert(lc()));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(F_);
  std::vector<FieldElement> v(c_.size() - 1, F_->zero());
  for (std::size_t i = 1; i < c_.size(); ++i)
    v[i - 1] = F_->mul(c_[i], F_->from_rational(Rational(static_cast<long>(i))));
  return UPoly(F_, std::move(v));
}

FieldElement UPoly::eval(const FieldElement& x) const {
  FieldElement acc = F_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, x), c_[i]);
  return acc;
}

UPoly UPoly::squarefree_part() const {
  if (is_zero()) throw Error("squarefree part of zero polynomial");
  if (is_constant()) return UPoly::constant(F_, Rational(1));
  UPoly g = gcd(*this, derivative());
  return div_exact(*this, g).monic();
}

FieldElement UPoly::resultant(const UPoly& o) const {
  const auto& F = *F_;
  UPoly f = *this, g = o;
  if (f.is_zero() || g.is_zero()) return F.zero();
  FieldElement acc = F.one();
  bool negate = false;
  while (g.degree() > 0) {
    UPoly r = divrem(f, g).second;
    if (r.is_zero()) return F.zero();
    int df = f.degree(), dg = g.degree(), dr = r.degree();
    if ((df & 1) && (dg & 1)) negate = !negate;
    // res(f,g) = (-1)^{df dg} lc(g)^{df-dr} res(g,r)
    FieldElement lcg = g.lc();
    for (int i = 0; i < df - dr; ++i) acc = F.mul(acc, lcg);
    f = std::move(g);
    g = std::move(r);
  }
  // g is a nonzero constant: res(f, g) = g^{deg f}
  FieldElement c = g.c_[0];
  for (int i = 0; i < f.degree(); ++i) acc = F.mul(acc, c);
  return negate ? F.neg(acc) : acc;
}

FieldElement UPoly::discriminant() const {
  if (degree() < 1) throw Error("discriminant needs degree >= 1");
  FieldElement r = resultant(derivative());
  FieldElement d = F_->div(r, lc());
  // (-1)^{d(d-1)/2}: the classical sign that makes disc(t^2+bt+c) = b^2-4c
  int deg4 = degree() % 4;
  return (deg4 == 2 || deg4 == 3) ? F_->neg(d) : d;
}

UPoly UPoly::from_polynomial(const Polynomial& p, std::size_t var) {
  const auto& ring = *p.ring();
  std::vector<FieldElement> c(static_cast<std::size_t>(std::max(0, p.degree_in(var))) + 1,
                              ring.field()->zero());
  for (const auto& [m, fe] : p.terms()) {
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (i != var && m.exp(i) != 0)
        throw Error("polynomial is not univariate in '" + ring.var(var) + "'");
    c[static_cast<std::size_t>(m.exp(var))] = fe;
  }
  if (p.is_zero()) c.clear();
  return UPoly(ring.field(), std::move(c));
}

Polynomial UPoly::to_polynomial(const RingPtr& ring, std::size_t var) const {
  std::vector<Polynomial::Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (F_->is_zero(c_[i])) continue;
    terms.emplace_back(Monomial(ring->nvars()).with_exp(var, static_cast<int>(i)), c_[i]);
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

namespace {

// Rational roots of a squarefree rational-coefficient polynomial, via the
// rational root theorem on the primitive integer form.
std::vector<Rational> rational_roots(const UPoly& f) {
  const auto& F = *f.field();
  std::vector<Rational> roots;
  if (f.degree() < 1) return roots;
  UPoly g = f;
  if (F.is_zero(g.coeff(0))) {
    roots.emplace_back(0);
    g = UPoly::div_exact(g, UPoly::variable(f.field()));
  }
  if (g.degree() < 1) return roots;
  // integer-clear
  mpz_class den_lcm = 1;
  for (int i = 0; i <= g.degree(); ++i)
    den_lcm = lcm(den_lcm, F.to_rational(g.coeff(i)).den());
  mpz_class a0 = F.to_rational(g.coeff(0)).num() * (den_lcm / F.to_rational(g.coeff(0)).den());
  mpz_class ad = F.to_rational(g.lc()).num() * (den_lcm / F.to_rational(g.lc()).den());
  for (const auto& p : positive_divisors(a0)) {
    for (const auto& q : positive_divisors(ad)) {
      if (::gcd(p, q) != 1) continue;
      for (int sign : {1, -1}) {
        Rational cand(mpq_class(sign * p, q));
        if (F.to_rational(g.eval(F.from_rational(cand))).is_zero())
          roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// Yun's squarefree decomposition (characteristic zero): returns monic
// pairwise-coprime squarefree factors with their multiplicities.
std::vector<std::pair<UPoly, int>> yun(const UPoly& f0) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly f = f0.monic();
  if (f.degree() < 1) return out;
  UPoly fp = f.derivative();
  UPoly g = UPoly::gcd(f, fp);
  UPoly b = UPoly::div_exact(f, g);
  UPoly c = UPoly::div_exact(fp, g);
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UPoly a = UPoly::gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = UPoly::div_exact(b, a);
    c = UPoly::div_exact(d, a);
    d = c - b.derivative();
  }
  return out;
}

bool upoly_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& F = *a.field();
  for (int i = a.degree(); i >= 0; --i) {
    int c = F.cmp(a.coeff(i), b.coeff(i));
    if (c) return c < 0;
  }
  return false;
}

}  // namespace

std::vector<std::pair<UPoly, int>> factor_squarefree(const UPoly& a) {
  if (a.is_zero()) throw Error("cannot factor the zero polynomial");
  std::vector<std::pair<UPoly, int>> out;
  bool over_q = a.field()->kind() == FieldKind::Rationals;
  for (auto& [g, mult] : yun(a)) {
    if (!over_q) { out.emplace_back(g, mult); continue; }
    UPoly rest = g;
    for (const Rational& r : rational_roots(g)) {
      std::vector<FieldElement> lin{a.field()->from_rational(-r), a.field()->one()};
      UPoly factor(a.field(), std::move(lin));
      out.emplace_back(factor, mult);
      rest = UPoly::div_exact(rest, factor);
    }
    if (rest.degree() > 0) out.emplace_back(rest.monic(), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second < y.second;
    return upoly_less(x.first, y.first);
  });
  return out;
}

std::vector<UPoly> coprime_refinement(std::vector<UPoly> polys) {
  std::vector<UPoly> work;
  for (auto& p : polys)
    if (p.degree() > 0) work.push_back(p.monic());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
        UPoly g = UPoly::gcd(work[i], work[j]);
        if (g.degree() == 0) continue;
        UPoly qi = UPoly::div_exact(work[i], g);
        UPoly qj = UPoly::div_exact(work[j], g);
        std::vector<UPoly> next;
        for (std::size_t k = 0; k < work.size(); ++k)
          if (k != i && k != j) next.push_back(work[k]);
        if (qi.degree() > 0) next.push_back(qi.monic());
        if (qj.degree() > 0) next.push_back(qj.monic());
        next.push_back(g);
        work = std::move(next);
        changed = true;
      }
    }
  }
  // drop duplicates (equal factors collapse)
  std::sort(work.begin(), work.end(), upoly_less);
  work.erase(std::unique(work.begin(), work.end(),
                         [](const UPoly& x, const UPoly& y) { return x == y; }),
             work.end());
  return work;
}

namespace {

std::size_t pick_variable(const Polynomial& a, const Polynomial& b) {
  auto va = a.sole_variable(), vb = b.sole_variable();
  if (va && vb && *va != *vb) throw Error("polynomials univariate in different variables");
  if (va) return *va;
  if (vb) return *vb;
  return 0;  // both constant; any variable slot works
}

}  // namespace

Polynomial univ_gcd(const Polynomial& a, const Polynomial& b) {
  std::size_t v = pick_variable(a, b);
  UPoly ua = UPoly::from_polynomial(a, v), ub = UPoly::from_polynomial(b, v);
  return UPoly::gcd(ua, ub).to_polynomial(a.ring(), v);
}

Polynomial squarefree_part(const Polynomial& a) {
  if (a.is_zero()) throw Error("squarefree part of zero polynomial");
  std::size_t v = a.sole_variable().value_or(0);
  UPoly ua = UPoly::from_polynomial(a, v);
  return ua.squarefree_part().to_polynomial(a.ring(), v);
}

Polynomial discriminant(const Polynomial& a, std::size_t tvar) {
  const RingPtr& ring = a.ring();
  if (a.degree_in(tvar) < 1) throw Error("discriminant needs positive degree in t");
  // find the (single) other variable occurring, if any
  std::size_t other = RingSpec::npos;
  for (const auto& [m, c] : a.terms())
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (i != tvar && m.exp(i) > 0) {
        if (other != RingSpec::npos && other != i)
          throw Error("discriminant supports at most one coefficient variable");
        other = i;
      }
  if (other == RingSpec::npos) {
    UPoly u = UPoly::from_polynomial(a, tvar);
    return Polynomial::constant(ring, u.discriminant());
  }
  // coefficients in Q[s]: compute over Q(s) and return the polynomial value
  FieldPtr K = FieldSpec::rational_functions(ring->var(other));
  std::vector<FieldElement> coeffs;
  for (int k = 0; k <= a.degree_in(tvar); ++k) {
    Polynomial ck = a.coefficient_of(tvar, k);
    QPoly q;
    for (const auto& [m, c] : ck.terms())
      q = q + QPoly::monomial(m.exp(other), std::get<Rational>(c));
    coeffs.push_back(K->from_param_poly(q));
  }
  UPoly u(K, std::move(coeffs));
  FieldElement d = u.discriminant();
  const RatFunc& rf = std::get<RatFunc>(d);
  if (rf.den.degree() > 0) throw Error("discriminant of polynomial input must be polynomial");
  QPoly numer = rf.num.scale(rf.den.coeff(0).inverse());
  std::vector<Polynomial::Term> terms;
  for (int i = 0; i <= numer.degree(); ++i)
    if (!numer.coeff(i).is_zero())
      terms.emplace_back(Monomial(ring->nvars()).with_exp(other, i),
                         ring->field()->from_rational(numer.coeff(i)));
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<std::pair<Polynomial, int>> factor_squarefree(const Polynomial& a) {
  if (a.is_zero()) throw Error("cannot factor the zero polynomial");
  std::size_t v = a.sole_variable().value_or(0);
  UPoly ua = UPoly::from_polynomial(a, v);
  std::vector<std::pair<Polynomial, int>> out;
  for (const auto& [f, mult] : factor_squarefree(ua))
    out.emplace_back(f.to_polynomial(a.ring(), v), mult);
  return out;
}

}  // namespace critinf
