#include "critinf/polynomial.hpp"

#include <algorithm>

namespace critinf {

Polynomial Polynomial::constant(RingPtr ring, FieldElement c) {
  Polynomial p(ring);
  if (!ring->field()->is_zero(c))
    p.terms_.emplace_back(Monomial(ring->nvars()), std::move(c));
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  FieldElement fe = ring->field()->from_rational(c);
  return constant(std::move(ring), std::move(fe));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->nvars()) throw Error("variable index out of range");
  Polynomial p(ring);
  p.terms_.emplace_back(Monomial(ring->nvars()).with_exp(i, 1), ring->field()->one());
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::map<Monomial, FieldElement> acc;
  const auto& F = *ring->field();
  for (auto& [m, c] : terms) {
    if (m.nvars() != ring->nvars()) throw Error("term arity mismatch");
    auto it = acc.find(m);
    if (it == acc.end()) acc.emplace(m, std::move(c));
    else it->second = F.add(it->second, c);
  }
  Polynomial p(std::move(ring));
  for (auto& [m, c] : acc)
    if (!F.is_zero(c)) p.terms_.emplace_back(m, std::move(c));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

FieldElement Polynomial::constant_value() const {
  if (terms_.empty()) return ring_->field()->zero();
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_[0].second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg());
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
  return terms_.empty() ? -1 : d;
}

int Polynomial::degree_in_vars(const std::vector<std::size_t>& vars) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int e = 0;
    for (std::size_t v : vars) e += m.exp(v);
    d = std::max(d, e);
  }
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m.exp(var) > 0) return true;
  return false;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (ring_ == o.ring_) return;
  if (!ring_->same_structure(*o.ring_)) throw Error("ring mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  const auto& F = *ring_->field();
  for (auto& [m, c] : r.terms_) c = F.neg(c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(o);
  const auto& F = *ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      FieldElement c = F.add(terms_[i].second, o.terms_[j].second);
      if (!F.is_zero(c)) r.terms_.emplace_back(terms_[i].first, std::move(c));
      ++i; ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(o);
  const auto& F = *ring_->field();
  std::map<Monomial, FieldElement> acc;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma * mb;
      FieldElement c = F.mul(ca, cb);
      auto it = acc.find(m);
      if (it == acc.end()) acc.emplace(std::move(m), std::move(c));
      else it->second = F.add(it->second, c);
    }
  }
  Polynomial r(ring_);
  for (auto& [m, c] : acc)
    if (!F.is_zero(c)) r.terms_.emplace_back(m, std::move(c));
  return r;
}

Polynomial Polynomial::scale(const FieldElement& c) const {
  const auto& F = *ring_->field();
  if (F.is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& [m, a] : terms_) {
    FieldElement prod = F.mul(a, c);
    if (!F.is_zero(prod)) r.terms_.emplace_back(m, std::move(prod));
  }
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const FieldElement& c) const {
  const auto& F = *ring_->field();
  if (F.is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& [mm, a] : terms_) {
    FieldElement prod = F.mul(a, c);
    if (!F.is_zero(prod)) r.terms_.emplace_back(mm * m, std::move(prod));
  }
  // multiplying by a fixed monomial preserves the canonical term order
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ring_, ring_->field()->one());
  Polynomial base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_->same_structure(*o.ring_)) return false;
  return terms_ == o.terms_;
}

const Polynomial::Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (order.cmp(t.first, best->first) > 0) best = &t;
  return *best;
}

std::vector<Polynomial::Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
  std::vector<Term> v = terms_;
  std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) {
    return order.cmp(a.first, b.first) > 0;
  });
  return v;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  const auto& F = *ring_->field();
  const FieldElement& lc = leading_term(order).second;
  if (F.is_one(lc)) return *this;
  return scale(F.invert(lc));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw Error("variable index out of range");
  const auto& F = *ring_->field();
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    int e = m.exp(var);
    if (e == 0) continue;
    FieldElement nc = F.mul(c, F.from_rational(Rational(e)));
    if (!F.is_zero(nc)) r.terms_.emplace_back(m.with_exp(var, e - 1), std::move(nc));
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  return r;
}

Polynomial Polynomial::substitute(const std::map<std::size_t, Polynomial>& assign) const {
  for (const auto& [v, p] : assign) {
    if (v >= ring_->nvars()) throw Error("substitution target out of range");
    p.check_same_ring(*this);
  }
  // Precompute powers of each replacement up to the largest exponent used.
  std::map<std::size_t, std::vector<Polynomial>> powers;
  for (const auto& [v, p] : assign) {
    int maxe = 0;
    for (const auto& [m, c] : terms_) maxe = std::max(maxe, m.exp(v));
    std::vector<Polynomial> pw;
    pw.push_back(constant(ring_, ring_->field()->one()));
    for (int e = 1; e <= maxe; ++e) pw.push_back(pw.back() * p);
    powers.emplace(v, std::move(pw));
  }
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial base = m;
    for (const auto& [v, pw] : powers) base = base.with_exp(v, 0);
    Polynomial term(ring_);
    term.terms_.emplace_back(base, c);
    for (const auto& [v, pw] : powers) {
      int e = m.exp(v);
      if (e > 0) term = term * pw[static_cast<std::size_t>(e)];
    }
    out = out + term;
  }
  return out;
}

std::vector<std::pair<int, Polynomial>> Polynomial::homogeneous_parts() const {
  std::map<int, Polynomial, std::greater<int>> buckets;
  for (const auto& [m, c] : terms_) {
    auto it = buckets.find(m.deg());
    if (it == buckets.end()) it = buckets.emplace(m.deg(), Polynomial(ring_)).first;
    it->second.terms_.emplace_back(m, c);
  }
  std::vector<std::pair<int, Polynomial>> out;
  for (auto& [d, p] : buckets) {
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    out.emplace_back(d, std::move(p));
  }
  return out;
}

Polynomial Polynomial::homogenize(std::size_t zvar,
                                  const std::vector<std::size_t>* weight_one) const {
  if (involves(zvar)) throw VariableOccurs(ring_->var(zvar));
  if (terms_.empty()) return *this;
  auto wdeg = [&](const Monomial& m) {
    if (!weight_one) return m.deg() - m.exp(zvar);
    int d = 0;
    for (std::size_t v : *weight_one) d += m.exp(v);
    return d;
  };
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, wdeg(m));
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_)
    r.terms_.emplace_back(m.with_exp(zvar, d - wdeg(m)), c);
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  return r;
}

Polynomial Polynomial::coefficient_of(std::size_t var, int k) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_)
    if (m.exp(var) == k) r.terms_.emplace_back(m.with_exp(var, 0), c);
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  return r;
}

std::optional<std::size_t> Polynomial::sole_variable() const {
  std::optional<std::size_t> found;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m.exp(i) == 0) continue;
      if (found && *found != i) return std::nullopt;
      found = i;
    }
  }
  return found;
}

Polynomial Polynomial::map_to_ring(const RingPtr& target) const {
  const auto& FS = *ring_->field();
  const auto& FT = *target->field();
  std::vector<std::size_t> where(ring_->nvars(), RingSpec::npos);
  for (std::size_t i = 0; i < ring_->nvars(); ++i)
    where[i] = target->index_of(ring_->var(i));
  bool same_field = (FS == FT);
  if (!same_field && FS.kind() != FieldKind::Rationals)
    throw Error("cannot transfer coefficients between different parametric fields");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial mm(target->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (m.exp(i) == 0) continue;
      if (where[i] == RingSpec::npos)
        throw Error("variable '" + ring_->var(i) + "' absent in target ring");
      mm = mm.with_exp(where[i], m.exp(i));
    }
    FieldElement cc = same_field ? c : FT.from_rational(std::get<Rational>(c));
    terms.emplace_back(std::move(mm), std::move(cc));
  }
  return from_terms(target, std::move(terms));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  const auto& F = *ring_->field();
  std::string out;
  for (const auto& [m, c] : sorted_terms(ring_->order())) {
    std::string mon;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m.exp(i) == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += ring_->var(i);
      if (m.exp(i) > 1) mon += "^" + std::to_string(m.exp(i));
    }
    std::string coef;
    bool neg = false;
    if (F.is_rational(c)) {
      Rational r = F.to_rational(c);
      neg = r.sign() < 0;
      Rational a = neg ? -r : r;
      coef = (a.is_one() && !mon.empty()) ? "" : a.str();
    } else {
      coef = "(" + F.str(c) + ")";
    }
    std::string term = coef;
    if (!mon.empty()) {
      if (!term.empty()) term += "*";
      term += mon;
    }
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? "-" : "+") + term;
  }
  return out;
}

Polynomial promote_var_to_param(const Polynomial& f, std::size_t svar,
                                const RingPtr& target) {
  const auto& src = *f.ring();
  const auto& FT = *target->field();
  if (!FT.has_param() || FT.param() != src.var(svar))
    throw Error("target field parameter must match the promoted variable");
  std::vector<Polynomial::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    Monomial mm(target->nvars());
    for (std::size_t i = 0; i < src.nvars(); ++i) {
      if (i == svar || m.exp(i) == 0) continue;
      std::size_t j = target->index_of(src.var(i));
      if (j == RingSpec::npos)
        throw Error("variable '" + src.var(i) + "' absent in target ring");
      mm = mm.with_exp(j, m.exp(i));
    }
    QPoly spow = QPoly::monomial(m.exp(svar), std::get<Rational>(c));
    terms.emplace_back(std::move(mm), FT.from_param_poly(spow));
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace critinf
