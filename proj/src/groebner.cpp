#include "critinf/groebner.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>

namespace critinf {

Ideal Ideal::make(RingPtr ring, std::vector<Polynomial> gens) {
  Ideal I{std::move(ring), {}};
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.ring()->same_structure(*I.ring)) throw Error("generator in wrong ring");
    I.gens.push_back(std::move(g));
  }
  return I;
}

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elems)
    : ring_(std::move(ring)), order_(std::move(order)), elems_(std::move(elems)) {
  lms_.reserve(elems_.size());
  for (const auto& g : elems_) lms_.push_back(g.leading_term(order_).first);
}

bool GroebnerBasis::is_unit_ideal() const {
  return elems_.size() == 1 && elems_[0].is_constant();
}

bool GroebnerBasis::same_basis(const GroebnerBasis& o) const {
  if (elems_.size() != o.elems_.size()) return false;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i] != o.elems_[i]) return false;
  return true;
}

namespace {

using Term = Polynomial::Term;

struct OrderGreater {
  const MonomialOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return ord->cmp(a, b) > 0;
  }
};

// ------------------------------------------------------------------
// Integer engine (coefficients in Q): basis elements are primitive with
// positive leading coefficient; reduction is fraction-free and tracks the
// accumulated scalar multiplier.
// ------------------------------------------------------------------

struct ZPoly {
  std::vector<std::pair<Monomial, mpz_class>> terms;  // descending in the order
  const Monomial& lm() const { return terms.front().first; }
  const mpz_class& lc() const { return terms.front().second; }
};

using ZWork = std::map<Monomial, mpz_class, OrderGreater>;

void zstrip_content(ZPoly& p) {
  if (p.terms.empty()) return;
  mpz_class g = 0;
  for (const auto& [m, c] : p.terms) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  if (p.terms.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [m, c] : p.terms) c /= g;
}

ZPoly zfrom_polynomial(const Polynomial& f, const MonomialOrder& ord) {
  const auto& F = *f.ring()->field();
  mpz_class den_lcm = 1;
  for (const auto& [m, c] : f.terms())
    den_lcm = lcm(den_lcm, F.to_rational(c).den());
  ZPoly p;
  for (const auto& [m, c] : f.sorted_terms(ord)) {
    Rational r = F.to_rational(c);
    p.terms.emplace_back(m, mpz_class(r.num() * (den_lcm / r.den())));
  }
  zstrip_content(p);
  return p;
}

Polynomial zto_polynomial(const RingPtr& ring, const ZPoly& p, bool monic) {
  const auto& F = *ring->field();
  std::vector<Term> terms;
  terms.reserve(p.terms.size());
  mpq_class inv(1);
  if (monic && !p.terms.empty()) inv = mpq_class(1) / mpq_class(p.lc());
  for (const auto& [m, c] : p.terms)
    terms.emplace_back(m, F.from_rational(Rational(mpq_class(c) * inv)));
  return Polynomial::from_terms(ring, std::move(terms));
}

// w := a*w  (a > 0)
void zscale(ZWork& w, const mpz_class& a) {
  if (a == 1) return;
  for (auto& [m, c] : w) c *= a;
}

// w -= q * X^shift * g
void zsub_mult(ZWork& w, const mpz_class& q, const Monomial& shift, const ZPoly& g) {
  for (const auto& [mg, cg] : g.terms) {
    Monomial m = mg * shift;
    auto it = w.find(m);
    if (it == w.end()) {
      w.emplace(std::move(m), mpz_class(-q * cg));
    } else {
      it->second -= q * cg;
      if (it->second == 0) w.erase(it);
    }
  }
}

// Fraction-free full reduction.  On return, `multiplier` holds the positive
// scalar by which the input was implicitly multiplied.
ZPoly zreduce_full(ZWork& w, const std::vector<ZPoly>& basis, mpz_class& multiplier) {
  multiplier = 1;
  ZPoly out;
  while (!w.empty()) {
    auto it = w.begin();
    const Monomial& m = it->first;
    const ZPoly* red = nullptr;
    for (const auto& g : basis)
      if (g.lm().divides(m)) { red = &g; break; }
    if (!red) {
      out.terms.emplace_back(it->first, it->second);
      w.erase(it);
      continue;
    }
    // basis leading coefficients are positive (stripped form)
    mpz_class h = it->second;
    const mpz_class& b = red->lc();
    mpz_class d = gcd(h, b);
    mpz_class a = b / d;  // > 0
    mpz_class q = h / d;
    if (a != 1) {
      zscale(w, a);
      for (auto& [mm, cc] : out.terms) cc *= a;
      multiplier *= a;
    }
    Monomial shift = m.divide_by(red->lm());
    zsub_mult(w, q, shift, *red);  // head: a*h - q*b = 0
  }
  return out;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

struct PairLess {
  const MonomialOrder* ord;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.lcm.deg() != b.lcm.deg()) return a.lcm.deg() < b.lcm.deg();
    int c = ord->cmp(a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::vector<Polynomial> buchberger_q(const Ideal& I, const MonomialOrder& order) {
  std::vector<ZPoly> basis;
  for (const auto& g : I.gens) {
    ZPoly p = zfrom_polynomial(g, order);
    if (!p.terms.empty()) basis.push_back(std::move(p));
  }

  // interreduce the input
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      ZPoly p = std::move(basis[i]);
      basis.erase(basis.begin() + static_cast<long>(i));
      ZWork w{OrderGreater{&order}};
      for (auto& [m, c] : p.terms) w.emplace(m, c);
      mpz_class lambda;
      ZPoly r = zreduce_full(w, basis, lambda);
      zstrip_content(r);
      if (!(r.terms == p.terms)) changed = true;
      if (!r.terms.empty()) {
        basis.insert(basis.begin() + static_cast<long>(i), std::move(r));
      } else {
        --i;
      }
    }
  }

  std::set<Pair, PairLess> queue{PairLess{&order}};
  auto push_pairs_for = [&](std::size_t t) {
    for (std::size_t i = 0; i < t; ++i)
      queue.insert(Pair{i, t, Monomial::lcm(basis[i].lm(), basis[t].lm())});
  };
  for (std::size_t t = 0; t < basis.size(); ++t) push_pairs_for(t);

  long npop = 0, nred = 0;
  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    ++npop;
    if (getenv("GB_STATS") && npop % 200 == 0) {
      size_t maxterms = 0, maxbits = 0;
      for (auto& g : basis) { maxterms = std::max(maxterms, g.terms.size());
        for (auto& [m,c] : g.terms) maxbits = std::max(maxbits, mpz_sizeinbase(c.get_mpz_t(), 2)); }
      fprintf(stderr, "[gb] pops=%ld red=%ld basis=%zu queue=%zu maxterms=%zu maxbits=%zu lcmdeg=%d\n",
              npop, nred, basis.size(), queue.size(), maxterms, maxbits, pr.lcm.deg());
    }
    const Monomial &lmi = basis[pr.i].lm(), &lmj = basis[pr.j].lm();
    if (lmi.coprime(lmj)) continue;  // product criterion

    bool superfluous = false;  // chain criterion
    for (std::size_t k = 0; k < basis.size() && !superfluous; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].lm().divides(pr.lcm)) continue;
      if (Monomial::lcm(lmi, basis[k].lm()) != pr.lcm &&
          Monomial::lcm(lmj, basis[k].lm()) != pr.lcm)
        superfluous = true;
    }
    if (superfluous) continue;

    // integer S-polynomial
    ZWork w{OrderGreater{&order}};
    {
      const ZPoly &gi = basis[pr.i], &gj = basis[pr.j];
      mpz_class d = gcd(gi.lc(), gj.lc());
      mpz_class ci = gj.lc() / d, cj = gi.lc() / d;
      Monomial si = pr.lcm.divide_by(gi.lm()), sj = pr.lcm.divide_by(gj.lm());
      for (const auto& [m, c] : gi.terms) {
        Monomial mm = m * si;
        mpz_class v = ci * c;
        auto it = w.find(mm);
        if (it == w.end()) w.emplace(std::move(mm), std::move(v));
        else { it->second += v; if (it->second == 0) w.erase(it); }
      }
      for (const auto& [m, c] : gj.terms) {
        Monomial mm = m * sj;
        mpz_class v = -cj * c;
        auto it = w.find(mm);
        if (it == w.end()) w.emplace(std::move(mm), std::move(v));
        else { it->second += v; if (it->second == 0) w.erase(it); }
      }
    }
    mpz_class lambda;
    ++nred;
    ZPoly r = zreduce_full(w, basis, lambda);
    if (r.terms.empty()) continue;
    zstrip_content(r);
    basis.push_back(std::move(r));
    push_pairs_for(basis.size() - 1);
  }

  // minimalize
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].lm().divides(basis[i].lm()))
        if (basis[j].lm() != basis[i].lm() || j < i) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }

  // tail-reduce, then hand back monic rational polynomials
  std::vector<Polynomial> out;
  for (std::size_t idx : keep) {
    std::vector<ZPoly> others;
    for (std::size_t jdx : keep)
      if (jdx != idx) others.push_back(basis[jdx]);
    ZWork w{OrderGreater{&order}};
    for (const auto& [m, c] : basis[idx].terms) w.emplace(m, c);
    mpz_class lambda;
    ZPoly r = zreduce_full(w, others, lambda);
    if (r.terms.empty()) continue;
    zstrip_content(r);
    out.push_back(zto_polynomial(I.ring, r, true));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.cmp(a.leading_term(order).first, b.leading_term(order).first) < 0;
  });
  return out;
}

Polynomial znormal_form(const Polynomial& f, const GroebnerBasis& G) {
  const MonomialOrder& order = G.order();
  const auto& F = *G.ring()->field();
  std::vector<ZPoly> basis;
  for (const auto& g : G.elements()) basis.push_back(zfrom_polynomial(g, order));

  mpz_class den_lcm = 1;
  for (const auto& [m, c] : f.terms())
    den_lcm = lcm(den_lcm, F.to_rational(c).den());
  ZWork w{OrderGreater{&order}};
  for (const auto& [m, c] : f.terms()) {
    Rational r = F.to_rational(c);
    w.emplace(m, mpz_class(r.num() * (den_lcm / r.den())));
  }
  mpz_class lambda;
  ZPoly r = zreduce_full(w, basis, lambda);
  // the true remainder is r / (den_lcm * lambda)
  mpq_class scale = mpq_class(1) / mpq_class(den_lcm * lambda);
  std::vector<Term> terms;
  for (const auto& [m, c] : r.terms)
    terms.emplace_back(m, F.from_rational(Rational(mpq_class(c) * scale)));
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

// ------------------------------------------------------------------
// Generic field engine (Q(s), Q[s]/(m)): exact division by leading
// coefficients.  The desk-scale parametric inputs stay small.
// ------------------------------------------------------------------

struct FBasisElem {
  std::vector<Term> terms;  // descending
  Monomial lm;
  FieldElement lc_inv;
  FBasisElem(std::vector<Term> t, FieldElement inv)
      : terms(std::move(t)), lm(terms.front().first), lc_inv(std::move(inv)) {}
};

using FWork = std::map<Monomial, FieldElement, OrderGreater>;

void fsub_mult(FWork& f, const FieldElement& c, const Monomial& shift,
               const FBasisElem& g, const FieldSpec& F) {
  for (const auto& [mg, cg] : g.terms) {
    Monomial m = mg * shift;
    FieldElement delta = F.mul(c, cg);
    auto it = f.find(m);
    if (it == f.end()) {
      f.emplace(std::move(m), F.neg(delta));
    } else {
      it->second = F.sub(it->second, delta);
      if (F.is_zero(it->second)) f.erase(it);
    }
  }
}

std::vector<Term> freduce_full(FWork& w, const std::vector<FBasisElem>& basis,
                               const FieldSpec& F) {
  std::vector<Term> out;
  while (!w.empty()) {
    auto it = w.begin();
    const Monomial& m = it->first;
    const FBasisElem* red = nullptr;
    for (const auto& g : basis)
      if (g.lm.divides(m)) { red = &g; break; }
    if (!red) {
      out.emplace_back(it->first, it->second);
      w.erase(it);
      continue;
    }
    FieldElement c = F.mul(it->second, red->lc_inv);
    Monomial shift = m.divide_by(red->lm);
    fsub_mult(w, c, shift, *red, F);
  }
  return out;
}

Polynomial from_terms_desc(const RingPtr& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Polynomial> buchberger_field(const Ideal& I, const MonomialOrder& order) {
  const FieldSpec& F = *I.ring->field();
  std::vector<FBasisElem> basis;
  auto add_elem = [&](const Polynomial& p) {
    std::vector<Term> t = p.sorted_terms(order);
    FieldElement inv = F.invert(t.front().second);
    basis.emplace_back(std::move(t), std::move(inv));
  };

  {
    std::vector<Polynomial> seed = I.gens;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < seed.size(); ++i) {
        Polynomial p = seed[i];
        seed.erase(seed.begin() + static_cast<long>(i));
        std::vector<FBasisElem> others;
        for (const auto& q : seed) {
          std::vector<Term> t = q.sorted_terms(order);
          others.emplace_back(t, F.invert(t.front().second));
        }
        FWork w{OrderGreater{&order}};
        for (const auto& [m, c] : p.terms()) w.emplace(m, c);
        Polynomial r = from_terms_desc(I.ring, freduce_full(w, others, F));
        if (r != p) changed = true;
        if (!r.is_zero())
          seed.insert(seed.begin() + static_cast<long>(i), r);
        else
          --i;
      }
    }
    for (const auto& g : seed) add_elem(g);
  }

  std::set<Pair, PairLess> queue{PairLess{&order}};
  auto push_pairs_for = [&](std::size_t t) {
    for (std::size_t i = 0; i < t; ++i)
      queue.insert(Pair{i, t, Monomial::lcm(basis[i].lm, basis[t].lm)});
  };
  for (std::size_t t = 0; t < basis.size(); ++t) push_pairs_for(t);

  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    const Monomial &lmi = basis[pr.i].lm, &lmj = basis[pr.j].lm;
    if (lmi.coprime(lmj)) continue;

    bool superfluous = false;
    for (std::size_t k = 0; k < basis.size() && !superfluous; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].lm.divides(pr.lcm)) continue;
      if (Monomial::lcm(lmi, basis[k].lm) != pr.lcm &&
          Monomial::lcm(lmj, basis[k].lm) != pr.lcm)
        superfluous = true;
    }
    if (superfluous) continue;

    FWork w{OrderGreater{&order}};
    {
      const FBasisElem &gi = basis[pr.i], &gj = basis[pr.j];
      Monomial si = pr.lcm.divide_by(gi.lm), sj = pr.lcm.divide_by(gj.lm);
      for (const auto& [m, c] : gi.terms) {
        FieldElement v = F.mul(c, gi.lc_inv);
        Monomial mm = m * si;
        auto it = w.find(mm);
        if (it == w.end()) w.emplace(std::move(mm), std::move(v));
        else { it->second = F.add(it->second, v); if (F.is_zero(it->second)) w.erase(it); }
      }
      for (const auto& [m, c] : gj.terms) {
        FieldElement v = F.neg(F.mul(c, gj.lc_inv));
        Monomial mm = m * sj;
        auto it = w.find(mm);
        if (it == w.end()) w.emplace(std::move(mm), std::move(v));
        else { it->second = F.add(it->second, v); if (F.is_zero(it->second)) w.erase(it); }
      }
    }
    std::vector<Term> rem = freduce_full(w, basis, F);
    if (rem.empty()) continue;
    FieldElement inv = F.invert(rem.front().second);
    for (auto& [m, c] : rem) c = F.mul(c, inv);
    basis.emplace_back(std::move(rem), F.one());
    push_pairs_for(basis.size() - 1);
  }

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].lm.divides(basis[i].lm))
        if (basis[j].lm != basis[i].lm || j < i) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }

  std::vector<Polynomial> out;
  for (std::size_t idx : keep) {
    std::vector<FBasisElem> others;
    for (std::size_t jdx : keep)
      if (jdx != idx) others.push_back(basis[jdx]);
    FWork w{OrderGreater{&order}};
    for (const auto& [m, c] : basis[idx].terms) w.emplace(m, c);
    std::vector<Term> rem = freduce_full(w, others, F);
    if (rem.empty()) continue;
    FieldElement inv = F.invert(rem.front().second);
    for (auto& [m, c] : rem) c = F.mul(c, inv);
    out.push_back(from_terms_desc(I.ring, std::move(rem)));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.cmp(a.leading_term(order).first, b.leading_term(order).first) < 0;
  });
  return out;
}

}  // namespace

GroebnerBasis groebner_basis(const Ideal& I, std::optional<MonomialOrder> order_opt) {
  const MonomialOrder order = order_opt.value_or(I.ring->order());
  std::vector<Polynomial> elems =
      (I.ring->field()->kind() == FieldKind::Rationals)
          ? buchberger_q(I, order)
          : buchberger_field(I, order);
  return GroebnerBasis(I.ring, order, std::move(elems));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (!f.ring()->same_structure(*G.ring())) throw Error("ring mismatch in normal_form");
  if (G.elements().empty()) return f;
  const FieldSpec& F = *G.ring()->field();
  if (F.kind() == FieldKind::Rationals) return znormal_form(f, G);
  std::vector<FBasisElem> basis;
  for (const auto& g : G.elements()) {
    std::vector<Term> t = g.sorted_terms(G.order());
    basis.emplace_back(t, F.invert(t.front().second));
  }
  FWork w{OrderGreater{&G.order()}};
  for (const auto& [m, c] : f.terms()) w.emplace(m, c);
  return from_terms_desc(f.ring(), freduce_full(w, basis, F));
}

bool is_member(const Polynomial& f, const Ideal& I) {
  if (f.is_zero()) return true;
  return normal_form(f, groebner_basis(I)).is_zero();
}

std::optional<std::size_t> quotient_dimension(const GroebnerBasis& G) {
  const std::size_t n = G.ring()->nvars();
  const auto& lms = G.leading_monomials();
  if (G.is_unit_ideal()) return 0;
  std::vector<int> bound(n, -1);
  for (const auto& m : lms)
    for (std::size_t i = 0; i < n; ++i)
      if (m.exp(i) == m.deg())  // pure power of variable i
        if (bound[i] < 0 || m.deg() < bound[i]) bound[i] = m.deg();
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] < 0) return std::nullopt;

  std::size_t count = 0;
  std::vector<int> exps(n, 0);
  for (;;) {
    Monomial m{std::vector<int>(exps)};
    bool divisible = false;
    for (const auto& lm : lms)
      if (lm.divides(m)) { divisible = true; break; }
    if (!divisible) ++count;
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (exps[i] + 1 < bound[i]) { ++exps[i]; break; }
      exps[i] = 0;
    }
    if (i == n) break;
  }
  return count;
}

std::optional<std::size_t> quotient_dimension(const Ideal& I) {
  return quotient_dimension(groebner_basis(I));
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& G) {
  const std::size_t n = G.ring()->nvars();
  const auto& lms = G.leading_monomials();
  if (!quotient_dimension(G)) throw InfiniteDimensional();
  std::vector<Monomial> out;
  if (G.is_unit_ideal()) return out;
  std::vector<int> bound(n, -1);
  for (const auto& m : lms)
    for (std::size_t i = 0; i < n; ++i)
      if (m.exp(i) == m.deg())
        if (bound[i] < 0 || m.deg() < bound[i]) bound[i] = m.deg();
  std::vector<int> exps(n, 0);
  for (;;) {
    Monomial m{std::vector<int>(exps)};
    bool divisible = false;
    for (const auto& lm : lms)
      if (lm.divides(m)) { divisible = true; break; }
    if (!divisible) out.push_back(m);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (exps[i] + 1 < bound[i]) { ++exps[i]; break; }
      exps[i] = 0;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return G.order().cmp(a, b) < 0;
  });
  return out;
}

std::vector<Monomial> standard_monomials(const Ideal& I) {
  return standard_monomials(groebner_basis(I));
}

}  // namespace critinf
