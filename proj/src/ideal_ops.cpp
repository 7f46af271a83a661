#include "critinf/ideal_ops.hpp"

#include <algorithm>

namespace critinf {

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop) {
  if (drop.empty()) return Ideal::make(I.ring, I.gens);
  MonomialOrder ord = MonomialOrder::block(drop, I.ring->nvars());
  GroebnerBasis G = groebner_basis(I, ord);
  std::vector<Polynomial> kept;
  for (const auto& g : G.elements()) {
    bool uses_dropped = false;
    for (std::size_t v : drop)
      if (g.involves(v)) { uses_dropped = true; break; }
    if (!uses_dropped) kept.push_back(g);
  }
  return Ideal::make(I.ring, std::move(kept));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!I.ring->same_structure(*J.ring)) throw Error("intersect: ring mismatch");
  if (I.is_zero() || J.is_zero()) return Ideal::make(I.ring, {});
  std::string tag = fresh_name("u", I.ring->vars());
  RingPtr ext = I.ring->with_vars_appended({tag});
  std::size_t u = ext->index_of(tag);
  Polynomial pu = Polynomial::variable(ext, u);
  Polynomial one_minus_u = Polynomial::constant(ext, Rational(1)) - pu;
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens) gens.push_back(g.map_to_ring(ext) * pu);
  for (const auto& g : J.gens) gens.push_back(g.map_to_ring(ext) * one_minus_u);
  Ideal big = Ideal::make(ext, std::move(gens));
  Ideal elim = eliminate(big, {u});
  std::vector<Polynomial> back;
  for (const auto& g : elim.gens) back.push_back(g.map_to_ring(I.ring));
  return Ideal::make(I.ring, std::move(back));
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const MonomialOrder& ord = f.ring()->order();
  const FieldSpec& F = *f.ring()->field();
  Polynomial r = f;
  Polynomial q(f.ring());
  auto [lmg, lcg] = g.leading_term(ord);
  FieldElement lcg_inv = F.invert(lcg);
  while (!r.is_zero()) {
    auto [lmr, lcr] = r.leading_term(ord);
    if (!lmg.divides(lmr)) throw Error("polynomial division is not exact");
    Monomial shift = lmr.divide_by(lmg);
    FieldElement c = F.mul(lcr, lcg_inv);
    Polynomial piece = Polynomial::constant(f.ring(), c).mul_term(shift, F.one());
    q = q + piece;
    r = r - g.mul_term(shift, c);
  }
  return q;
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZero("ideal quotient by zero");
  if (g.is_constant()) return Ideal::make(I.ring, I.gens);
  Ideal gi = Ideal::make(I.ring, {g});
  Ideal meet = intersect(I, gi);
  std::vector<Polynomial> quot;
  for (const auto& h : meet.gens) quot.push_back(divide_exact(h, g));
  return Ideal::make(I.ring, std::move(quot));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  if (J.is_zero()) throw DivisionByZero("ideal quotient by the zero ideal");
  bool first = true;
  Ideal acc = Ideal::make(I.ring, {});
  for (const auto& g : J.gens) {
    Ideal q = ideal_quotient(I, g);
    acc = first ? std::move(q) : intersect(acc, q);
    first = false;
  }
  return acc;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  return groebner_basis(I).same_basis(groebner_basis(J));
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  if (J.is_zero()) throw DivisionByZero("saturation by the zero ideal");
  GroebnerBasis cur = groebner_basis(I);
  for (;;) {
    Ideal next = ideal_quotient(cur.as_ideal(), J);
    GroebnerBasis ng = groebner_basis(next);
    if (ng.same_basis(cur)) return cur.as_ideal();
    cur = std::move(ng);
  }
}

Ideal homogenize_ideal(const Ideal& I, std::size_t zvar,
                       const std::vector<std::size_t>* weight_one) {
  for (const auto& g : I.gens)
    if (g.involves(zvar)) throw VariableOccurs(I.ring->var(zvar));
  std::vector<std::size_t> w1;
  if (weight_one) {
    w1 = *weight_one;
  } else {
    for (std::size_t i = 0; i < I.ring->nvars(); ++i)
      if (i != zvar) w1.push_back(i);
  }
  if (I.is_zero()) return Ideal::make(I.ring, {});
  MonomialOrder graded = MonomialOrder::block(w1, I.ring->nvars());
  GroebnerBasis G = groebner_basis(I, graded);
  std::vector<Polynomial> homog;
  for (const auto& g : G.elements()) homog.push_back(g.homogenize(zvar, &w1));
  return Ideal::make(I.ring, std::move(homog));
}

StabilizedVdim stabilized_vdim(const Ideal& base, const Polynomial& pivot) {
  if (pivot.is_zero()) throw Error("stabilized_vdim: zero pivot");
  GroebnerBasis base_gb = groebner_basis(base);
  auto ambient = quotient_dimension(base_gb);
  if (!ambient)
    throw NotStabilizing("base ideal is not zero dimensional");
  auto vdim_at = [&](unsigned k) {
    std::vector<Polynomial> gens = base_gb.elements();
    gens.push_back(pivot.pow(k));
    return quotient_dimension(Ideal::make(base.ring, std::move(gens)));
  };
  std::size_t cap = *ambient + 2;
  auto prev = vdim_at(1);
  if (!prev) throw NotStabilizing("quotient stays infinite dimensional");
  for (std::size_t k = 1; k <= cap; ++k) {
    auto next = vdim_at(static_cast<unsigned>(k + 1));
    if (next && *next == *prev) return {k, *prev};
    prev = next;
  }
  throw NotStabilizing("power stabilization did not settle within the bound");
}

}  // namespace critinf
