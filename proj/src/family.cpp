#include "critinf/family.hpp"

#include <algorithm>

#include "critinf/task_pool.hpp"

namespace critinf {

namespace {

struct FCtx {
  FamilySpec F;
  RingPtr fring;  // Q[x.., s]
  std::size_t n;  // affine variables
  std::vector<std::size_t> xset;  // indices of the affine variables in fring
  std::size_t sv;
  std::string sname;
  RingPtr sring;  // Q[s] report ring
  int d;          // generic x-degree
};

FCtx make_fctx(const FamilySpec& F) {
  const RingPtr& r = F.f.ring();
  if (r->field()->kind() != FieldKind::Rationals)
    throw Error("family coefficients must be rational polynomials in the parameter");
  if (r->nvars() < 3) throw Error("family needs at least two affine variables");
  FCtx c{F, r, r->nvars() - 1, {}, F.svar, r->var(F.svar), nullptr, 0};
  for (std::size_t i = 0; i < r->nvars(); ++i)
    if (i != F.svar) c.xset.push_back(i);
  c.sring = RingSpec::make(FieldSpec::rationals(), {c.sname});
  c.d = F.f.degree_in_vars(c.xset);
  if (c.d < 1) throw Error("the family is constant in the affine variables");
  return c;
}

std::vector<Polynomial> x_jacobian(const FCtx& c, const Polynomial& f) {
  std::vector<Polynomial> gens;
  for (std::size_t i : c.xset) gens.push_back(f.derivative(i));
  return gens;
}

QPoly to_qpoly_in_s(const FCtx& c, const Polynomial& p, std::size_t svar) {
  QPoly q;
  for (const auto& [m, fe] : p.terms()) {
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (i != svar && m.exp(i) != 0)
        throw Error("expected a polynomial in the parameter only");
    q = q + QPoly::monomial(m.exp(svar), std::get<Rational>(fe));
  }
  return q;
}

Polynomial qpoly_to_sring(const FCtx& c, const QPoly& q) {
  std::vector<Polynomial::Term> terms;
  for (int i = 0; i <= q.degree(); ++i)
    if (!q.coeff(i).is_zero())
      terms.emplace_back(Monomial(std::vector<int>{i}),
                         c.sring->field()->from_rational(q.coeff(i)));
  return Polynomial::from_terms(c.sring, std::move(terms));
}

QPoly sf_monic(const QPoly& q) {
  if (q.is_zero()) throw Error("squarefree part of zero");
  if (q.is_constant()) return QPoly(Rational(1));
  return q.squarefree_part();
}

// Decomposition of a polynomial in Q[t, s] into its Q[s]-content and the
// Q(s)-primitive part viewed as a univariate in t.
struct TSPoly {
  QPoly content;                // gcd of the t-coefficients
  std::vector<QPoly> coeffs;    // primitive part: coefficient of t^k
  int tdeg() const { return static_cast<int>(coeffs.size()) - 1; }
};

TSPoly split_ts(const FCtx& c, const Polynomial& p, std::size_t tvar, std::size_t svar) {
  int dt = std::max(0, p.degree_in(tvar));
  std::vector<QPoly> coeffs;
  for (int k = 0; k <= dt; ++k)
    coeffs.push_back(to_qpoly_in_s(c, p.coefficient_of(tvar, k), svar));
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) throw Error("zero polynomial in the (t,s) split");
  QPoly content;
  for (const auto& q : coeffs) content = QPoly::gcd(content, q);
  for (auto& q : coeffs) q = QPoly::div_exact(q, content);
  return {content, std::move(coeffs)};
}

UPoly over_rat_funcs(const TSPoly& p, const FieldPtr& K) {
  std::vector<FieldElement> v;
  for (const auto& q : p.coeffs) v.push_back(K->from_param_poly(q));
  return UPoly(K, std::move(v));
}

// Clears denominators of a monic-in-t polynomial over Q(s) back to a
// primitive element of Q[s][t].
TSPoly clear_denominators(const FCtx& c, const UPoly& u) {
  QPoly den_lcm(Rational(1));
  for (int i = 0; i <= u.degree(); ++i) {
    const RatFunc& rf = std::get<RatFunc>(u.coeff(i));
    den_lcm = QPoly::div_exact(den_lcm * rf.den, QPoly::gcd(den_lcm, rf.den));
  }
  std::vector<QPoly> coeffs;
  for (int i = 0; i <= u.degree(); ++i) {
    const RatFunc& rf = std::get<RatFunc>(u.coeff(i));
    coeffs.push_back(rf.num * QPoly::div_exact(den_lcm, rf.den));
  }
  QPoly content;
  for (const auto& q : coeffs) content = QPoly::gcd(content, q);
  for (auto& q : coeffs) q = QPoly::div_exact(q, content);
  return {QPoly(Rational(1)), std::move(coeffs)};
}

// Gcd of generators of an elimination ideal inside Q[tvar, svar]:
// the content gcd times the Q(s)-gcd of the primitive parts.
TSPoly ts_gcd(const FCtx& c, const std::vector<Polynomial>& gens, std::size_t tvar,
              std::size_t svar) {
  if (gens.empty()) throw Error("ts_gcd of the empty set");
  FieldPtr K = FieldSpec::rational_functions(c.sname);
  QPoly content_gcd;
  UPoly prim_gcd(K);
  for (const auto& g : gens) {
    TSPoly p = split_ts(c, g, tvar, svar);
    content_gcd = QPoly::gcd(content_gcd, p.content);
    prim_gcd = UPoly::gcd(prim_gcd, over_rat_funcs(p, K));
  }
  TSPoly prim = clear_denominators(c, prim_gcd.monic());
  prim.content = content_gcd;
  return prim;
}

// Leading-coefficient and discriminant loci of the fiberwise squarefree
// form, as squarefree monic polynomials in s.
struct JumpLoci {
  QPoly degenerate;  // parameters where the polynomial vanishes identically
  QPoly lc;          // leading t-coefficient locus
  QPoly disc;        // root-collision locus
};

JumpLoci jump_loci(const FCtx& c, const TSPoly& p) {
  JumpLoci out{sf_monic(p.content), QPoly(Rational(1)), QPoly(Rational(1))};
  if (p.tdeg() < 1) return out;
  FieldPtr K = FieldSpec::rational_functions(c.sname);
  UPoly u = over_rat_funcs(p, K);
  TSPoly sf = clear_denominators(c, u.squarefree_part());
  out.lc = sf_monic(sf.coeffs.back());
  if (sf.tdeg() >= 1) {
    // discriminant of the cleared squarefree part
    UPoly v = over_rat_funcs(sf, K);
    FieldElement d = v.discriminant();
    const RatFunc& rf = std::get<RatFunc>(d);
    if (rf.den.degree() > 0)
      throw Error("discriminant of a polynomial must be polynomial");
    QPoly disc = rf.num.scale(rf.den.coeff(0).inverse());
    if (disc.is_zero()) throw Error("squarefree form has zero discriminant");
    out.disc = sf_monic(disc);
  }
  return out;
}

TSPoly ts_mul(const FCtx& c, const TSPoly& a, const TSPoly& b) {
  std::vector<QPoly> coeffs(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      coeffs[i + j] = coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
  QPoly content = a.content * b.content;
  return {content, std::move(coeffs)};
}

// ---------- the working ring for the at-infinity family objects ----------

struct InfFCtx {
  RingPtr work;  // Q[x1..xn, z, t, s]
  std::vector<std::size_t> xset;
  std::size_t zv, tv, sv;
  Polynomial fH;  // homog_x(f) - t z^d
};

InfFCtx make_inf_ctx(const FCtx& c) {
  std::vector<std::string> taken = c.fring->vars();
  std::string zn = fresh_name("z", taken);
  taken.push_back(zn);
  std::string tn = fresh_name("t", taken);
  std::vector<std::string> wvars;
  for (std::size_t i : c.xset) wvars.push_back(c.fring->var(i));
  wvars.push_back(zn);
  wvars.push_back(tn);
  wvars.push_back(c.sname);
  RingPtr work = RingSpec::make(FieldSpec::rationals(), wvars);
  std::vector<std::size_t> xset;
  for (std::size_t i = 0; i < c.n; ++i) xset.push_back(i);
  std::size_t zv = c.n, tv = c.n + 1, sv = c.n + 2;
  Polynomial fw = c.F.f.map_to_ring(work);
  Polynomial fbar = fw.homogenize(zv, &xset);
  Polynomial fH = fbar - Polynomial::variable(work, tv) *
                             Polynomial::variable(work, zv).pow(static_cast<unsigned>(c.d));
  return {work, std::move(xset), zv, tv, sv, std::move(fH)};
}

struct FamilyChart {
  Ideal C;                       // saturated polar set in chart x_k = 1
  std::vector<Polynomial> elim;  // generators of the (t,s) elimination ideal
};

FamilyChart family_chart(const FCtx& c, const InfFCtx& w, std::size_t kk) {
  Polynomial fw = c.F.f.map_to_ring(w.work);
  std::vector<Polynomial> pol;
  for (std::size_t i = 0; i < c.n; ++i)
    if (i != kk) pol.push_back(fw.derivative(i));
  Ideal PH = homogenize_ideal(Ideal::make(w.work, std::move(pol)), w.zv, &w.xset);
  std::vector<Polynomial> cbar = PH.gens;
  cbar.push_back(Polynomial::variable(w.work, kk) -
                 Polynomial::constant(w.work, Rational(1)));
  cbar.push_back(w.fH);
  Polynomial z = Polynomial::variable(w.work, w.zv);
  Ideal C = saturate(Ideal::make(w.work, std::move(cbar)),
                     Ideal::make(w.work, {z, w.fH}));
  std::vector<Polynomial> cinf = C.gens;
  cinf.push_back(z);
  std::vector<std::size_t> drop = w.xset;
  drop.push_back(w.zv);
  Ideal E = eliminate(Ideal::make(w.work, std::move(cinf)), drop);
  if (E.gens.empty()) throw GenericNonIsolated(
      "the polar set at infinity projects onto the whole (t,s) plane");
  return {std::move(C), E.gens};
}

}  // namespace

FamilySpec FamilySpec::make(Polynomial f, const std::string& param) {
  std::size_t sv = f.ring()->index_of(param);
  if (sv == RingSpec::npos)
    throw Error("family parameter '" + param + "' is not a ring variable");
  return FamilySpec{std::move(f), sv};
}

Polynomial specialize(const FamilySpec& F, const Rational& s0) {
  const RingPtr& r = F.f.ring();
  std::map<std::size_t, Polynomial> sub{{F.svar, Polynomial::constant(r, s0)}};
  Polynomial g = F.f.substitute(sub);
  std::vector<std::string> xvars;
  for (std::size_t i = 0; i < r->nvars(); ++i)
    if (i != F.svar) xvars.push_back(r->var(i));
  return g.map_to_ring(RingSpec::make(r->field(), xvars));
}

Polynomial generic_member(const FamilySpec& F) {
  const RingPtr& r = F.f.ring();
  std::vector<std::string> xvars;
  for (std::size_t i = 0; i < r->nvars(); ++i)
    if (i != F.svar) xvars.push_back(r->var(i));
  RingPtr target = RingSpec::make(FieldSpec::rational_functions(r->var(F.svar)), xvars);
  return promote_var_to_param(F.f, F.svar, target);
}

Polynomial degree_drop_parameters(const FamilySpec& F) {
  FCtx c = make_fctx(F);
  // coefficient polynomials (in s) of the top x-form; their common roots are
  // the parameters where f^d vanishes identically
  std::map<std::vector<int>, QPoly> top;
  for (const auto& [m, fe] : F.f.terms()) {
    int xdeg = 0;
    for (std::size_t i : c.xset) xdeg += m.exp(i);
    if (xdeg != c.d) continue;
    std::vector<int> key;
    for (std::size_t i : c.xset) key.push_back(m.exp(i));
    auto it = top.find(key);
    if (it == top.end()) it = top.emplace(key, QPoly()).first;
    it->second = it->second + QPoly::monomial(m.exp(c.sv), std::get<Rational>(fe));
  }
  QPoly gcd_all;
  for (const auto& [k, q] : top) gcd_all = QPoly::gcd(gcd_all, q);
  return qpoly_to_sring(c, sf_monic(gcd_all));
}

Polynomial affine_escape_parameters(const FamilySpec& F) {
  FCtx c = make_fctx(F);
  // ring Q[x.., z, s]
  std::vector<std::string> taken = c.fring->vars();
  std::string zn = fresh_name("z", taken);
  std::vector<std::string> evars;
  for (std::size_t i : c.xset) evars.push_back(c.fring->var(i));
  evars.push_back(zn);
  evars.push_back(c.sname);
  RingPtr ering = RingSpec::make(FieldSpec::rationals(), evars);
  std::size_t zv = c.n, sv = c.n + 1;
  std::vector<std::size_t> xset;
  for (std::size_t i = 0; i < c.n; ++i) xset.push_back(i);

  Polynomial fe = F.f.map_to_ring(ering);
  std::vector<Polynomial> jac;
  for (std::size_t i = 0; i < c.n; ++i) jac.push_back(fe.derivative(i));
  Ideal J = Ideal::make(ering, std::move(jac));
  Ideal Jbar = homogenize_ideal(J, zv, &xset);
  Polynomial z = Polynomial::variable(ering, zv);
  Ideal Jaff = saturate(Jbar, Ideal::make(ering, {z}));
  std::vector<Polynomial> esc = Jaff.gens;
  esc.push_back(z);
  // the escape locus is projective in (x, z): remove the irrelevant cone
  std::vector<Polynomial> xs;
  for (std::size_t i = 0; i < c.n; ++i) xs.push_back(Polynomial::variable(ering, i));
  Ideal E = saturate(Ideal::make(ering, std::move(esc)), Ideal::make(ering, xs));
  std::vector<std::size_t> drop = xset;
  drop.push_back(zv);
  auto gen = univariate_eliminant(eliminate(E, drop), sv);
  if (!gen) throw GenericNonIsolated("critical points escape for every parameter");
  UPoly sf = gen->squarefree_part();
  QPoly q;
  for (int i = 0; i <= sf.degree(); ++i)
    q = q + QPoly::monomial(i, ering->field()->to_rational(sf.coeff(i)));
  return qpoly_to_sring(c, q);
}

Polynomial baff_jump_parameters(const FamilySpec& F) {
  FCtx c = make_fctx(F);
  // ring Q[x.., t, s]
  std::vector<std::string> taken = c.fring->vars();
  std::string tn = fresh_name("t", taken);
  std::vector<std::string> bvars;
  for (std::size_t i : c.xset) bvars.push_back(c.fring->var(i));
  bvars.push_back(tn);
  bvars.push_back(c.sname);
  RingPtr bring = RingSpec::make(FieldSpec::rationals(), bvars);
  std::size_t tv = c.n, sv = c.n + 1;
  std::vector<std::size_t> xset;
  for (std::size_t i = 0; i < c.n; ++i) xset.push_back(i);

  Polynomial fb = F.f.map_to_ring(bring);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < c.n; ++i) gens.push_back(fb.derivative(i));
  gens.push_back(fb - Polynomial::variable(bring, tv));
  Ideal E = eliminate(Ideal::make(bring, std::move(gens)), xset);
  if (E.gens.empty())
    throw GenericNonIsolated("the affine critical values are not finite generically");
  TSPoly b = ts_gcd(c, E.gens, tv, sv);
  JumpLoci loci = jump_loci(c, b);
  return qpoly_to_sring(c, sf_monic(loci.lc * loci.disc));
}

namespace {

// Shared by binf/lambda/cardb: all charts' data, computed once.
struct FamilyInfinity {
  FCtx c;
  InfFCtx w;
  std::vector<FamilyChart> charts;
};

FamilyInfinity family_infinity(const FamilySpec& F) {
  FCtx c = make_fctx(F);
  InfFCtx w = make_inf_ctx(c);
  std::vector<FamilyChart> charts;
  charts.reserve(c.n);
  for (std::size_t kk = 0; kk < c.n; ++kk)
    charts.push_back(FamilyChart{Ideal{w.work, {}}, {}});
  FCtx* cp = &c;
  InfFCtx* wp = &w;
  auto* chp = &charts;
  run_indexed(c.n, [cp, wp, chp](std::size_t kk) {
    (*chp)[kk] = family_chart(*cp, *wp, kk);
  });
  return {std::move(c), std::move(w), std::move(charts)};
}

TSPoly union_eliminant(const FamilyInfinity& FI) {
  TSPoly e{QPoly(Rational(1)), {QPoly(Rational(1))}};
  for (const auto& ch : FI.charts) {
    TSPoly ek = ts_gcd(FI.c, ch.elim, FI.w.tv, FI.w.sv);
    e = ts_mul(FI.c, e, ek);
  }
  return e;
}

}  // namespace

Polynomial binf_jump_parameters(const FamilySpec& F) {
  FamilyInfinity FI = family_infinity(F);
  TSPoly e = union_eliminant(FI);
  JumpLoci loci = jump_loci(FI.c, e);
  return qpoly_to_sring(FI.c, sf_monic(loci.degenerate * loci.lc * loci.disc));
}

Polynomial lambda_jump_parameters(const FamilySpec& F) {
  FamilyInfinity FI = family_infinity(F);
  const FCtx& c = FI.c;
  const InfFCtx& w = FI.w;
  QPoly acc(Rational(1));
  for (const auto& ch : FI.charts) {
    // X_* = X + (t,s)-eliminant ideal of C_inf: the union of the fibers
    // carrying singularities at infinity
    std::vector<Polynomial> lstar = ch.C.gens;
    lstar.push_back(w.fH);
    for (const auto& g : ch.elim) lstar.push_back(g);
    Ideal L = Ideal::make(w.work, std::move(lstar));
    std::vector<Polynomial> cinf_gens = ch.C.gens;
    cinf_gens.push_back(Polynomial::variable(w.work, w.zv));
    Ideal S = saturate(L, Ideal::make(w.work, cinf_gens));
    std::vector<Polynomial> at_inf = S.gens;
    at_inf.push_back(Polynomial::variable(w.work, w.zv));
    std::vector<std::size_t> drop = w.xset;
    drop.push_back(w.zv);
    drop.push_back(w.tv);
    auto gen = univariate_eliminant(
        eliminate(Ideal::make(w.work, std::move(at_inf)), drop), w.sv);
    if (!gen)
      throw GenericNonIsolated("the intersection locus at infinity is not finite");
    UPoly sf = gen->squarefree_part();
    QPoly q;
    for (int i = 0; i <= sf.degree(); ++i)
      q = q + QPoly::monomial(i, w.work->field()->to_rational(sf.coeff(i)));
    acc = acc * q;
  }
  return qpoly_to_sring(c, sf_monic(acc));
}

ParCritReport par_crit(const FamilySpec& F) {
  FCtx c = make_fctx(F);

  // hypotheses for a generic member: probe a few rational parameters
  {
    const Rational probes[] = {Rational(3), Rational(7), Rational(5, 2)};
    bool ok = false;
    std::string why;
    for (const auto& s0 : probes) {
      Polynomial m = specialize(F, s0);
      try {
        if (is_affine_isolated(m) && is_strong_infinity_isolated(m)) { ok = true; break; }
        why = "the member at s = " + s0.str() +
              " violates an isolatedness hypothesis";
      } catch (const Error& e) {
        why = e.what();
      }
    }
    if (!ok)
      throw GenericNonIsolated("generic member fails the hypotheses: " + why);
  }

  Polynomial esc = affine_escape_parameters(F);
  Polynomial bj = baff_jump_parameters(F);
  Polynomial drop = degree_drop_parameters(F);

  FamilyInfinity FI = family_infinity(F);
  TSPoly e = union_eliminant(FI);
  JumpLoci eloci = jump_loci(FI.c, e);
  Polynomial ij = qpoly_to_sring(c, sf_monic(eloci.degenerate * eloci.lc * eloci.disc));
  Polynomial lj = lambda_jump_parameters(F);

  // #B jumps: collisions inside the product of the affine and infinity
  // critical-value polynomials
  Polynomial cardb = [&]() {
    std::vector<std::string> taken = c.fring->vars();
    std::string tn = fresh_name("t", taken);
    std::vector<std::string> bvars;
    for (std::size_t i : c.xset) bvars.push_back(c.fring->var(i));
    bvars.push_back(tn);
    bvars.push_back(c.sname);
    RingPtr bring = RingSpec::make(FieldSpec::rationals(), bvars);
    std::size_t tv = c.n, sv = c.n + 1;
    std::vector<std::size_t> xset;
    for (std::size_t i = 0; i < c.n; ++i) xset.push_back(i);
    Polynomial fb = F.f.map_to_ring(bring);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < c.n; ++i) gens.push_back(fb.derivative(i));
    gens.push_back(fb - Polynomial::variable(bring, tv));
    Ideal E = eliminate(Ideal::make(bring, std::move(gens)), xset);
    if (E.gens.empty())
      throw GenericNonIsolated("the affine critical values are not finite generically");
    TSPoly b = ts_gcd(c, E.gens, tv, sv);
    TSPoly prod = ts_mul(c, b, e);
    JumpLoci loci = jump_loci(c, prod);
    return qpoly_to_sring(c, sf_monic(loci.lc * loci.disc));
  }();

  // aggregate: squarefree monic product of the component contributions
  QPoly agg(Rational(1));
  for (const Polynomial* p : {&esc, &bj, &ij, &lj, &cardb, &drop})
    agg = agg * to_qpoly_in_s(c, p->map_to_ring(c.sring), 0);
  QPoly sprime = sf_monic(agg);

  return ParCritReport{F.f.str(),
                       c.sring,
                       qpoly_to_sring(c, sprime),
                       esc,
                       bj,
                       ij,
                       lj,
                       cardb,
                       drop,
                       drop.is_constant(),
                       sprime.is_one(),
                       c.n};
}

}  // namespace critinf
