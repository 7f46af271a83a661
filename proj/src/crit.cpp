#include "critinf/crit.hpp"

#include <algorithm>
#include <random>

#include "critinf/task_pool.hpp"

namespace critinf {

namespace {

void check_input(const Polynomial& f) {
  if (f.ring()->nvars() < 2) throw Error("the map needs at least two variables");
  if (f.total_degree() < 1) throw Error("the polynomial must be nonconstant");
}

// Shared working data for one analysis run.
struct Ctx {
  Polynomial f;   // user ring K[x1..xn]
  RingPtr uring;
  std::size_t n;
  FieldPtr K;
  RingPtr work;   // K[x.., z, t]
  std::size_t zv, tv;
  Polynomial fw, fH;  // in work: f and homog(f) - t z^d
  int d;
  RingPtr rring;  // report ring K[t]
  RingPtr lring;  // K[x.., z] for the z-power stabilization
  std::string extname;  // parameter name for per-root extensions
  std::vector<std::size_t> xset;  // 0..n-1

  Polynomial zpoly() const { return Polynomial::variable(work, zv); }
  Polynomial tpoly() const { return Polynomial::variable(work, tv); }
};

Ctx make_ctx(const Polynomial& f) {
  check_input(f);
  RingPtr uring = f.ring();
  std::size_t n = uring->nvars();
  FieldPtr K = uring->field();
  std::vector<std::string> taken = uring->vars();
  if (K->has_param()) taken.push_back(K->param());
  std::string zn = fresh_name("z", taken);
  taken.push_back(zn);
  std::string tn = fresh_name("t", taken);
  taken.push_back(tn);
  std::string extname = fresh_name("c", taken);

  std::vector<std::string> wvars = uring->vars();
  wvars.push_back(zn);
  wvars.push_back(tn);
  RingPtr work = RingSpec::make(K, wvars);
  std::vector<std::size_t> xset;
  for (std::size_t i = 0; i < n; ++i) xset.push_back(i);

  Polynomial fw = f.map_to_ring(work);
  int d = fw.total_degree();
  Polynomial fbar = fw.homogenize(n, &xset);
  Polynomial fH = fbar - Polynomial::variable(work, n + 1) *
                             Polynomial::variable(work, n).pow(static_cast<unsigned>(d));

  std::vector<std::string> lvars = uring->vars();
  lvars.push_back(zn);
  return Ctx{f,
             uring,
             n,
             K,
             work,
             n,
             n + 1,
             std::move(fw),
             std::move(fH),
             d,
             RingSpec::make(K, {tn}),
             RingSpec::make(K, lvars),
             std::move(extname),
             std::move(xset)};
}

std::vector<Polynomial> jacobian_gens(const Polynomial& f) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) gens.push_back(f.derivative(i));
  return gens;
}

// Finiteness of the singular locus at infinity, checked chart by chart in
// the hyperplane z = 0 (homogeneous coordinates x1..xn).
bool sigma_finite(const Ctx& c, bool strong) {
  auto parts = c.f.homogeneous_parts();
  Polynomial top = parts.front().second;  // degree d part
  std::vector<Polynomial> gens = jacobian_gens(top);
  if (!strong) {
    for (const auto& [deg, part] : parts)
      if (deg == c.d - 1) gens.push_back(part);
  }
  for (std::size_t j = 0; j < c.n; ++j) {
    std::vector<std::string> subvars;
    for (std::size_t i = 0; i < c.n; ++i)
      if (i != j) subvars.push_back(c.uring->var(i));
    RingPtr sub = RingSpec::make(c.K, subvars);
    std::map<std::size_t, Polynomial> assign{
        {j, Polynomial::constant(c.uring, Rational(1))}};
    std::vector<Polynomial> sgens;
    for (const auto& g : gens) sgens.push_back(g.substitute(assign).map_to_ring(sub));
    if (!quotient_dimension(Ideal::make(sub, std::move(sgens)))) return false;
  }
  return true;
}

// Monic squarefree generator of the affine critical values, as a UPoly.
UPoly baff_upoly(const Ctx& c) {
  std::vector<Polynomial> gens = jacobian_gens(c.fw);
  // only the x-derivatives: fw does not involve z or t, so the z/t slots of
  // jacobian_gens(fw) are zero and get dropped by Ideal::make
  gens.push_back(c.fw - c.tpoly());
  Ideal I = Ideal::make(c.work, std::move(gens));
  Ideal E = eliminate(I, c.xset);
  auto gen = univariate_eliminant(E, c.tv);
  if (!gen) throw NonIsolatedAffineSingularities();
  return gen->squarefree_part();
}

// Runs `compute` over Q[extname]/(m) for a queue of moduli, splitting on
// zero divisors (dynamic evaluation).  Returns (modulus factor, value).
template <typename Fn>
std::vector<std::pair<QPoly, std::size_t>> with_splitting(QPoly m0, Fn&& compute) {
  std::vector<QPoly> queue{m0.monic()};
  std::vector<std::pair<QPoly, std::size_t>> out;
  while (!queue.empty()) {
    QPoly m = queue.back();
    queue.pop_back();
    if (m.degree() < 1) continue;
    try {
      out.emplace_back(m, compute(m));
    } catch (const ZeroDivisorError& e) {
      QPoly g = e.factor.monic();
      queue.push_back(g);
      queue.push_back(QPoly::div_exact(m, g).monic());
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree())
      return a.first.degree() < b.first.degree();
    for (int i = a.first.degree(); i >= 0; --i) {
      if (a.first.coeff(i) < b.first.coeff(i)) return true;
      if (b.first.coeff(i) < a.first.coeff(i)) return false;
    }
    return false;
  });
  return out;
}

QPoly upoly_to_qpoly(const UPoly& u) {
  const auto& F = *u.field();
  std::vector<Rational> v;
  for (int i = 0; i <= u.degree(); ++i) v.push_back(F.to_rational(u.coeff(i)));
  return QPoly(std::move(v));
}

UPoly qpoly_to_upoly(const QPoly& q, const FieldPtr& F) {
  std::vector<FieldElement> v;
  for (int i = 0; i <= q.degree(); ++i) v.push_back(F->from_rational(q.coeff(i)));
  return UPoly(F, std::move(v));
}

// mu_c over the base field.
std::size_t fiber_mu_base(const Ctx& c, const FieldElement& cval) {
  Ideal jac = Ideal::make(c.uring, jacobian_gens(c.f));
  Polynomial pivot = c.f - Polynomial::constant(c.uring, cval);
  return stabilized_vdim(jac, pivot).dim;
}

// Per-root mu for one squarefree factor (UPoly over the base field).
std::vector<FactorDetail> fiber_details_for_factor(const Ctx& c, const UPoly& m) {
  std::vector<FactorDetail> rows;
  const auto& F = *c.K;
  if (m.degree() == 1) {
    FieldElement cval = F.neg(m.coeff(0));  // monic: root of t + m0
    rows.push_back({m.to_polynomial(c.rring, 0), fiber_mu_base(c, cval)});
    return rows;
  }
  if (c.K->kind() != FieldKind::Rationals)
    throw Unsupported("per-root data over a parametric field needs linear factors");
  auto splits = with_splitting(upoly_to_qpoly(m), [&](const QPoly& mod) {
    FieldPtr ext = FieldSpec::algebraic_extension(c.extname, mod);
    RingPtr re = RingSpec::make(ext, c.uring->vars());
    Polynomial fe = c.f.map_to_ring(re);
    Ideal jac = Ideal::make(re, jacobian_gens(fe));
    Polynomial pivot = fe - Polynomial::constant(re, ext->generator());
    return stabilized_vdim(jac, pivot).dim;
  });
  for (auto& [mod, val] : splits)
    rows.push_back({qpoly_to_upoly(mod, c.K).to_polynomial(c.rring, 0), val});
  return rows;
}

// --------------------- infinity side ---------------------

// The homogenized polar ideal for coordinate kk (0-based), cached per kk.
Ideal polar_homog(const Ctx& c, std::size_t kk) {
  std::vector<Polynomial> pol;
  for (std::size_t i = 0; i < c.n; ++i)
    if (i != kk) pol.push_back(c.fw.derivative(i));
  Ideal P = Ideal::make(c.work, std::move(pol));
  return homogenize_ideal(P, c.zv, &c.xset);
}

struct ChartCurve {
  Ideal C;   // saturated polar curve in the chart
  UPoly e;   // monic squarefree t-eliminant of C + (z); 1 when empty
};

// Polar curve of coordinate kk, seen in the chart x_{chart_var} = 1.
ChartCurve build_chart(const Ctx& c, const Ideal& PH, std::size_t chart_var) {
  std::vector<Polynomial> cbar = PH.gens;
  cbar.push_back(Polynomial::variable(c.work, chart_var) -
                 Polynomial::constant(c.work, Rational(1)));
  cbar.push_back(c.fH);
  Ideal Cbar = Ideal::make(c.work, std::move(cbar));
  Ideal Xinf = Ideal::make(c.work, {c.zpoly(), c.fH});
  Ideal C = saturate(Cbar, Xinf);

  std::vector<Polynomial> cinf = C.gens;
  cinf.push_back(c.zpoly());
  std::vector<std::size_t> drop = c.xset;
  drop.push_back(c.zv);
  auto gen = univariate_eliminant(eliminate(Ideal::make(c.work, std::move(cinf)), drop),
                                  c.tv);
  if (!gen) throw NonIsolatedInfinitySingularities();
  return {std::move(C), gen->squarefree_part()};
}

// Values over which the polar-kk curve has points at infinity with x_kk = 0
// (seen from chart j != kk): these are invisible to chart kk.
UPoly missed_values(const Ctx& c, const Ideal& PH, std::size_t kk, std::size_t j) {
  std::vector<Polynomial> cbar = PH.gens;
  cbar.push_back(Polynomial::variable(c.work, j) -
                 Polynomial::constant(c.work, Rational(1)));
  cbar.push_back(c.fH);
  Ideal Cbar = Ideal::make(c.work, std::move(cbar));
  Ideal Xinf = Ideal::make(c.work, {c.zpoly(), c.fH});
  Ideal C = saturate(Cbar, Xinf);
  std::vector<Polynomial> gens = C.gens;
  gens.push_back(c.zpoly());
  gens.push_back(Polynomial::variable(c.work, kk));
  std::vector<std::size_t> drop = c.xset;
  drop.push_back(c.zv);
  auto gen = univariate_eliminant(eliminate(Ideal::make(c.work, std::move(gens)), drop),
                                  c.tv);
  if (!gen) throw NonIsolatedInfinitySingularities();
  return gen->squarefree_part();
}

// lambda for a base-field value in the given saturated chart curve.
std::size_t lambda_base(const Ctx& c, const Ideal& C, const FieldElement& cval) {
  std::map<std::size_t, Polynomial> sub{{c.tv, Polynomial::constant(c.work, cval)}};
  std::vector<Polynomial> gens;
  for (const auto& g : C.gens)
    gens.push_back(g.substitute(sub).map_to_ring(c.lring));
  Ideal base = Ideal::make(c.lring, std::move(gens));
  return stabilized_vdim(base, Polynomial::variable(c.lring, c.n)).dim;
}

std::vector<FactorDetail> lambda_details_for_factor(const Ctx& c, const Ideal& C,
                                                    const UPoly& m) {
  std::vector<FactorDetail> rows;
  const auto& F = *c.K;
  if (m.degree() == 1) {
    FieldElement cval = F.neg(m.coeff(0));
    rows.push_back({m.to_polynomial(c.rring, 0), lambda_base(c, C, cval)});
    return rows;
  }
  if (c.K->kind() != FieldKind::Rationals)
    throw Unsupported("per-root data over a parametric field needs linear factors");
  auto splits = with_splitting(upoly_to_qpoly(m), [&](const QPoly& mod) {
    FieldPtr ext = FieldSpec::algebraic_extension(c.extname, mod);
    RingPtr worke = RingSpec::make(ext, c.work->vars());
    std::vector<std::string> lvars = c.lring->vars();
    RingPtr lringe = RingSpec::make(ext, lvars);
    std::map<std::size_t, Polynomial> sub{
        {c.tv, Polynomial::constant(worke, ext->generator())}};
    std::vector<Polynomial> gens;
    for (const auto& g : C.gens)
      gens.push_back(g.map_to_ring(worke).substitute(sub).map_to_ring(lringe));
    Ideal base = Ideal::make(lringe, std::move(gens));
    return stabilized_vdim(base, Polynomial::variable(lringe, c.n)).dim;
  });
  for (auto& [mod, val] : splits)
    rows.push_back({qpoly_to_upoly(mod, c.K).to_polynomial(c.rring, 0), val});
  return rows;
}

std::vector<UPoly> factor_list(const UPoly& squarefree) {
  std::vector<UPoly> out;
  if (squarefree.degree() < 1) return out;
  for (auto& [f, mult] : factor_squarefree(squarefree)) out.push_back(f);
  return out;
}

}  // namespace

std::optional<UPoly> univariate_eliminant(const Ideal& elim, std::size_t tvar) {
  if (elim.gens.empty()) return std::nullopt;
  UPoly g(elim.ring->field());
  for (const auto& p : elim.gens) {
    UPoly u = UPoly::from_polynomial(p, tvar);
    g = UPoly::gcd(g, u);
  }
  return g.monic();
}

std::size_t affine_milnor_number(const Polynomial& f) {
  check_input(f);
  auto dim = quotient_dimension(Ideal::make(f.ring(), jacobian_gens(f)));
  if (!dim) throw NonIsolatedAffineSingularities();
  return *dim;
}

Polynomial affine_critical_values(const Polynomial& f) {
  Ctx c = make_ctx(f);
  (void)affine_milnor_number(f);
  return baff_upoly(c).to_polynomial(c.rring, 0);
}

std::size_t fiber_milnor_number(const Polynomial& f, const FieldElement& c) {
  Ctx ctx = make_ctx(f);
  (void)affine_milnor_number(f);
  return fiber_mu_base(ctx, c);
}

std::vector<FactorDetail> fiber_milnor_details(const Polynomial& f,
                                               const Polynomial& factor) {
  Ctx ctx = make_ctx(f);
  (void)affine_milnor_number(f);
  UPoly m = UPoly::from_polynomial(factor, factor.sole_variable().value_or(0)).monic();
  return fiber_details_for_factor(ctx, m);
}

Ideal polar_curve(const Polynomial& f, std::size_t k) {
  check_input(f);
  if (k < 1 || k > f.ring()->nvars()) throw Error("chart index out of range");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
    if (i != k - 1) gens.push_back(f.derivative(i));
  return Ideal::make(f.ring(), std::move(gens));
}

InfinityCurve curve_at_infinity(const Polynomial& f, std::size_t k) {
  Ctx c = make_ctx(f);
  if (k < 1 || k > c.n) throw Error("chart index out of range");
  if (!sigma_finite(c, false)) throw NonIsolatedInfinitySingularities();
  Ideal PH = polar_homog(c, k - 1);
  ChartCurve cc = build_chart(c, PH, k - 1);
  std::vector<Polynomial> cinf = cc.C.gens;
  cinf.push_back(c.zpoly());
  return {c.work, c.zv, c.tv, cc.C, Ideal::make(c.work, std::move(cinf))};
}

bool is_affine_isolated(const Polynomial& f) {
  check_input(f);
  return quotient_dimension(Ideal::make(f.ring(), jacobian_gens(f))).has_value();
}

bool is_infinity_isolated(const Polynomial& f) {
  Ctx c = make_ctx(f);
  return sigma_finite(c, false);
}

bool is_strong_infinity_isolated(const Polynomial& f) {
  Ctx c = make_ctx(f);
  return sigma_finite(c, true);
}

Polynomial apply_generic_change(const Polynomial& f, std::uint64_t seed) {
  check_input(f);
  std::mt19937_64 rng(seed);
  const std::size_t n = f.ring()->nvars();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  Polynomial g = f;
  for (std::size_t rep = 0; rep < 2 * n; ++rep) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    int sign = coin(rng) ? 1 : -1;
    Polynomial repl = Polynomial::variable(f.ring(), i);
    Polynomial xj = Polynomial::variable(f.ring(), j);
    repl = (sign > 0) ? repl + xj : repl - xj;
    std::map<std::size_t, Polynomial> sub{{i, repl}};
    g = g.substitute(sub);  // unimodular transvection x_i <- x_i +- x_j
  }
  return g;
}

std::size_t lambda_at_value(const Polynomial& f, const FieldElement& cval, std::size_t k) {
  Ctx c = make_ctx(f);
  if (k < 1 || k > c.n) throw Error("chart index out of range");
  if (!sigma_finite(c, false)) throw NonIsolatedInfinitySingularities();
  Ideal PH = polar_homog(c, k - 1);
  // chart coverage at this value: no invisible points over c
  for (std::size_t j = 0; j < c.n; ++j) {
    if (j == k - 1) continue;
    UPoly miss = missed_values(c, PH, k - 1, j);
    if (miss.degree() > 0 && c.K->is_zero(miss.eval(cval)))
      throw ChartCoverageFailure(
          "chart " + std::to_string(k) + " misses points of the polar curve at "
          "infinity over this value; use another chart or --generic-change");
  }
  ChartCurve cc = build_chart(c, PH, k - 1);
  return lambda_base(c, cc.C, cval);
}

Polynomial critical_values_at_infinity(const Polynomial& f) {
  Ctx c = make_ctx(f);
  if (!sigma_finite(c, false)) throw NonIsolatedInfinitySingularities();
  std::vector<UPoly> es(c.n, UPoly(c.K));
  run_indexed(c.n, [&](std::size_t kk) {
    es[kk] = build_chart(c, polar_homog(c, kk), kk).e;
  });
  UPoly prod = UPoly::constant(c.K, Rational(1));
  for (const auto& e : es) prod = prod * e;
  return prod.squarefree_part().to_polynomial(c.rring, 0);
}

CritReport analyze(const Polynomial& f_in, const CritOptions& opts) {
  Polynomial f = f_in;
  if (opts.generic_change_seed) f = apply_generic_change(f, *opts.generic_change_seed);
  Ctx c = make_ctx(f);

  // hypotheses
  GroebnerBasis jac_gb = groebner_basis(Ideal::make(c.uring, jacobian_gens(c.f)));
  auto mu_dim = quotient_dimension(jac_gb);
  if (!mu_dim) throw NonIsolatedAffineSingularities();
  if (!sigma_finite(c, false)) throw NonIsolatedInfinitySingularities();
  bool strong = sigma_finite(c, true);

  // affine side
  std::size_t mu = *mu_dim;
  UPoly baff = baff_upoly(c);
  std::vector<UPoly> afactors = factor_list(baff);
  std::vector<FactorDetail> affine_details;
  {
    std::vector<std::vector<FactorDetail>> rows(afactors.size());
    run_indexed(afactors.size(), [&](std::size_t i) {
      rows[i] = fiber_details_for_factor(c, afactors[i]);
    });
    for (auto& r : rows)
      affine_details.insert(affine_details.end(), r.begin(), r.end());
  }

  // infinity side: eliminants of every chart, then one covering chart
  std::vector<Ideal> PH(c.n, Ideal{c.work, {}});
  std::vector<ChartCurve> own;
  own.reserve(c.n);
  for (std::size_t kk = 0; kk < c.n; ++kk)
    own.push_back(ChartCurve{Ideal{c.work, {}}, UPoly(c.K)});
  run_indexed(c.n, [&](std::size_t kk) {
    PH[kk] = polar_homog(c, kk);
    own[kk] = build_chart(c, PH[kk], kk);
  });
  UPoly binf = UPoly::constant(c.K, Rational(1));
  for (const auto& cc : own) binf = binf * cc.e;
  binf = binf.squarefree_part();

  std::vector<std::size_t> candidates;
  if (opts.chart >= 1) {
    if (opts.chart > c.n) throw Error("chart index out of range");
    candidates.push_back(opts.chart - 1);
  } else {
    for (std::size_t kk = c.n; kk-- > 0;) candidates.push_back(kk);
  }

  std::vector<UPoly> ifactors = factor_list(binf);
  std::vector<FactorDetail> inf_details;
  std::size_t chart_used = 0;
  bool coverage_warning = false;
  bool found_chart = false;
  std::string last_reason = "no chart candidate";
  if (binf.degree() < 1) {  // smooth at infinity: no lambda work to do
    chart_used = opts.chart >= 1 ? opts.chart : c.n;
    found_chart = true;
  }
  for (std::size_t kk : candidates) {
    if (found_chart) break;
    if (!(own[kk].e == binf)) {
      coverage_warning = true;
      last_reason = "chart " + std::to_string(kk + 1) +
                    " does not see every critical value at infinity";
      continue;
    }
    bool covered = true;
    for (std::size_t j = 0; j < c.n && covered; ++j) {
      if (j == kk) continue;
      UPoly miss = missed_values(c, PH[kk], kk, j);
      if (!UPoly::gcd(miss, binf).is_one()) covered = false;
    }
    if (!covered) {
      coverage_warning = true;
      last_reason = "chart " + std::to_string(kk + 1) +
                    " misses polar-curve points with that coordinate zero";
      continue;
    }
    // lambda per factor; a zero lambda at a reported value means the chart
    // is inadequate after all
    std::vector<std::vector<FactorDetail>> rows(ifactors.size());
    run_indexed(ifactors.size(), [&](std::size_t i) {
      rows[i] = lambda_details_for_factor(c, own[kk].C, ifactors[i]);
    });
    bool consistent = true;
    for (const auto& r : rows)
      for (const auto& d : r)
        if (d.value == 0) consistent = false;
    if (!consistent) {
      coverage_warning = true;
      last_reason = "chart " + std::to_string(kk + 1) +
                    " yields a zero intersection number at a reported value";
      continue;
    }
    inf_details.clear();
    for (auto& r : rows)
      inf_details.insert(inf_details.end(), r.begin(), r.end());
    chart_used = kk + 1;
    found_chart = true;
  }
  if (!found_chart)
    throw ChartCoverageFailure(last_reason +
                               "; retry with --chart or --generic-change <seed>");

  std::size_t lambda = 0;
  for (const auto& d : inf_details)
    lambda += static_cast<std::size_t>(d.factor.degree_in(0)) * d.value;
  std::size_t mu_sum = 0;
  for (const auto& d : affine_details)
    mu_sum += static_cast<std::size_t>(d.factor.degree_in(0)) * d.value;
  if (mu_sum != mu)
    throw Error("internal inconsistency: sum of fiber Milnor numbers (" +
                std::to_string(mu_sum) + ") differs from mu (" +
                std::to_string(mu) + ")");

  MilnorMultiInteger multi{
      mu, static_cast<std::size_t>(std::max(0, baff.degree())), lambda,
      static_cast<std::size_t>(std::max(0, binf.degree())),
      static_cast<std::size_t>(std::max(0, (baff * binf).squarefree_part().degree()))};

  // sphere counts per critical value (and the generic fiber)
  std::vector<SphereCount> spheres;
  std::vector<UPoly> pieces;
  for (const auto& d : affine_details)
    pieces.push_back(UPoly::from_polynomial(d.factor, 0));
  for (const auto& d : inf_details)
    pieces.push_back(UPoly::from_polynomial(d.factor, 0));
  for (const UPoly& m : coprime_refinement(pieces)) {
    std::size_t mu_c = 0, lambda_c = 0;
    for (const auto& d : affine_details) {
      UPoly fac = UPoly::from_polynomial(d.factor, 0);
      if (UPoly::divrem(fac, m).second.is_zero()) { mu_c = d.value; break; }
    }
    for (const auto& d : inf_details) {
      UPoly fac = UPoly::from_polynomial(d.factor, 0);
      if (UPoly::divrem(fac, m).second.is_zero()) { lambda_c = d.value; break; }
    }
    if (mu_c + lambda_c > mu + lambda)
      throw Error("internal inconsistency: negative sphere count");
    spheres.push_back({m.to_polynomial(c.rring, 0), mu + lambda - mu_c - lambda_c});
  }

  return CritReport{f.str(),
                    c.rring,
                    true,
                    true,
                    strong,
                    AffineReport{baff.to_polynomial(c.rring, 0), mu,
                                 std::move(affine_details)},
                    InfinityReport{binf.to_polynomial(c.rring, 0), lambda,
                                   std::move(inf_details), chart_used,
                                   coverage_warning},
                    multi,
                    std::move(spheres),
                    mu + lambda,
                    opts.generic_change_seed};
}

}  // namespace critinf
