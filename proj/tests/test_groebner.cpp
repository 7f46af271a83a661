#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "critinf/groebner.hpp"
#include "critinf/parse.hpp"

using namespace critinf;

namespace {

RingPtr ring_xy() { return RingSpec::make(FieldSpec::rationals(), {"x", "y"}); }

Ideal ideal_of(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (const char* s : gens) v.push_back(parse_poly(s, r));
  return Ideal::make(r, std::move(v));
}

Polynomial rand_poly(const RingPtr& r, std::mt19937& rng, int maxdeg = 3, int nterms = 4) {
  std::uniform_int_distribution<int> e(0, maxdeg);
  std::uniform_int_distribution<long> c(-4, 4);
  std::vector<Polynomial::Term> terms;
  for (int i = 0; i < nterms; ++i) {
    std::vector<int> exps(r->nvars());
    for (auto& x : exps) x = e(rng);
    terms.emplace_back(Monomial(exps), r->field()->from_rational(Rational(c(rng))));
  }
  return Polynomial::from_terms(r, std::move(terms));
}

// Exhaustive Buchberger check: every S-polynomial of the basis reduces to 0,
// and the basis is reduced (monic, no term divisible by another's lm).
void verify_groebner(const GroebnerBasis& G) {
  const auto& F = *G.ring()->field();
  const auto& ord = G.order();
  const auto& els = G.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    auto [lmi, lci] = els[i].leading_term(ord);
    CHECK(F.is_one(lci));
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (i == j) continue;
      const Monomial& lmj = G.leading_monomials()[j];
      for (const auto& [m, c] : els[i].terms()) CHECK(!lmj.divides(m));
    }
  }
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      const Monomial &mi = G.leading_monomials()[i], &mj = G.leading_monomials()[j];
      Monomial L = Monomial::lcm(mi, mj);
      Polynomial s = els[i].mul_term(L.divide_by(mi), F.one()) -
                     els[j].mul_term(L.divide_by(mj), F.one());
      CHECK(normal_form(s, G).is_zero());
    }
  }
}

}  // namespace

TEST_CASE("normal form basics") {
  auto r = ring_xy();
  GroebnerBasis g1 = groebner_basis(ideal_of(r, {"x^2-y"}));
  CHECK(normal_form(parse_poly("x^2", r), g1) == parse_poly("y", r));
  GroebnerBasis g2 = groebner_basis(ideal_of(r, {"x^2-y", "y"}));
  CHECK(normal_form(parse_poly("y", r), g2).is_zero());
  GroebnerBasis g3 = groebner_basis(ideal_of(r, {"x^2"}));
  CHECK(normal_form(parse_poly("x+1", r), g3) == parse_poly("x+1", r));
  // f - nf(f) lies in the ideal
  std::mt19937 rng(41);
  for (int i = 0; i < 10; ++i) {
    Polynomial f = rand_poly(r, rng);
    Polynomial nf = normal_form(f, g2);
    CHECK(is_member(f - nf, g2.as_ideal()));
  }
}

TEST_CASE("groebner basis worked examples") {
  auto r = ring_xy();
  // one S-polynomial step by hand: S(x^2-y, y) = -y^2 -> reduces to 0;
  // interreduction turns x^2-y into x^2
  GroebnerBasis g = groebner_basis(ideal_of(r, {"x^2-y", "y"}));
  REQUIRE(g.elements().size() == 2);
  CHECK(g.elements()[0] == parse_poly("y", r));
  CHECK(g.elements()[1] == parse_poly("x^2", r));
  verify_groebner(g);

  GroebnerBasis one = groebner_basis(ideal_of(r, {"2"}));
  CHECK(one.is_unit_ideal());

  GroebnerBasis jac = groebner_basis(ideal_of(r, {"2*x", "2*y"}));
  REQUIRE(jac.elements().size() == 2);
  CHECK(jac.elements()[0] == parse_poly("y", r));
  CHECK(jac.elements()[1] == parse_poly("x", r));
}

TEST_CASE("membership") {
  auto r = ring_xy();
  CHECK(is_member(parse_poly("x^2", r), ideal_of(r, {"x^2-y", "y"})));
  CHECK(!is_member(parse_poly("x", r), ideal_of(r, {"x^2"})));
  std::mt19937 rng(43);
  Ideal I = ideal_of(r, {"x^2-y", "x*y-1"});
  for (int i = 0; i < 10; ++i) {
    Polynomial g = rand_poly(r, rng);
    CHECK(is_member(I.gens[0] * g, I));
    CHECK(is_member(I.gens[0] * g + I.gens[1], I));
  }
}

TEST_CASE("quotient dimension and standard monomials") {
  auto r = ring_xy();
  CHECK(quotient_dimension(ideal_of(r, {"x", "y"})) == 1);
  CHECK(quotient_dimension(ideal_of(r, {"x^2", "x*y", "y^2"})) == 3);
  CHECK(!quotient_dimension(ideal_of(r, {"x^2"})));  // infinite
  CHECK(quotient_dimension(ideal_of(r, {"1"})) == 0);

  auto sm = standard_monomials(ideal_of(r, {"x^2", "x*y", "y^2"}));
  REQUIRE(sm.size() == 3);  // 1, x, y
  CHECK(sm[0] == Monomial(std::vector<int>{0, 0}));

  auto sm2 = standard_monomials(ideal_of(r, {"x", "y"}));
  REQUIRE(sm2.size() == 1);
  CHECK(sm2[0].is_one());

  // Jacobian of x^3-3x+y^2: GB of (3x^2-3, 2y) is {y, x^2-1}, vdim 2
  Ideal jac = ideal_of(r, {"3*x^2-3", "2*y"});
  GroebnerBasis g = groebner_basis(jac);
  CHECK(quotient_dimension(g) == 2);
  auto sm3 = standard_monomials(g);
  REQUIRE(sm3.size() == 2);
  CHECK(sm3[0].is_one());
  CHECK(sm3[1] == Monomial(std::vector<int>{1, 0}));  // x

  CHECK_THROWS_AS(standard_monomials(ideal_of(r, {"x^2"})), InfiniteDimensional);

  // 1 is a member iff the quotient dimension is 0
  CHECK(is_member(parse_poly("1", r), ideal_of(r, {"x-1", "y+2"})) ==
        (quotient_dimension(ideal_of(r, {"x-1", "y+2"})) == 0));
  CHECK(is_member(parse_poly("1", r), ideal_of(r, {"x-1", "x-2"})));
  CHECK(quotient_dimension(ideal_of(r, {"x-1", "x-2"})) == 0);
}

TEST_CASE("every produced basis passes the Buchberger criterion") {
  auto r = ring_xy();
  std::mt19937 rng(47);
  verify_groebner(groebner_basis(ideal_of(r, {"x^3-2*x*y", "x^2*y-2*y^2+x"})));
  verify_groebner(groebner_basis(ideal_of(r, {"x^2+y^2-1", "x*y-1"})));
  for (int i = 0; i < 8; ++i) {
    std::vector<Polynomial> gens{rand_poly(r, rng), rand_poly(r, rng)};
    verify_groebner(groebner_basis(Ideal::make(r, gens)));
  }
  auto r3 = RingSpec::make(FieldSpec::rationals(), {"x", "y", "z"});
  verify_groebner(groebner_basis(Ideal::make(
      r3, {parse_poly("x*y-z", r3), parse_poly("y*z-x", r3), parse_poly("x*z-y", r3)})));
}

TEST_CASE("reduced basis is canonical under generator rewrites") {
  auto r = ring_xy();
  std::mt19937 rng(53);
  Ideal I = ideal_of(r, {"x^2+y^2-1", "x*y-1"});
  GroebnerBasis g0 = groebner_basis(I);
  for (int i = 0; i < 6; ++i) {
    // add polynomial combinations of the generators: same ideal
    std::vector<Polynomial> gens = I.gens;
    gens.push_back(I.gens[0] * rand_poly(r, rng) + I.gens[1] * rand_poly(r, rng));
    gens.push_back(I.gens[1] * rand_poly(r, rng));
    GroebnerBasis g1 = groebner_basis(Ideal::make(r, gens));
    CHECK(g1.same_basis(g0));
  }
}

TEST_CASE("groebner over an extension field") {
  auto K = FieldSpec::algebraic_extension("s", QPoly(std::vector<Rational>{1, 0, 1}));
  auto r = RingSpec::make(K, {"x", "y"});
  // (x - s, y + s): vdim 1; x^2+1 vanishes (x = s, s^2 = -1)
  Ideal I = Ideal::make(r, {parse_poly("x-s", r), parse_poly("y+s", r)});
  CHECK(quotient_dimension(I) == 1);
  CHECK(is_member(parse_poly("x^2+1", r), I));
  verify_groebner(groebner_basis(I));
}
