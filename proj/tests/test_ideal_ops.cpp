#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "critinf/ideal_ops.hpp"
#include "critinf/parse.hpp"

using namespace critinf;

namespace {

Ideal ideal_of(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (const char* s : gens) v.push_back(parse_poly(s, r));
  return Ideal::make(r, std::move(v));
}

}  // namespace

TEST_CASE("elimination") {
  auto r = RingSpec::make(FieldSpec::rationals(), {"x", "y", "t"});
  std::size_t t = 2;
  Ideal I = ideal_of(r, {"t-x", "t^2-y"});
  Ideal E = eliminate(I, {t});
  // substitution oracle: t = x gives x^2 - y
  CHECK(ideal_equal(E, ideal_of(r, {"x^2-y"})));
  for (const auto& g : E.gens) {
    CHECK(!g.involves(t));
    CHECK(is_member(g, I));
  }

  // critical values of x^3-3x+y^2 by hand: grad = (3x^2-3, 2y), points
  // (1,0) and (-1,0), values -2 and 2, so the t-eliminant is t^2-4
  Ideal C = ideal_of(r, {"x^3-3*x+y^2-t", "3*x^2-3", "2*y"});
  Ideal Et = eliminate(C, {0, 1});
  CHECK(ideal_equal(Et, ideal_of(r, {"t^2-4"})));
}

TEST_CASE("ideal quotient") {
  auto r = RingSpec::make(FieldSpec::rationals(), {"x", "y", "z"});
  CHECK(ideal_equal(ideal_quotient(ideal_of(r, {"x^2"}), parse_poly("x", r)),
                    ideal_of(r, {"x"})));
  // hand membership check both directions: (x^2 y, x z) : x = (x y, z)
  Ideal I = ideal_of(r, {"x^2*y", "x*z"});
  Ideal Q = ideal_quotient(I, parse_poly("x", r));
  CHECK(ideal_equal(Q, ideal_of(r, {"x*y", "z"})));
  // every output generator g' satisfies g' * g in I
  for (const auto& gp : Q.gens) CHECK(is_member(gp * parse_poly("x", r), I));
  // I : 1 = I
  CHECK(ideal_equal(ideal_quotient(I, parse_poly("1", r)), I));
}

TEST_CASE("saturation") {
  auto r = RingSpec::make(FieldSpec::rationals(), {"x", "y", "z"});
  Ideal I = ideal_of(r, {"x^2*y", "x*z"});
  Ideal S = saturate(I, ideal_of(r, {"x"}));
  CHECK(ideal_equal(S, ideal_of(r, {"y", "z"})));
  // idempotent and contains I
  CHECK(ideal_equal(saturate(S, ideal_of(r, {"x"})), S));
  for (const auto& g : I.gens) CHECK(is_member(g, S));

  CHECK(ideal_equal(saturate(I, ideal_of(r, {"1"})), I));
  CHECK(ideal_equal(saturate(ideal_of(r, {"z*(x-1)"}), ideal_of(r, {"z"})),
                    ideal_of(r, {"x-1"})));

  // saturating by an ideal one of whose generators already lies inside:
  // components inside V(x) persist because V(x, y) is smaller than V(x)
  Ideal J = ideal_of(r, {"x*y"});
  Ideal SJ = saturate(J, ideal_of(r, {"x", "y"}));
  CHECK(ideal_equal(SJ, J));
}

TEST_CASE("homogenize the ideal, not the generators") {
  auto r = RingSpec::make(FieldSpec::rationals(), {"x", "y", "z"});
  std::size_t z = 2;
  CHECK(ideal_equal(homogenize_ideal(ideal_of(r, {"y-x^2"}), z),
                    ideal_of(r, {"y*z-x^2"})));
  CHECK(ideal_equal(homogenize_ideal(ideal_of(r, {"1"}), z), ideal_of(r, {"1"})));

  // (x^2-1, y-x^3): the two points (1,1), (-1,-1) have no points at
  // infinity, which plain generator homogenization would wrongly add
  Ideal I = ideal_of(r, {"x^2-1", "y-x^3"});
  Ideal H = homogenize_ideal(I, z);
  CHECK(is_member(parse_poly("x^2-z^2", r), H));
  CHECK(is_member(parse_poly("y*z^2-x^3", r), H));
  CHECK(is_member(parse_poly("x-y", r), H));
  // dehomogenization roundtrip
  std::map<std::size_t, Polynomial> z1{{z, Polynomial::constant(r, Rational(1))}};
  std::vector<Polynomial> back;
  for (const auto& g : H.gens) back.push_back(g.substitute(z1));
  CHECK(ideal_equal(Ideal::make(r, back), I));
  // nothing at infinity: adding z gives the irrelevant locus only
  std::vector<Polynomial> inf_gens = H.gens;
  inf_gens.push_back(parse_poly("z", r));
  GroebnerBasis at_inf = groebner_basis(Ideal::make(r, inf_gens));
  CHECK(quotient_dimension(at_inf).has_value());  // only the cone point survives
}

TEST_CASE("partial homogenization keeps a weight-zero parameter") {
  auto r = RingSpec::make(FieldSpec::rationals(), {"x", "z", "s"});
  std::vector<std::size_t> wone{0};  // only x is projective
  Ideal I = ideal_of(r, {"x^2-s"});
  Ideal H = homogenize_ideal(I, 1, &wone);
  CHECK(ideal_equal(H, ideal_of(r, {"x^2-s*z^2"})));
}

TEST_CASE("stabilized vdim") {
  auto r = RingSpec::make(FieldSpec::rationals(), {"x", "y"});
  Polynomial f = parse_poly("x^3-3*x+y^2", r);
  Ideal jac = Ideal::make(r, {f.derivative(0), f.derivative(1)});
  // fiber over -2 holds one Morse point
  auto s1 = stabilized_vdim(jac, f + Polynomial::constant(r, Rational(2)));
  CHECK(s1.dim == 1);
  // fiber over 5 is regular
  auto s2 = stabilized_vdim(jac, f - Polynomial::constant(r, Rational(5)));
  CHECK(s2.dim == 0);
  // the two fiber dimensions sum to the affine Milnor number
  auto s3 = stabilized_vdim(jac, f - Polynomial::constant(r, Rational(2)));
  CHECK(s1.dim + s3.dim == 2);

  // dims are nondecreasing in the exponent until they stabilize
  GroebnerBasis jg = groebner_basis(jac);
  Polynomial pivot = f + Polynomial::constant(r, Rational(2));
  std::optional<std::size_t> prev;
  for (unsigned k = 1; k <= 3; ++k) {
    std::vector<Polynomial> gens = jg.elements();
    gens.push_back(pivot.pow(k));
    auto d = quotient_dimension(Ideal::make(r, gens));
    REQUIRE(d.has_value());
    if (prev) CHECK(*prev <= *d);
    prev = d;
  }

  CHECK_THROWS_AS(stabilized_vdim(ideal_of(r, {"x"}), parse_poly("y", r)),
                  NotStabilizing);
}
