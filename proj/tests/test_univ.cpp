#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "critinf/parse.hpp"
#include "critinf/upoly.hpp"

using namespace critinf;

namespace {

RingPtr ring_t() { return RingSpec::make(FieldSpec::rationals(), {"t"}); }
RingPtr ring_ts() { return RingSpec::make(FieldSpec::rationals(), {"t", "s"}); }

Polynomial from_coeffs(const RingPtr& r, const std::vector<long>& coeffs) {
  Polynomial p(r);
  Polynomial t = Polynomial::variable(r, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p = p + Polynomial::constant(r, Rational(coeffs[i])) * t.pow(static_cast<unsigned>(i));
  return p;
}

}  // namespace

TEST_CASE("univariate gcd") {
  auto r = ring_t();
  CHECK(univ_gcd(parse_poly("t^2-1", r), parse_poly("t-1", r)) == parse_poly("t-1", r));
  // Euclid by hand: 3t^2+16t = (3t+16)*t + 0, so gcd is t
  CHECK(univ_gcd(parse_poly("3*t^2+16*t", r), parse_poly("t", r)) == parse_poly("t", r));
  CHECK(univ_gcd(parse_poly("t", r), parse_poly("1", r)) == parse_poly("1", r));
  // common factors always divide the gcd
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> c(-4, 4);
  auto rnd = [&](int deg) {
    std::vector<long> v(static_cast<std::size_t>(deg) + 1);
    for (auto& x : v) x = c(rng);
    return from_coeffs(r, v);
  };
  for (int i = 0; i < 20; ++i) {
    Polynomial a = rnd(3), b = rnd(2), d = rnd(2);
    if (a.is_zero() || b.is_zero() || d.is_zero()) continue;
    Polynomial g = univ_gcd(a * d, b * d);
    UPoly ug = UPoly::from_polynomial(g, 0), ud = UPoly::from_polynomial(d, 0);
    CHECK(UPoly::divrem(ug, ud).second.is_zero());
  }
}

TEST_CASE("squarefree part") {
  auto r = ring_t();
  Polynomial a = parse_poly("(t-1)^2*(t+2)", r);
  CHECK(squarefree_part(a) == parse_poly("t^2+t-2", r));
  CHECK(squarefree_part(parse_poly("3*t^2+16*t", r)) == parse_poly("t^2+16/3*t", r));
  CHECK(squarefree_part(parse_poly("5", r)) == parse_poly("1", r));
  // output is coprime with its derivative
  std::mt19937 rng(29);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int i = 0; i < 20; ++i) {
    Polynomial base = from_coeffs(r, {c(rng), c(rng), c(rng), 1});
    Polynomial p = base * base;
    Polynomial sf = squarefree_part(p);
    CHECK(univ_gcd(sf, sf.derivative(0)) == parse_poly("1", r));
  }
}

TEST_CASE("discriminant") {
  auto r = ring_t();
  CHECK(discriminant(parse_poly("t^2+3*t+1", r), 0) == parse_poly("5", r));
  // classical b^2-4c on random rationals
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int i = 0; i < 20; ++i) {
    long b = c(rng), cc = c(rng);
    Polynomial p = from_coeffs(r, {cc, b, 1});
    CHECK(discriminant(p, 0) == Polynomial::constant(r, Rational(b * b - 4 * cc)));
  }
  auto rts = ring_ts();
  CHECK(discriminant(parse_poly("t^2+(s^2+1)*t", rts), 0) ==
        parse_poly("(s^2+1)^2", rts));
  CHECK(discriminant(parse_poly("t-s", rts), 0) == parse_poly("1", rts));
  CHECK(discriminant(parse_poly("t^2+s*t+1", rts), 0) == parse_poly("s^2-4", rts));
}

TEST_CASE("factor_squarefree splits rational roots") {
  auto r = ring_t();
  auto fs = factor_squarefree(parse_poly("3*t^2+16*t", r));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == parse_poly("t", r));
  CHECK(fs[0].second == 1);
  CHECK(fs[1].first == parse_poly("t+16/3", r));
  CHECK(fs[1].second == 1);

  auto f2 = factor_squarefree(parse_poly("t^2-4", r));
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].first == parse_poly("t-2", r));
  CHECK(f2[1].first == parse_poly("t+2", r));

  auto f3 = factor_squarefree(parse_poly("(t^2+1)*t", r));
  REQUIRE(f3.size() == 2);
  CHECK(f3[0].first == parse_poly("t", r));
  CHECK(f3[1].first == parse_poly("t^2+1", r));

  auto f4 = factor_squarefree(parse_poly("(t-1)^2*(t+3)*t^2", r));
  // multiplicity classes: (t+3) with 1, then t-1 and t with 2
  REQUIRE(f4.size() == 3);
  CHECK(f4[0].first == parse_poly("t+3", r));
  CHECK(f4[0].second == 1);
  CHECK(f4[1].first == parse_poly("t-1", r));
  CHECK(f4[1].second == 2);
  CHECK(f4[2].first == parse_poly("t", r));
  CHECK(f4[2].second == 2);
}

TEST_CASE("factor_squarefree reassembly and coprimality") {
  auto r = ring_t();
  std::mt19937 rng(37);
  std::uniform_int_distribution<long> c(-3, 3);
  std::uniform_int_distribution<int> e(1, 2);
  for (int i = 0; i < 15; ++i) {
    Polynomial p = Polynomial::constant(r, Rational(1));
    for (int j = 0; j < 3; ++j) {
      Polynomial lin = from_coeffs(r, {-c(rng), 1});
      p = p * lin.pow(static_cast<unsigned>(e(rng)));
    }
    auto fs = factor_squarefree(p);
    Polynomial prod = Polynomial::constant(r, Rational(1));
    for (auto& [f, mult] : fs) prod = prod * f.pow(static_cast<unsigned>(mult));
    UPoly up = UPoly::from_polynomial(p, 0), uq = UPoly::from_polynomial(prod, 0);
    CHECK(up.monic() == uq.monic());
    for (std::size_t a = 0; a < fs.size(); ++a)
      for (std::size_t b = a + 1; b < fs.size(); ++b)
        CHECK(univ_gcd(fs[a].first, fs[b].first) == parse_poly("1", r));
  }
}

TEST_CASE("coprime refinement yields a gcd-free basis") {
  auto r = ring_t();
  auto up = [&](const char* s) { return UPoly::from_polynomial(parse_poly(s, r), 0); };
  auto basis = coprime_refinement({up("t^2-1"), up("t^2-3*t+2"), up("t+1")});
  // roots {1,-1} u {1,2} u {-1} -> basis must separate t-1, t+1, t-2
  REQUIRE(basis.size() == 3);
  for (const auto& b : basis) CHECK(b.degree() == 1);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      CHECK(UPoly::gcd(basis[i], basis[j]).is_one());
}

TEST_CASE("upoly resultant against factored products") {
  auto F = FieldSpec::rationals();
  auto lin = [&](long a) {  // t - a
    return UPoly(F, {F->from_rational(Rational(-a)), F->one()});
  };
  // res(f,g) = product of root differences for monic split polynomials
  UPoly f = lin(1) * lin(2), g = lin(3) * lin(5);
  Rational expect = Rational((1 - 3) * (1 - 5) * (2 - 3) * (2 - 5));
  CHECK(F->to_rational(f.resultant(g)) == expect);
  CHECK(F->is_zero((lin(1) * lin(2)).resultant(lin(2))));
}
