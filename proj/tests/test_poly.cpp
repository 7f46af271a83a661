#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "critinf/parse.hpp"

using namespace critinf;

namespace {

RingPtr ring_xy() { return RingSpec::make(FieldSpec::rationals(), {"x", "y"}); }

Polynomial rand_poly(const RingPtr& r, std::mt19937& rng, int maxdeg = 4, int nterms = 5) {
  std::uniform_int_distribution<int> e(0, maxdeg);
  std::uniform_int_distribution<long> c(-5, 5);
  std::vector<Polynomial::Term> terms;
  for (int i = 0; i < nterms; ++i) {
    std::vector<int> exps(r->nvars());
    for (auto& x : exps) x = e(rng);
    terms.emplace_back(Monomial(exps), r->field()->from_rational(Rational(c(rng))));
  }
  return Polynomial::from_terms(r, std::move(terms));
}

}  // namespace

TEST_CASE("parse simple polynomials") {
  auto r = ring_xy();
  Polynomial p = parse_poly("x^2+y^2", r);
  Polynomial q = Polynomial::variable(r, 0).pow(2) + Polynomial::variable(r, 1).pow(2);
  CHECK(p == q);
  CHECK(parse_poly("3/4*x - 1/4*x + y", r) == parse_poly("1/2*x+y", r));
  CHECK(parse_poly("(x+y)^2", r) == parse_poly("x^2+2*x*y+y^2", r));
  CHECK(parse_poly("-x+y", r) == parse_poly("y-x", r));
}

TEST_CASE("parse with a field parameter") {
  auto K = FieldSpec::rational_functions("s");
  auto r = RingSpec::make(K, {"x", "y"});
  Polynomial p = parse_poly("x*(x^3*y+s*x^2+s^2*x+1)", r);
  Polynomial q = parse_poly("x^4*y+s*x^3+s^2*x^2+x", r);
  CHECK(p == q);
  CHECK(p.total_degree() == 5);
}

TEST_CASE("parse errors carry positions") {
  auto r = ring_xy();
  CHECK_THROWS_AS(parse_poly("x^2 + w", r), UnknownVariable);
  CHECK_THROWS_AS(parse_poly("x^", r), ParseError);
  CHECK_THROWS_AS(parse_poly("(x+y", r), ParseError);
  CHECK_THROWS_AS(parse_poly("x y", r), ParseError);  // no implicit multiplication
  try {
    parse_poly("x^2 + w", r);
  } catch (const ParseError& e) {
    CHECK(e.position == 6);
  }
}

TEST_CASE("print then parse is the identity") {
  auto r = ring_xy();
  std::mt19937 rng(7);
  for (int i = 0; i < 30; ++i) {
    Polynomial p = rand_poly(r, rng);
    CHECK(parse_poly(p.str(), r) == p);
  }
  auto K = FieldSpec::algebraic_extension("s", QPoly(std::vector<Rational>{1, 0, 1}));
  auto re = RingSpec::make(K, {"x"});
  Polynomial p = parse_poly("(s+1)*x^2-s*x+3", re);
  CHECK(parse_poly(p.str(), re) == p);
}

TEST_CASE("expansion matches the factored form (oracle: repeated products)") {
  auto r = ring_xy();
  Polynomial inner = parse_poly("x*(x*y+1)+1", r);
  Polynomial three_y = parse_poly("3*y", r);
  Polynomial expected = three_y * inner * inner * inner;
  Polynomial p = parse_poly("3*y*(x*(x*y+1)+1)^3", r);
  CHECK(p == expected);
  CHECK(p.total_degree() == 10);
  // dp-leading term of 3y(x^2y+x+1)^3 is 3x^6y^4
  auto [lm, lc] = p.leading_term(r->order());
  CHECK(lm == Monomial(std::vector<int>{6, 4}));
  CHECK(r->field()->to_rational(lc) == Rational(3));
}

TEST_CASE("degree is additive over products") {
  auto r = ring_xy();
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    Polynomial f = rand_poly(r, rng), g = rand_poly(r, rng);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK((f * g).total_degree() == f.total_degree() + g.total_degree());
  }
}

TEST_CASE("derivative satisfies the product rule") {
  auto r = ring_xy();
  std::mt19937 rng(13);
  for (int i = 0; i < 20; ++i) {
    Polynomial f = rand_poly(r, rng), g = rand_poly(r, rng);
    for (std::size_t v = 0; v < 2; ++v) {
      Polynomial lhs = (f * g).derivative(v);
      Polynomial rhs = f.derivative(v) * g + f * g.derivative(v);
      CHECK(lhs == rhs);
    }
  }
  CHECK(parse_poly("x^2*y+x", r).derivative(0) == parse_poly("2*x*y+1", r));
  CHECK(parse_poly("x^2*y+x", r).derivative(1) == parse_poly("x^2", r));
}

TEST_CASE("homogeneous parts") {
  auto r = ring_xy();
  Polynomial f = parse_poly("x^2*y+x", r);
  auto parts = f.homogeneous_parts();
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 3);
  CHECK(parts[0].second == parse_poly("x^2*y", r));
  CHECK(parts[1].first == 1);
  CHECK(parts[1].second == parse_poly("x", r));

  Polynomial c = parse_poly("7", r);
  auto cp = c.homogeneous_parts();
  REQUIRE(cp.size() == 1);
  CHECK(cp[0].first == 0);

  auto K = FieldSpec::rational_functions("s");
  auto rs = RingSpec::make(K, {"x", "y"});
  auto ps = parse_poly("x^4*y+s*x^3+s^2*x^2+x", rs).homogeneous_parts();
  REQUIRE(ps.size() == 4);
  CHECK(ps[0].first == 5);
  CHECK(ps[1].first == 3);
  CHECK(ps[2].first == 2);
  CHECK(ps[3].first == 1);
  // sum of the parts reassembles the polynomial
  Polynomial sum(rs);
  for (auto& [d, part] : ps) sum = sum + part;
  CHECK(sum == parse_poly("x^4*y+s*x^3+s^2*x^2+x", rs));
}

TEST_CASE("homogenize and dehomogenize") {
  auto r = RingSpec::make(FieldSpec::rationals(), {"x", "y", "z"});
  std::size_t z = 2;
  Polynomial f = parse_poly("x^2*y+x", r);
  CHECK(f.homogenize(z) == parse_poly("x^2*y+x*z^2", r));
  CHECK(parse_poly("x^2+y^2", r).homogenize(z) == parse_poly("x^2+y^2", r));
  CHECK_THROWS_AS(parse_poly("x*z", r).homogenize(z), VariableOccurs);

  auto r5 = RingSpec::make(FieldSpec::rationals(), {"a", "b", "c", "d", "z"});
  Polynomial g = parse_poly("a+a^4*b+b^2*c^3+d^5", r5);
  CHECK(g.homogenize(4) == parse_poly("a*z^4+a^4*b+b^2*c^3+d^5", r5));

  std::mt19937 rng(17);
  for (int i = 0; i < 20; ++i) {
    Polynomial p = rand_poly(r, rng);
    // keep z out of the sample
    std::map<std::size_t, Polynomial> kill{{z, Polynomial::constant(r, Rational(1))}};
    p = p.substitute(kill);
    Polynomial h = p.homogenize(z);
    std::map<std::size_t, Polynomial> back{{z, Polynomial::constant(r, Rational(1))}};
    CHECK(h.substitute(back) == p);
  }
}

TEST_CASE("substitution") {
  auto r = RingSpec::make(FieldSpec::rationals(), {"x", "y", "z"});
  Polynomial f = parse_poly("x^2*y+x*z^2", r);
  std::map<std::size_t, Polynomial> z1{{2u, Polynomial::constant(r, Rational(1))}};
  CHECK(f.substitute(z1) == parse_poly("x^2*y+x", r));
  std::map<std::size_t, Polynomial> y1{{1u, Polynomial::constant(r, Rational(1))}};
  CHECK(f.substitute(y1) == parse_poly("x^2+x*z^2", r));
  std::map<std::size_t, Polynomial> id{{0u, Polynomial::variable(r, 0)}};
  CHECK(f.substitute(id) == f);
}

TEST_CASE("monomial orders are multiplicative with 1 minimal") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> e(0, 5);
  auto rand_mon = [&](std::size_t n) {
    std::vector<int> v(n);
    for (auto& x : v) x = e(rng);
    return Monomial(v);
  };
  std::vector<MonomialOrder> orders = {
      MonomialOrder::degrevlex(), MonomialOrder::lex(),
      MonomialOrder::block({0, 1}, 4)};
  for (const auto& ord : orders) {
    for (int i = 0; i < 200; ++i) {
      Monomial a = rand_mon(4), b = rand_mon(4), m = rand_mon(4);
      int c = ord.cmp(a, b);
      CHECK(c == -ord.cmp(b, a));
      if (c < 0) CHECK(ord.cmp(a * m, b * m) < 0);
      Monomial one(4);
      if (a != one) CHECK(ord.cmp(one, a) < 0);
    }
  }
}

TEST_CASE("degrevlex tie-breaking matches the dp convention") {
  auto ord = MonomialOrder::degrevlex();
  // x^2*y vs x*z^2 in (x,y,z): equal degree, smaller exponent in the last
  // variable wins
  Monomial a(std::vector<int>{2, 1, 0}), b(std::vector<int>{1, 0, 2});
  CHECK(ord.cmp(a, b) > 0);
  Monomial c(std::vector<int>{1, 1, 1});
  CHECK(ord.cmp(a, c) > 0);
  CHECK(ord.cmp(c, b) > 0);
}
