#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "critinf/field.hpp"

using namespace critinf;

namespace {

QPoly qp(std::vector<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

FieldElement rand_elem(const FieldSpec& F, std::mt19937& rng) {
  std::uniform_int_distribution<long> small(-6, 6);
  switch (F.kind()) {
    case FieldKind::Rationals: {
      long d = 0;
      while (d == 0) d = small(rng);
      return F.from_rational(Rational(small(rng), d));
    }
    case FieldKind::RationalFunctions: {
      QPoly num = qp({small(rng), small(rng)});
      QPoly den;
      while (den.is_zero()) den = qp({small(rng), small(rng)});
      return F.div(F.from_param_poly(num), F.from_param_poly(den));
    }
    case FieldKind::AlgebraicExtension:
      return F.from_param_poly(qp({small(rng), small(rng)}));
  }
  return F.zero();
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
  Rational a(1, 2), b(1, 3);
  CHECK((a + b) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1).operator/(Rational(0)), DivisionByZero);
  CHECK(Rational::from_string("-4/6") == Rational(-2, 3));
}

TEST_CASE("extension field with minimal polynomial s^2+1") {
  auto F = FieldSpec::algebraic_extension("s", qp({1, 0, 1}));
  FieldElement s = F->generator();
  // s*s = -1
  CHECK(F->equal(F->mul(s, s), F->from_rational(Rational(-1))));
  // invert(s) = -s  (extended Euclid on (s, s^2+1))
  CHECK(F->equal(F->invert(s), F->neg(s)));
  CHECK(F->equal(F->mul(s, F->invert(s)), F->one()));
}

TEST_CASE("rational function field reduces fractions") {
  auto F = FieldSpec::rational_functions("s");
  FieldElement num = F->from_param_poly(qp({-1, 0, 1}));  // s^2-1
  FieldElement den = F->from_param_poly(qp({-1, 1}));     // s-1
  FieldElement q = F->div(num, den);
  CHECK(F->equal(q, F->from_param_poly(qp({1, 1}))));  // s+1
  CHECK(F->str(q) == "s+1");
}

TEST_CASE("zero divisor detection in a reducible modulus") {
  auto F = FieldSpec::algebraic_extension("s", qp({0, -1, 1}));  // s^2-s
  FieldElement s = F->generator();
  try {
    (void)F->invert(s);
    FAIL("expected ZeroDivisorError");
  } catch (const ZeroDivisorError& e) {
    CHECK(e.factor == qp({0, 1}));  // gcd(s, s^2-s) = s
    // the factor properly divides the modulus and the cofactor is valid
    QPoly cof = QPoly::div_exact(F->modulus(), e.factor);
    CHECK(cof == qp({-1, 1}));
    // dynamic-evaluation soundness: rerunning in the branches matches the
    // computation over each true irreducible factor
    auto B1 = FieldSpec::algebraic_extension("s", e.factor);            // s = 0
    auto B2 = FieldSpec::algebraic_extension("s", cof);                 // s = 1
    CHECK(B1->is_zero(B1->generator()));
    CHECK_THROWS_AS((void)B1->invert(B1->generator()), DivisionByZero);
    CHECK(B2->equal(B2->invert(B2->generator()), B2->one()));
  }
}

TEST_CASE("division by zero") {
  auto F = FieldSpec::rationals();
  CHECK_THROWS_AS((void)F->invert(F->zero()), DivisionByZero);
  auto G = FieldSpec::rational_functions("s");
  CHECK_THROWS_AS((void)G->invert(G->zero()), DivisionByZero);
}

TEST_CASE("modulus validation") {
  CHECK_THROWS(FieldSpec::algebraic_extension("s", qp({0, 0, 1})));     // s^2 not squarefree
  CHECK_THROWS(FieldSpec::algebraic_extension("a", qp({0, 0, 1, 1})));  // a^3+a^2 likewise
  CHECK_THROWS(FieldSpec::algebraic_extension("s", qp({5})));           // degree 0
}

TEST_CASE("field axioms hold on random elements") {
  std::vector<FieldPtr> fields = {
      FieldSpec::rationals(),
      FieldSpec::rational_functions("s"),
      FieldSpec::algebraic_extension("s", qp({1, 0, 1})),   // s^2+1
      FieldSpec::algebraic_extension("s", qp({-2, 0, 1})),  // s^2-2
  };
  std::mt19937 rng(20240811);
  for (const auto& Fp : fields) {
    const FieldSpec& F = *Fp;
    for (int it = 0; it < 40; ++it) {
      FieldElement a = rand_elem(F, rng), b = rand_elem(F, rng), c = rand_elem(F, rng);
      CHECK(F.equal(F.add(F.add(a, b), c), F.add(a, F.add(b, c))));
      CHECK(F.equal(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c))));
      CHECK(F.equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c))));
      CHECK(F.equal(F.add(a, b), F.add(b, a)));
      CHECK(F.equal(F.mul(a, b), F.mul(b, a)));
      if (!F.is_zero(a)) CHECK(F.is_one(F.mul(a, F.invert(a))));
      // canonical forms: a - b == 0 iff identical representations
      CHECK(F.is_zero(F.sub(a, b)) == F.equal(a, b));
    }
  }
}
