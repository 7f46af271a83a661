#include "critinf/rational.hpp"

#include <algorithm>

namespace critinf {

Rational::Rational(long n, long d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(n, d);
  canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw Error("bad rational literal '" + s + "'");
  v.canonicalize();
  return Rational(v);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw DivisionByZero();
  return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / v_));
}

std::string Rational::str() const { return v_.get_str(); }

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  mpz_class m = ::abs(n);
  if (m == 0) return {};
  std::vector<std::pair<mpz_class, unsigned>> fac;
  mpz_class p = 2;
  const long trial_bound = 1000000;
  while (p * p <= m && p <= trial_bound) {
    if (m % p == 0) {
      unsigned e = 0;
      while (m % p == 0) { m /= p; ++e; }
      fac.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (m > 1) fac.emplace_back(m, 1);  // prime or unfactored cofactor

  std::vector<mpz_class> divs{1};
  for (const auto& [q, e] : fac) {
    std::vector<mpz_class> next;
    next.reserve(divs.size() * (e + 1));
    mpz_class pe = 1;
    for (unsigned i = 0; i <= e; ++i) {
      for (const auto& d : divs) next.push_back(d * pe);
      pe *= q;
    }
    divs = std::move(next);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace critinf
