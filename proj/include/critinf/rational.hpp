#ifndef CRITINF_RATIONAL_HPP
#define CRITINF_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "critinf/errors.hpp"

namespace critinf {

/// Exact rational number.  Always kept canonical: gcd(|num|, den) = 1,
/// den >= 1, zero is 0/1.  GMP does the heavy lifting.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  explicit Rational(const mpq_class& v) : v_(v) { canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  /// Parses "123" or "-4/6" (normalized to -2/3).
  static Rational from_string(const std::string& s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }

  std::string str() const;

 private:
  void canonicalize() { v_.canonicalize(); }
  mpq_class v_;
};

/// All positive divisors of |n|, via trial division.  For composite
/// cofactors beyond the trial bound the unfactored part is treated as prime;
/// callers tolerate the resulting incomplete divisor list (factors then stay
/// unsplit, which the factorization contract allows).
std::vector<mpz_class> positive_divisors(const mpz_class& n);

}  // namespace critinf

#endif
