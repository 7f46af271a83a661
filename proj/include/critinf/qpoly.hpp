#ifndef CRITINF_QPOLY_HPP
#define CRITINF_QPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "critinf/rational.hpp"

namespace critinf {

/// Dense univariate polynomial over the rationals.  Coefficients are stored
/// low degree first; the leading coefficient is nonzero (zero polynomial has
/// an empty vector).  This is the workhorse inside field elements: rational
/// function numerators/denominators, extension residues and moduli.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(Rational c) { if (!c.is_zero()) c_.push_back(std::move(c)); }
  explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly variable();                 // X
  static QPoly monomial(int deg, Rational c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rational& lc() const;
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly scale(const Rational& a) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return c_ != o.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
  /// Exact division; throws if the remainder is nonzero.
  static QPoly div_exact(const QPoly& a, const QPoly& b);

  QPoly monic() const;
  QPoly derivative() const;
  Rational eval(const Rational& x) const;

  /// Monic gcd via the Euclidean algorithm.
  static QPoly gcd(const QPoly& a, const QPoly& b);
  /// g = gcd(a,b) monic together with u,v such that u*a + v*b = g.
  static std::tuple<QPoly, QPoly, QPoly> xgcd(const QPoly& a, const QPoly& b);

  /// a / gcd(a, a') made monic: same roots, all simple.
  QPoly squarefree_part() const;

  /// Content-free integer form: returns (p, c) with p having coprime integer
  /// coefficients, positive leading coefficient, and *this = c * p.
  std::pair<QPoly, Rational> primitive_integer() const;

  /// Human form with the given variable name, e.g. "s^2+1".
  std::string str(const std::string& var) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace critinf

#endif
