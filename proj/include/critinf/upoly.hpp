#ifndef CRITINF_UPOLY_HPP
#define CRITINF_UPOLY_HPP

#include <utility>
#include <vector>

#include "critinf/polynomial.hpp"

namespace critinf {

/// Dense univariate polynomial over an arbitrary coefficient field of the
/// tower (Q, Q(s), Q[s]/(m)).  Backs the univariate toolkit: gcd, squarefree
/// part, resultant/discriminant, factor extraction.
class UPoly {
 public:
  explicit UPoly(FieldPtr field) : F_(std::move(field)) {}
  UPoly(FieldPtr field, std::vector<FieldElement> coeffs);

  static UPoly constant(FieldPtr field, const Rational& c);
  static UPoly variable(FieldPtr field);

  const FieldPtr& field() const { return F_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const;
  const FieldElement& lc() const;
  FieldElement coeff(int i) const;

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scale(const FieldElement& a) const;
  bool operator==(const UPoly& o) const;

  static std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
  static UPoly div_exact(const UPoly& a, const UPoly& b);
  static UPoly gcd(const UPoly& a, const UPoly& b);  // monic

  UPoly monic() const;
  UPoly derivative() const;
  FieldElement eval(const FieldElement& x) const;

  UPoly squarefree_part() const;  // monic, same roots, all simple

  /// resultant(this, o) via the Euclidean remainder sequence.
  FieldElement resultant(const UPoly& o) const;
  /// resultant(this, this') / lc(this).
  FieldElement discriminant() const;

  /// View of a Polynomial that is univariate in `var` with constant
  /// coefficients elsewhere.
  static UPoly from_polynomial(const Polynomial& p, std::size_t var);
  Polynomial to_polynomial(const RingPtr& ring, std::size_t var) const;

 private:
  void trim();
  FieldPtr F_;
  std::vector<FieldElement> c_;
};

/// Squarefree coprime factorization over Q with rational roots split off as
/// linear factors; higher-degree factors are kept whole (they may be split
/// lazily downstream by zero-divisor handling).  Product of factor^mult
/// equals the input up to a nonzero constant; factors are monic, squarefree
/// and pairwise coprime; deterministic order.
std::vector<std::pair<UPoly, int>> factor_squarefree(const UPoly& a);

/// Gcd-free basis: pairwise-coprime monic squarefree polynomials whose
/// product has the same roots as the product of the inputs.
std::vector<UPoly> coprime_refinement(std::vector<UPoly> polys);

// Spec-level wrappers on the multivariate container (inputs must be
// univariate; the variable is inferred, constants allowed where sensible).
Polynomial univ_gcd(const Polynomial& a, const Polynomial& b);
Polynomial squarefree_part(const Polynomial& a);
/// For a univariate in `tvar` whose coefficients may involve the remaining
/// variable (e.g. b(t,s) over Q[s]): resultant_t(a, da/dt)/lc_t(a) as a
/// polynomial in the remaining variables.
Polynomial discriminant(const Polynomial& a, std::size_t tvar);
std::vector<std::pair<Polynomial, int>> factor_squarefree(const Polynomial& a);

}  // namespace critinf

#endif
