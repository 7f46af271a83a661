#ifndef CRITINF_FIELD_HPP
#define CRITINF_FIELD_HPP

#include <memory>
#include <string>
#include <variant>

#include "critinf/qpoly.hpp"

namespace critinf {

enum class FieldKind { Rationals, RationalFunctions, AlgebraicExtension };

/// Rational function in the field parameter: num/den with den monic and
/// gcd(num, den) = 1.  The reduced form is the canonical representative.
struct RatFunc {
  QPoly num, den;
  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
};

/// Residue class in Q[param]/(modulus); degree < deg(modulus).
struct AlgElem {
  QPoly residue;
  bool operator==(const AlgElem& o) const { return residue == o.residue; }
};

using FieldElement = std::variant<Rational, RatFunc, AlgElem>;

/// Raised by extension-field inversion when gcd(residue, modulus) is a
/// proper factor g.  The caller splits the modulus into g and modulus/g and
/// reruns the computation in both branches (dynamic evaluation).
struct ZeroDivisorError : Error {
  QPoly factor;  // monic, proper divisor of the modulus
  explicit ZeroDivisorError(QPoly g)
      : Error("zero divisor: residue shares factor with the modulus"),
        factor(std::move(g)) {}
};

/// One level of the coefficient tower: Q, Q(param), or Q[param]/(modulus).
/// The modulus need not be irreducible; arithmetic raises ZeroDivisorError
/// when reducibility actually matters.
class FieldSpec {
 public:
  static std::shared_ptr<const FieldSpec> rationals();
  static std::shared_ptr<const FieldSpec> rational_functions(std::string param);
  static std::shared_ptr<const FieldSpec> algebraic_extension(std::string param,
                                                              QPoly modulus);

  FieldKind kind() const { return kind_; }
  const std::string& param() const { return param_; }
  const QPoly& modulus() const { return modulus_; }
  bool has_param() const { return kind_ != FieldKind::Rationals; }

  FieldElement zero() const { return from_rational(Rational(0)); }
  FieldElement one() const { return from_rational(Rational(1)); }
  FieldElement from_rational(const Rational& r) const;
  /// The parameter as a field element (s itself); only for parametric kinds.
  FieldElement generator() const;
  /// Image of a rational-coefficient polynomial in the parameter.
  FieldElement from_param_poly(const QPoly& p) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement invert(const FieldElement& a) const;

  bool is_zero(const FieldElement& a) const;
  bool is_one(const FieldElement& a) const;
  bool equal(const FieldElement& a, const FieldElement& b) const;
  /// Total order for deterministic sorting (no algebraic meaning).
  int cmp(const FieldElement& a, const FieldElement& b) const;

  /// True when the element is a rational constant (degree-0 in the param).
  bool is_rational(const FieldElement& a) const;
  Rational to_rational(const FieldElement& a) const;

  std::string str(const FieldElement& a) const;

  bool operator==(const FieldSpec& o) const;

 private:
  FieldSpec(FieldKind k, std::string p, QPoly m)
      : kind_(k), param_(std::move(p)), modulus_(std::move(m)) {}
  AlgElem reduce(QPoly p) const;
  FieldKind kind_;
  std::string param_;
  QPoly modulus_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

}  // namespace critinf

#endif
