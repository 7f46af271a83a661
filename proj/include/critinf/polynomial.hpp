#ifndef CRITINF_POLYNOMIAL_HPP
#define CRITINF_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "critinf/ring.hpp"

namespace critinf {

/// Sparse multivariate polynomial: finite map from exponent vectors to
/// nonzero field elements.  Terms are stored in a fixed canonical order
/// (plain lexicographic on exponents); views sorted by a monomial order are
/// produced on demand.
class Polynomial {
 public:
  using Term = std::pair<Monomial, FieldElement>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, FieldElement c);
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }

  bool is_constant() const;
  /// The value of a constant polynomial (zero polynomial gives 0).
  FieldElement constant_value() const;

  int total_degree() const;                       // -1 for zero
  int degree_in(std::size_t var) const;           // -1 for zero
  int degree_in_vars(const std::vector<std::size_t>& vars) const;
  bool involves(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(const FieldElement& c) const;
  Polynomial mul_term(const Monomial& m, const FieldElement& c) const;
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  const Term& leading_term(const MonomialOrder& order) const;
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;  // descending
  Polynomial monic(const MonomialOrder& order) const;

  Polynomial derivative(std::size_t var) const;
  Polynomial substitute(const std::map<std::size_t, Polynomial>& assign) const;

  /// Homogeneous decomposition: list of (degree, part), descending degree.
  std::vector<std::pair<int, Polynomial>> homogeneous_parts() const;

  /// Homogenization with z.  Degree is counted over `weight_one` (all
  /// variables except z when omitted); other variables ride along with
  /// weight zero.  z must not occur in the polynomial.
  Polynomial homogenize(std::size_t zvar,
                        const std::vector<std::size_t>* weight_one = nullptr) const;

  /// Coefficient of var^k as a polynomial in the remaining variables.
  Polynomial coefficient_of(std::size_t var, int k) const;

  /// The single variable occurring, if the polynomial is univariate;
  /// nullopt for constants and genuinely multivariate input.
  std::optional<std::size_t> sole_variable() const;

  /// Moves the polynomial into `target`, matching variables by name.  The
  /// target field must either equal the source field or be an extension of
  /// the rationals (rational coefficients embed).
  Polynomial map_to_ring(const RingPtr& target) const;

  /// Canonical machine-grammar text ("3*x^2*y-1/2"), terms descending in the
  /// ring's order.  Reparsing yields the identical polynomial whenever all
  /// coefficients are polynomial in the field parameter.
  std::string str() const;

 private:
  void check_same_ring(const Polynomial& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Promotes a ring variable to the field parameter: Q[x...,s] -> K[x...]
/// with K = Q(s) or Q[s]/(m).  The target ring must have the same variables
/// minus `svar` and a parametric field named after `svar`.
Polynomial promote_var_to_param(const Polynomial& f, std::size_t svar,
                                const RingPtr& target);

}  // namespace critinf

#endif
