#ifndef CRITINF_GROEBNER_HPP
#define CRITINF_GROEBNER_HPP

#include <optional>
#include <vector>

#include "critinf/polynomial.hpp"

namespace critinf {

/// Finitely generated ideal; zero generators are dropped on construction.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> gens;

  static Ideal make(RingPtr ring, std::vector<Polynomial> gens);
  bool is_zero() const { return gens.empty(); }
};

/// Reduced Groebner basis: elements monic, no term of any element divisible
/// by another's leading monomial, sorted ascending by leading monomial.
/// Canonical representative of the ideal for its order.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elems);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elems_; }
  const std::vector<Monomial>& leading_monomials() const { return lms_; }
  bool is_unit_ideal() const;
  bool same_basis(const GroebnerBasis& o) const;

  Ideal as_ideal() const { return Ideal::make(ring_, elems_); }

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elems_;
  std::vector<Monomial> lms_;
};

/// Buchberger with the product and chain pair criteria; pairs processed in
/// increasing lcm degree (ties by the monomial order, then indices), final
/// interreduction.  Deterministic for fixed input.
GroebnerBasis groebner_basis(const Ideal& I,
                             std::optional<MonomialOrder> order = std::nullopt);

/// Remainder of f on division by G: no term of the result is divisible by a
/// leading monomial of G, and f - result lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

bool is_member(const Polynomial& f, const Ideal& I);

/// Vector-space dimension of ring/I; nullopt when infinite.
std::optional<std::size_t> quotient_dimension(const Ideal& I);
std::optional<std::size_t> quotient_dimension(const GroebnerBasis& G);

/// Monomials outside the leading ideal; throws InfiniteDimensional.
std::vector<Monomial> standard_monomials(const Ideal& I);
std::vector<Monomial> standard_monomials(const GroebnerBasis& G);

}  // namespace critinf

#endif
