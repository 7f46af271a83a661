#ifndef CRITINF_FAMILY_HPP
#define CRITINF_FAMILY_HPP

#include "critinf/crit.hpp"

namespace critinf {

/// One-parameter family f_s: a rational-coefficient polynomial in the affine
/// variables together with the parameter as an extra ring variable.
struct FamilySpec {
  Polynomial f;      // in Q[x1..xn, s]
  std::size_t svar;  // index of the parameter variable

  static FamilySpec make(Polynomial f, const std::string& param);
  std::size_t affine_count() const { return f.ring()->nvars() - 1; }
};

struct ParCritReport {
  std::string input;
  RingPtr sring;      // Q[s]
  Polynomial sprime;  // squarefree monic; 1 = the multi-integer cannot jump
  Polynomial affine_escape, baff_jump, binf_jump, lambda_jump, cardb_jump, degree_drop;
  bool degree_constant;
  bool milnor_constant;  // sprime == 1
  std::size_t nvars;     // affine variable count (triviality note needs n != 3)
};

/// Parameters whose limiting critical points lie at infinity.
Polynomial affine_escape_parameters(const FamilySpec& F);
/// Parameters where #B_aff(s) can change (leading coefficient and
/// discriminant loci of the fiberwise squarefree critical-value polynomial).
Polynomial baff_jump_parameters(const FamilySpec& F);
/// Parameters where #B_inf(s) can change, including degenerations.
Polynomial binf_jump_parameters(const FamilySpec& F);
/// Parameters where an intersection multiplicity at infinity can change.
Polynomial lambda_jump_parameters(const FamilySpec& F);
/// Parameters where the x-degree of f_s drops.
Polynomial degree_drop_parameters(const FamilySpec& F);

ParCritReport par_crit(const FamilySpec& F);

/// The member f_{s0} over Q[x1..xn].
Polynomial specialize(const FamilySpec& F, const Rational& s0);
/// The family member over Q(s) (for the generic-parameter analysis).
Polynomial generic_member(const FamilySpec& F);

}  // namespace critinf

#endif
