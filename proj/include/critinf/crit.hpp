#ifndef CRITINF_CRIT_HPP
#define CRITINF_CRIT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "critinf/ideal_ops.hpp"
#include "critinf/upoly.hpp"

namespace critinf {

/// A monic factor of a critical-value polynomial together with the Milnor
/// number attached to every root of that factor (conjugate roots share it).
struct FactorDetail {
  Polynomial factor;  // univariate in the report variable over the base field
  std::size_t value;
};

struct AffineReport {
  Polynomial baff;  // squarefree monic; 1 when the set is empty
  std::size_t mu = 0;
  std::vector<FactorDetail> details;
};

struct InfinityReport {
  Polynomial binf;
  std::size_t lambda = 0;
  std::vector<FactorDetail> details;
  std::size_t chart = 0;  // 1-based coordinate index used for the lambdas
  bool coverage_warning = false;
};

struct MilnorMultiInteger {
  std::size_t mu = 0, card_baff = 0, lambda = 0, card_binf = 0, card_b = 0;
};

struct SphereCount {
  Polynomial factor;  // fibers over roots of this factor
  std::size_t count;  // mu + lambda - mu_c - lambda_c
};

struct CritReport {
  std::string input;
  RingPtr report_ring;  // K[t]
  bool affine_isolated = true;
  bool infinity_isolated = true;
  bool strong_infinity_isolated = true;
  AffineReport affine;
  InfinityReport infinity;
  MilnorMultiInteger multi;
  std::vector<SphereCount> spheres;
  std::size_t generic_spheres = 0;
  std::optional<std::uint64_t> generic_change_seed;
};

struct CritOptions {
  std::size_t chart = 0;  // 0 = automatic (n, n-1, ..., 1)
  std::optional<std::uint64_t> generic_change_seed;
};

/// mu = vdim of the Jacobian quotient; throws when singularities are not
/// isolated.
std::size_t affine_milnor_number(const Polynomial& f);

/// Squarefree monic generator of the affine critical values, in K[t].
Polynomial affine_critical_values(const Polynomial& f);

/// mu_c by power stabilization of (f-c)^k over the Jacobian ideal.
std::size_t fiber_milnor_number(const Polynomial& f, const FieldElement& c);

/// Per-root mu over Q[c]/(factor); dynamic splitting may refine the factor.
std::vector<FactorDetail> fiber_milnor_details(const Polynomial& f,
                                               const Polynomial& factor);

/// (df/dx_i : i != k) in the affine variables; k is 1-based.
Ideal polar_curve(const Polynomial& f, std::size_t k);

struct InfinityCurve {
  RingPtr work;  // K[x1..xn, z, t]
  std::size_t zvar, tvar;
  Ideal C;      // closure of the polar curve minus X_inf, chart x_k = 1
  Ideal C_inf;  // C + (z)
};
InfinityCurve curve_at_infinity(const Polynomial& f, std::size_t k);

/// Union over all charts of the t-eliminants of C_inf; squarefree monic.
Polynomial critical_values_at_infinity(const Polynomial& f);

/// lambda_c in chart k via z-power stabilization on the fiber of C over c.
std::size_t lambda_at_value(const Polynomial& f, const FieldElement& c, std::size_t k);

bool is_affine_isolated(const Polynomial& f);
bool is_infinity_isolated(const Polynomial& f);
bool is_strong_infinity_isolated(const Polynomial& f);

/// Seeded unimodular integer change of the affine coordinates.
Polynomial apply_generic_change(const Polynomial& f, std::uint64_t seed);

CritReport analyze(const Polynomial& f, const CritOptions& opts = {});

/// Monic squarefree generator of a univariate elimination ideal; nullopt for
/// the zero ideal.  Shared with the family module.
std::optional<UPoly> univariate_eliminant(const Ideal& elim, std::size_t tvar);

}  // namespace critinf

#endif
