#ifndef CRITINF_IDEAL_OPS_HPP
#define CRITINF_IDEAL_OPS_HPP

#include <set>

#include "critinf/groebner.hpp"

namespace critinf {

/// I ∩ k[kept variables], via a block order with `drop` leading.  Returned
/// generators live in the same ring but contain no dropped variable.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop);

/// Ideal intersection via a tag variable.
Ideal intersect(const Ideal& I, const Ideal& J);

/// I : g = { f | f*g in I }.
Ideal ideal_quotient(const Ideal& I, const Polynomial& g);
/// I : J = intersection of I : g over the generators of J.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

/// I : J^infinity, by iterating the ideal quotient until the reduced
/// Groebner basis stabilizes.  Generators of the result are that basis.
Ideal saturate(const Ideal& I, const Ideal& J);

/// Reduced-basis identity under the ring order (canonical ideal equality).
bool ideal_equal(const Ideal& I, const Ideal& J);

/// Homogenization of the ideal (not merely of the given generators): takes a
/// Groebner basis under an order graded by the `weight_one` variables, then
/// homogenizes each basis element with z.  `weight_one` defaults to every
/// variable except z; weight-zero variables (family parameters) ride along.
Ideal homogenize_ideal(const Ideal& I, std::size_t zvar,
                       const std::vector<std::size_t>* weight_one = nullptr);

/// Exact multivariate division (throws when not divisible).
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

struct StabilizedVdim {
  std::size_t k;    // smallest power with vdim(base + pivot^k) = vdim(base + pivot^{k+1})
  std::size_t dim;  // that stable dimension
};

/// Power-stabilization: the dimensions vdim(base + (pivot^k)) are
/// nondecreasing in k and eventually constant; returns the first stable k
/// and the stable value.  The search is capped by vdim(base) + 2; failure to
/// stabilize (or an infinite base quotient) signals a hypothesis violation
/// upstream.
StabilizedVdim stabilized_vdim(const Ideal& base, const Polynomial& pivot);

}  // namespace critinf

#endif
