#pragma once

#include <map>
#include <optional>
#include <utility>

#include "ssp/padic.hpp"

namespace ssp {

// Local data of a rational quadratic space at one finite place.  det is
// absent for the prime 2 (this library computes no dyadic invariants; the
// eps entry at 2 is the value forced by the product formula over all other
// places) and for profile entries whose determinant class was never pinned.
struct PrimeData {
  std::optional<SquareClass> det;
  int eps = 1;

  bool operator==(const PrimeData&) const = default;
};

// Invariant profile over all places: dimension, real signature, and a finite
// map prime -> (det class, eps).  eps = +1 is implied at every unlisted
// prime.  Global consistency (Hilbert reciprocity) is computed by
// reciprocity_check, never assumed.
struct InvariantProfile {
  int dim = 0;
  std::pair<int, int> signature{0, 0};
  std::map<Int, PrimeData> finite;

  int eps_at(const Int& p) const;
  int eps_infinity() const;  // (-1)^{s(s-1)/2}
};

// Profile of a diagonal form: entries at every odd prime dividing some
// numerator or denominator, the signature at R, and the 2-adic eps entry
// forced by the product formula.  At every omitted odd prime all entries are
// units, so eps = +1 there by the closed Hilbert formula.
InvariantProfile profile_of(const DiagonalForm& form);

// Product over all listed places times eps at R equals +1.
bool reciprocity_check(const InvariantProfile& profile);

// The nearby profile at p: requires signature (n-2, 2), eps_p = +1 and unit
// determinant class at p; flips eps_p to -1, replaces the signature by
// (n, 0) and leaves everything else alone.  Reciprocity is preserved because
// eps at R flips alongside.
InvariantProfile nearby_profile(const InvariantProfile& profile, const Int& p);

// True iff the form realizes the profile: dim, signature, eps at every
// listed prime (2 via the product formula), det class at every listed odd
// prime with a pinned class (unit parity when the class is unpinned), and
// eps = +1 at primes the profile omits.
bool profile_matches(const DiagonalForm& form, const InvariantProfile& profile);

// Bounded deterministic search for a diagonal form realizing the profile:
// entries are signed rationals with numerator and denominator supported on
// the profile's primes and of height (max of |num|, den) at most `bound`,
// scanned in the documented (height, entry) lexicographic order.  Throws
// domain_error when reciprocity fails and not_found_error when the search
// space is exhausted.
DiagonalForm realize_form(const InvariantProfile& profile, long bound);

}  // namespace ssp
