#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ssp/errors.hpp"

namespace ssp {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "num", "num/den" or "-num/den".  Exact; throws domain_error on
// malformed text or zero denominator.
Rat parse_rat(const std::string& text);

// Canonical "num/den" spelling ("num" when den == 1).
std::string rat_str(const Rat& q);

bool is_odd_prime(const Int& p);
void require_odd_prime(const Int& p, const char* where);

// p-adic valuation of a nonzero rational.
long val_p(const Rat& q, const Int& p);

// q / p^{val_p(q)}, a p-unit.
Rat unit_part(const Rat& q, const Int& p);

// Residue of a p-integral rational modulo m (m = p^k): num * den^{-1} mod m.
Int mod_rat(const Rat& q, const Int& m, const Int& p);

// Legendre symbol of the mod-p residue of a p-unit rational, p odd.
int legendre_unit(const Rat& u, const Int& p);

// Odd primes dividing numerator or denominator of any of the given rationals,
// sorted ascending.  Trial division up to 10^6 plus a primality test on the
// remainder; throws resource_error when a cofactor resists both.
std::vector<Int> odd_prime_support(const std::vector<Rat>& values);

}  // namespace ssp
