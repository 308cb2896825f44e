#pragma once

#include <optional>

#include "ssp/rational.hpp"

namespace ssp {

// Bernoulli numbers with the B_1 = -1/2 convention, via the standard
// recurrence; cached, safe for concurrent readers.
Rat bernoulli(unsigned n);

// Bernoulli polynomial B_n(x).
Rat bernoulli_poly(unsigned n, const Rat& x);

// zeta(1 - 2r) = -B_{2r} / (2r), r >= 1.
Rat zeta_neg(unsigned r);

// Kronecker symbol (d / a).
int kronecker_chi(const Int& d, const Int& a);

bool is_fundamental_discriminant(const Int& d);

// L(1 - m, chi_d) for the Kronecker character of a fundamental discriminant,
// via generalized Bernoulli numbers:  -B_{m,chi} / m  with
// B_{m,chi} = |d|^{m-1} * sum_{a=1..|d|} chi(a) B_m(a/|d|).
Rat l_neg(unsigned m, const Int& disc);

// The printed even-dimension local factor (p^{m-1}+1) * p^{m+1} is
// dimensionally anomalous next to the odd case; "corrected" replaces it by
// (p^{m-1}+1)(p^m+1).  Default is corrected; both stay available so the two
// can be compared exactly.
enum class EvenLocalVariant { as_printed, corrected };

struct MassInput {
  int n = 3;                 // dimension, >= 3
  Int p = 3;                 // odd prime
  Rat vol = 1;               // Vol(U), an exact positive rational index
  std::optional<Int> disc;   // fundamental discriminant, required iff n even
  EvenLocalVariant variant = EvenLocalVariant::corrected;
};

struct MassOutput {
  Rat value;      // the literal signed product
  Rat abs_value;  // |value|
};

// Superspecial mass in closed form:
//   n = 2m+1:  vol * prod_{r=1}^{m} zeta(1-2r) * 2^{1-m} * (p^{2m}-1)/(2(p+1))
//   n = 2m:    vol * prod_{r=1}^{m} zeta(1-2r) * L(1-m,chi) * 2^{1-m} * LF
// with LF the selected even local variant.
MassOutput mass(const MassInput& input);

// Supersingular elliptic mass (p-1)/24; the n = 3 cross-check target.
Rat deuring(const Int& p);

}  // namespace ssp
