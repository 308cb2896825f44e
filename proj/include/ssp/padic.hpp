#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ssp/rational.hpp"

namespace ssp {

// A place of Q where this library computes: an odd prime or the real place.
// p = 2 is rejected everywhere; the dyadic entry of a global profile is
// recovered from the product formula instead (see global_forms).
struct Place {
  bool real = false;
  Int p = 0;

  static Place at_real() { return Place{true, 0}; }
  static Place at_prime(const Int& p) {
    require_odd_prime(p, "Place");
    return Place{false, p};
  }
  bool operator==(const Place&) const = default;
};

// Nonzero diagonal quadratic form a_1 x_1^2 + ... + a_n x_n^2 over Q.
struct DiagonalForm {
  std::vector<Rat> entries;

  int dim() const { return static_cast<int>(entries.size()); }
  void validate(const char* where) const;
};

// Square class of a nonzero element of Q_p^x, p odd: the parity of the
// valuation and the Legendre class of the unit part.  Four classes in total.
struct SquareClass {
  Int p;
  int val_parity = 0;      // 0 or 1
  bool unit_square = true;  // Legendre symbol of the unit part is +1

  bool operator==(const SquareClass&) const = default;
  bool is_unit() const { return val_parity == 0; }
};

SquareClass square_class(const Rat& a, const Int& p);

// Square class over R is just the sign.
int real_square_class(const Rat& a);

struct LocalInvariants {
  Place place;
  int dim = 0;
  std::optional<SquareClass> det;     // finite place
  int det_sign = 0;                   // real place
  int hasse = 1;                      // +1 / -1
  std::pair<int, int> signature{0, 0};  // real place: (r, s)

  bool operator==(const LocalInvariants&) const = default;
};

// Hilbert symbol (a, b) at an odd prime (closed formula from valuations and
// Legendre symbols) or at R (sign inspection).  Returns +1 or -1.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& place);

// Independent brute-force decision of the solvability of z^2 = a x^2 + b y^2
// over Q_p: exhaustive scan of primitive triples modulo p^j for j <= depth
// with a Hensel nonsingularity certificate.  Shares no code with
// hilbert_symbol.  depth >= 3; throws inconclusive_error rather than ever
// returning an uncertified sign.
int solvable_oracle(const Rat& a, const Rat& b, const Int& p, int depth,
                    ExecPolicy policy = ExecPolicy::parallel);

// Product over i < j of hilbert_symbol(a_i, a_j, place); +1 for dim 1.
int hasse_invariant(const DiagonalForm& form, const Place& place);

LocalInvariants local_invariants(const DiagonalForm& form, const Place& place);

// Forms over a local field are isometric iff dim, det class and the
// Hasse-Witt invariant agree (signature at R).
bool is_isometric_local(const DiagonalForm& f1, const DiagonalForm& f2,
                        const Place& place);

}  // namespace ssp
