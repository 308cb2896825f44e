#include "ssp/padic.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ssp {

void DiagonalForm::validate(const char* where) const {
  if (entries.empty())
    throw domain_error(std::string(where) + ": empty diagonal form");
  for (const Rat& a : entries)
    if (a == 0) throw domain_error(std::string(where) + ": zero diagonal entry");
}

SquareClass square_class(const Rat& a, const Int& p) {
  if (a == 0) throw domain_error("square_class: a = 0");
  require_odd_prime(p, "square_class");
  long v = val_p(a, p);
  Rat u = unit_part(a, p);
  return SquareClass{p, static_cast<int>(((v % 2) + 2) % 2), legendre_unit(u, p) == 1};
}

int real_square_class(const Rat& a) {
  if (a == 0) throw domain_error("real_square_class: a = 0");
  return a > 0 ? 1 : -1;
}

int hilbert_symbol(const Rat& a, const Rat& b, const Place& place) {
  if (a == 0 || b == 0) throw domain_error("hilbert_symbol: zero argument");
  if (place.real) return (a < 0 && b < 0) ? -1 : 1;

  const Int& p = place.p;
  long alpha = val_p(a, p) & 1;
  long beta = val_p(b, p) & 1;
  int s = 1;
  if (alpha && beta) s *= mpz_legendre(Int(-1).get_mpz_t(), p.get_mpz_t());
  if (beta) s *= legendre_unit(unit_part(a, p), p);
  if (alpha) s *= legendre_unit(unit_part(b, p), p);
  return s;
}

namespace {

// Integer of the same square class as q, with p-valuation 0 or 1.
Int normalized_rep(const Rat& q, const Int& p) {
  long v = val_p(q, p);
  Rat u = unit_part(q, p);
  Int scaled = u.get_num() * u.get_den();  // u times the square den^2
  if (((v % 2) + 2) % 2 == 1) scaled *= p;
  return scaled;
}

long val_of_residue(long r, long p, int cap) {
  if (r == 0) return cap;  // valuation >= cap, exact value unknown at this level
  long v = 0;
  while (r % p == 0) {
    r /= p;
    ++v;
  }
  return v;
}

struct LevelScan {
  bool primitive_found = false;
  bool certified = false;
};

// One scan of primitive triples modulo p^k.  For each (x, y) the square table
// answers whether some z completes the triple; the stored z has minimal
// valuation among the square roots of that residue, which is what the Hensel
// certificate wants.  vA, vB are the exact valuations of A, B (0 or 1 after
// normalization).  A residue that vanishes mod p^k has undetermined valuation
// and is never used as the Hensel variable.
LevelScan scan_level(long A, long B, long vA, long vB, long p, int k, long M,
                     bool parallel) {
  std::vector<int64_t> root(M, -1);
  std::vector<int> rootval(M, 0);
  for (long z = 0; z < M; ++z) {
    long r = static_cast<long>((static_cast<int64_t>(z) * z) % M);
    long v = val_of_residue(z, p, k);
    if (root[r] < 0 || v < rootval[r]) {
      root[r] = z;
      rootval[r] = static_cast<int>(v);
    }
  }

  bool primitive_found = false;
  bool certified = false;

#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(|| : primitive_found, certified) if (parallel)
#endif
  for (long x = 0; x < M; ++x) {
    int64_t ax2 = (static_cast<int64_t>(A) * x % M) * x % M;
    for (long y = 0; y < M; ++y) {
      int64_t by2 = (static_cast<int64_t>(B) * y % M) * y % M;
      long w = static_cast<long>((ax2 + by2) % M);
      long z = static_cast<long>(root[w]);
      if (z < 0) continue;
      if (x % p == 0 && y % p == 0 && z % p == 0) continue;  // not primitive
      primitive_found = true;
      long g = 2 * k;  // larger than any certifiable value
      long vx = val_of_residue(x, p, k);
      long vy = val_of_residue(y, p, k);
      long vz = rootval[w];
      if (vx < k) g = std::min(g, vA + vx);
      if (vy < k) g = std::min(g, vB + vy);
      if (vz < k) g = std::min(g, vz);
      if (k >= 2 * g + 1) certified = true;
    }
  }
  (void)parallel;
  return LevelScan{primitive_found, certified};
}

}  // namespace

int solvable_oracle(const Rat& a, const Rat& b, const Int& p, int depth,
                    ExecPolicy policy) {
  if (a == 0 || b == 0) throw domain_error("solvable_oracle: zero argument");
  require_odd_prime(p, "solvable_oracle");
  if (depth < 3) throw domain_error("solvable_oracle: depth must be >= 3");

  Int pk = 1;
  for (int i = 0; i < depth; ++i) pk *= p;
  if (pk > 4096)
    throw resource_error("solvable_oracle: p^depth = " + pk.get_str() +
                         " exceeds the scan cap 4096");

  Int An = normalized_rep(a, p);
  Int Bn = normalized_rep(b, p);
  long pl = p.get_si();
  long vA = ((val_p(a, p) % 2) + 2) % 2;
  long vB = ((val_p(b, p) % 2) + 2) % 2;
  // Only the residues modulo p^depth matter for the scan.
  long A = mpz_class(((An % pk) + pk) % pk).get_si();
  long B = mpz_class(((Bn % pk) + pk) % pk).get_si();

  bool parallel = policy == ExecPolicy::parallel;
  long M = 1;
  for (int k = 1; k <= depth; ++k) {
    M *= pl;
    LevelScan scan = scan_level(A % M, B % M, vA, vB, pl, k, M, parallel);
    // A primitive Z_p solution reduces to a primitive solution at every
    // level, so an empty level settles unsolvability.
    if (!scan.primitive_found) return -1;
    if (scan.certified) return 1;
  }
  throw inconclusive_error(
      "solvable_oracle: solutions modulo p^" + std::to_string(depth) +
      " exist but none carries a Hensel certificate; increase depth");
}

int hasse_invariant(const DiagonalForm& form, const Place& place) {
  form.validate("hasse_invariant");
  int eps = 1;
  for (size_t i = 0; i < form.entries.size(); ++i)
    for (size_t j = i + 1; j < form.entries.size(); ++j)
      eps *= hilbert_symbol(form.entries[i], form.entries[j], place);
  return eps;
}

LocalInvariants local_invariants(const DiagonalForm& form, const Place& place) {
  form.validate("local_invariants");
  LocalInvariants inv;
  inv.place = place;
  inv.dim = form.dim();
  inv.hasse = hasse_invariant(form, place);
  if (place.real) {
    int r = 0, s = 0;
    Rat det = 1;
    for (const Rat& a : form.entries) {
      (a > 0 ? r : s)++;
      det *= a;
    }
    inv.signature = {r, s};
    inv.det_sign = real_square_class(det);
    int expected = (s * (s - 1) / 2) % 2 == 0 ? 1 : -1;
    if (inv.hasse != expected)
      throw std::logic_error("local_invariants: real Hasse invariant violates (-1)^{s(s-1)/2}");
  } else {
    Rat det = 1;
    for (const Rat& a : form.entries) det *= a;
    inv.det = square_class(det, place.p);
  }
  return inv;
}

bool is_isometric_local(const DiagonalForm& f1, const DiagonalForm& f2,
                        const Place& place) {
  LocalInvariants i1 = local_invariants(f1, place);
  LocalInvariants i2 = local_invariants(f2, place);
  if (place.real) return i1.dim == i2.dim && i1.signature == i2.signature;
  return i1.dim == i2.dim && i1.det == i2.det && i1.hasse == i2.hasse;
}

}  // namespace ssp
