#pragma once

#include <optional>
#include <vector>

#include "ssp/matq.hpp"
#include "ssp/padic.hpp"

namespace ssp {

// A Z_p-lattice presented by the Gram matrix of the bilinear form [.,.] on a
// basis.  Everything downstream is p-local; entries are exact rationals.
//
// Valuation convention: elementary divisors are those of the Gram matrix
// itself; negative valuations mean the dual lattice sits strictly inside the
// lattice.  The invariants of the ambient quadratic space are read off the
// congruence-diagonalized Gram with the diagonal entries taken verbatim as
// form coefficients (see ambient_form below).
struct GramLattice {
  Mat gram;
  Int p;

  int dim() const { return static_cast<int>(gram.size()); }
  void validate(const char* where) const;  // symmetric, nonsingular, p odd
};

struct JordanBlock {
  long scale;      // p-power exponent
  Mat unit_block;  // diagonal with p-unit entries
};

// U^T * gram * U equals the block diagonal with block i scaled by p^{scale_i};
// U is unimodular over Z_p: entries of nonnegative valuation, unit determinant.
struct JordanDecomposition {
  std::vector<JordanBlock> blocks;  // scales strictly increasing
  Mat witness;                      // U

  Mat block_diagonal(const Int& p) const;
};

enum class QuotientKind { anisotropic, split };

struct VertexReport {
  bool is_vertex = false;
  int t = 0;
  // Gram of the induced F_p quadratic form on lattice/dual, convention
  // Q(x) = [x,x]/2 reduced mod p; present iff is_vertex and t > 0.
  std::optional<std::vector<std::vector<long>>> quotient_gram;
  std::optional<QuotientKind> quotient_kind;
};

JordanDecomposition jordan_decompose(const GramLattice& lat);

// Sorted p-adic valuations of the elementary divisors of the Gram matrix,
// computed by exact Smith reduction localized at p.
std::vector<long> dual_quotient(const GramLattice& lat);

VertexReport vertex_report(const GramLattice& lat);

bool is_self_dual(const GramLattice& lat);
bool is_almost_self_dual(const GramLattice& lat);

// Maximal vertex type for an n-dimensional space of unit determinant class:
// n-1 for odd n; n-2 when n is even and det matches the class of (-1)^{n/2};
// n otherwise.  Throws on non-unit det or n < 3.
int t_max(int n, const SquareClass& det);

enum class LatticeKind { self_dual, almost_self_dual };

// Constructive side of the existence theorem: a self-dual lattice when
// eps = +1, an almost-self-dual lattice when eps = -1, in an ambient space
// with the requested (n, det, eps).  Unit diagonal, plus an anisotropic
// (1/p)-scaled 2-block in the almost-self-dual case; one unit entry adjusts
// the determinant and the result is verified a posteriori.
GramLattice construct_lattice(const Int& p, int n, const SquareClass& det,
                              int eps, LatticeKind kind);

// Diagonal form of the ambient quadratic space (Jordan diagonal read in
// scale order).
DiagonalForm ambient_form(const GramLattice& lat);

}  // namespace ssp
