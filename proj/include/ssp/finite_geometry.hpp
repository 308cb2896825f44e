#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "ssp/errors.hpp"

namespace ssp {

// F_{p^k} as a polynomial quotient ring with full arithmetic tables.
// Elements are encoded as integers in [0, p^k): the base-p digits are the
// polynomial coefficients, constant coefficient least significant.  The
// default modulus is the least monic irreducible of degree k under that
// encoding, so runs are reproducible without external tables.
class FiniteField {
 public:
  FiniteField(int p, int k);
  FiniteField(int p, int k, std::vector<int> modulus);  // explicit modulus

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }  // c_0..c_{k-1}

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;
  int frob(int a) const { return frob_[a]; }  // a^p
  int scalar(int c) const;                    // F_p residue -> field element

  // Desk-scale cap on q = p^k; override with the SSP_MAX_Q environment
  // variable.
  static int max_q();

 private:
  void build_tables();

  int p_, k_, q_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_, frob_;
};

// Subspace of F_q^t in reduced row echelon form (the canonical
// representative; comparison is lexicographic on the rows).
struct Subspace {
  std::vector<std::vector<int>> rows;

  int dim() const { return static_cast<int>(rows.size()); }
  auto operator<=>(const Subspace&) const = default;
};

// Row space of arbitrary generators, canonicalized.
Subspace row_space(const FiniteField& F, std::vector<std::vector<int>> rows);

int rank_of(const FiniteField& F, std::vector<std::vector<int>> rows);

enum class SpaceKind { split, nonsplit };

// Quadratic space over F_p of even dimension t with the standard Gram: a sum
// of hyperbolic planes, with the last plane replaced by the norm form of
// F_{p^2}/F_p in the nonsplit case.  Q(x) = x^T A x; the Gram lives over F_p
// and the q-power Frobenius acts coordinatewise in that basis.
class FiniteQuadSpace {
 public:
  FiniteQuadSpace(int t, SpaceKind kind, int p);

  int t() const { return t_; }
  SpaceKind kind() const { return kind_; }
  int p() const { return p_; }
  const std::vector<std::vector<int>>& gram() const { return gram_; }

  int quad(const FiniteField& F, const std::vector<int>& v) const;
  int bilin(const FiniteField& F, const std::vector<int>& u,
            const std::vector<int>& v) const;

 private:
  int t_;
  SpaceKind kind_;
  int p_;
  std::vector<std::vector<int>> gram_;
};

// All totally isotropic d-dimensional subspaces of the space extended to
// F_{p^k}, each in canonical echelon form, sorted.  Exhaustive with pruning
// by isotropy of partial flags.
std::vector<Subspace> enumerate_isotropic(const FiniteQuadSpace& space, int d,
                                          const FiniteField& F,
                                          ExecPolicy policy = ExecPolicy::parallel);

// Image of a subspace under the coordinatewise p-power Frobenius.
Subspace frobenius_image(const FiniteField& F, const Subspace& s);

// Deligne-Lusztig stratum point set: Lagrangians L (dim t/2) over F_{p^k}
// with dim(L + Phi L) = t/2 + 1.
std::vector<Subspace> s_lambda_points(int t, SpaceKind kind, int p, int k,
                                      ExecPolicy policy = ExecPolicy::parallel);
std::vector<Subspace> s_lambda_points(const FiniteQuadSpace& space,
                                      const FiniteField& F,
                                      ExecPolicy policy = ExecPolicy::parallel);

// Orbit partition of a Phi-closed point set, deterministic order.  Throws if
// some image escapes the set.
std::vector<std::vector<Subspace>> frobenius_orbits(
    const std::vector<Subspace>& points, const FiniteField& F);

// The two isotropic lines of an anisotropic plane over F_{p^2}, in
// lexicographic order; picking one orients the plane.
std::pair<Subspace, Subspace> orientations(const FiniteQuadSpace& space);

}  // namespace ssp
