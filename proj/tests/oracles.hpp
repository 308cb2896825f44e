#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <random>
#include <vector>

#include "ssp/affine_weyl.hpp"
#include "ssp/lattice.hpp"
#include "ssp/rational.hpp"

namespace ssp::testing {

// Akiyama-Tanigawa triangle; yields Bernoulli numbers with the B_1 = +1/2
// convention (agrees with the recurrence at every even index).
inline Rat at_bernoulli(unsigned n) {
  std::vector<Rat> a(n + 1);
  for (unsigned j = 0; j <= n; ++j) a[j] = Rat(1, j + 1);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 0; j <= n - i; ++j) a[j] = Rat(j + 1) * (a[j] - a[j + 1]);
  return a[0];
}

// Legendre symbol by exhausting squares mod p.
inline int legendre_by_enumeration(long a, long p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  for (long x = 1; x < p; ++x)
    if (x * x % p == a) return 1;
  return -1;
}

// Number of affine hyperplanes <x, alpha> = k separating the base alcove
// from its image, counted exactly; the geometric meaning of length.
inline long separation_length(const CoxeterDatum& d, const WeylElement& x) {
  int m = d.m();
  std::vector<Rat> c(m);
  for (int i = 0; i < m; ++i) c[i] = Rat(m - i, 2 * m);
  if (d.family() == Family::D) c[m - 1] = Rat(1, 4 * m);
  std::vector<Rat> xc = d.apply_affine(x, c);

  auto floor_of = [](const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
  };
  long total = 0;
  for (const auto& alpha : d.positive_roots()) {
    Rat a = 0, b = 0;
    for (int i = 0; i < m; ++i) {
      a += Rat(alpha[i]) * c[i];
      b += Rat(alpha[i]) * xc[i];
    }
    if (a.get_den() == 1 || b.get_den() == 1)
      throw std::logic_error("separation_length: alcove point hit a wall");
    Int lo = floor_of(a < b ? a : b);
    Int hi = floor_of(a < b ? b : a);
    total += Int(hi - lo).get_si();
  }
  return total;
}

// Plain Gram-Schmidt style congruence diagonalization over Q (no p-adic
// pivoting); returns the diagonal entries.
inline std::vector<Rat> gram_schmidt_diagonal(Mat g) {
  int n = static_cast<int>(g.size());
  for (int k = 0; k < n; ++k) {
    if (g[k][k] == 0) {
      int swap_with = -1;
      for (int i = k + 1; i < n; ++i)
        if (g[i][i] != 0) {
          swap_with = i;
          break;
        }
      if (swap_with >= 0) {
        for (auto& row : g) std::swap(row[k], row[swap_with]);
        std::swap(g[k], g[swap_with]);
      } else {
        int j = -1;
        for (int i = k + 1; i < n; ++i)
          if (g[k][i] != 0) j = i;
        if (j < 0) throw domain_error("gram_schmidt_diagonal: singular block");
        for (int r = 0; r < n; ++r) g[r][k] += g[r][j];
        for (int cidx = 0; cidx < n; ++cidx) g[k][cidx] += g[j][cidx];
      }
    }
    for (int i = k + 1; i < n; ++i) {
      if (g[k][i] == 0) continue;
      Rat f = g[k][i] / g[k][k];
      for (int r = 0; r < n; ++r) g[r][i] -= f * g[r][k];
      for (int cidx = 0; cidx < n; ++cidx) g[i][cidx] -= f * g[k][cidx];
    }
  }
  std::vector<Rat> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = g[i][i];
  return diag;
}

// Random unimodular integer matrix built from elementary operations.
inline Mat random_unimodular(int n, std::mt19937& rng) {
  Mat u = mat_identity(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int step = 0; step < 3 * n; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    int c = coef(rng);
    for (int r = 0; r < n; ++r) u[r][i] += Rat(c) * u[r][j];
  }
  return u;
}

// dim_{F_p} of lattice/dual by explicit coset counting: the number of
// residue vectors x with G x p-integral is p^{n-t} for a vertex lattice.
inline int direct_quotient_dim(const GramLattice& lat) {
  long p = lat.p.get_si();
  int n = lat.dim();
  long total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  long count = 0;
  std::vector<long> x(n, 0);
  for (long idx = 0; idx < total; ++idx) {
    long rem = idx;
    for (int i = 0; i < n; ++i) {
      x[i] = rem % p;
      rem /= p;
    }
    bool integral = true;
    for (int r = 0; r < n && integral; ++r) {
      Rat coord = 0;
      for (int cidx = 0; cidx < n; ++cidx) coord += lat.gram[r][cidx] * Rat(x[cidx]);
      if (coord != 0 && val_p(coord, lat.p) < 0) integral = false;
    }
    if (integral) ++count;
  }
  int e = 0;
  long c = count;
  while (c % p == 0) {
    c /= p;
    ++e;
  }
  if (c != 1) throw std::logic_error("direct_quotient_dim: count is not a p-power");
  return n - e;
}

}  // namespace ssp::testing
