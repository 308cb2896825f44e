#include "ssp/lattice.hpp"

#include <algorithm>
#include <map>

namespace ssp {

void GramLattice::validate(const char* where) const {
  require_odd_prime(p, where);
  if (!mat_is_square(gram) || !mat_is_symmetric(gram))
    throw domain_error(std::string(where) + ": Gram matrix must be square and symmetric");
  if (mat_det(gram) == 0)
    throw domain_error(std::string(where) + ": Gram matrix is singular");
}

Mat JordanDecomposition::block_diagonal(const Int& p) const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.unit_block.size());
  Mat d(n, std::vector<Rat>(n, 0));
  int off = 0;
  for (const auto& b : blocks) {
    Rat pw = 1;
    for (long i = 0; i < std::abs(b.scale); ++i) pw *= Rat(p);
    for (size_t i = 0; i < b.unit_block.size(); ++i)
      for (size_t j = 0; j < b.unit_block.size(); ++j)
        d[off + i][off + j] =
            b.scale >= 0 ? Rat(b.unit_block[i][j] * pw) : Rat(b.unit_block[i][j] / pw);
    off += static_cast<int>(b.unit_block.size());
  }
  return d;
}

namespace {

long val_or_large(const Rat& q, const Int& p) {
  return q == 0 ? 1L << 30 : val_p(q, p);
}

// Simultaneous congruence operation bookkeeping: G <- E^T G E, U <- U E.
struct Congruence {
  Mat g;
  Mat u;

  void swap_basis(int i, int j) {
    if (i == j) return;
    for (auto& row : g) std::swap(row[i], row[j]);
    std::swap(g[i], g[j]);
    for (auto& row : u) std::swap(row[i], row[j]);
  }

  // basis vector e_i += c * e_j
  void add_basis(int i, int j, const Rat& c) {
    for (size_t r = 0; r < g.size(); ++r) g[r][i] += c * g[r][j];
    for (size_t cidx = 0; cidx < g.size(); ++cidx) g[i][cidx] += c * g[j][cidx];
    for (size_t r = 0; r < u.size(); ++r) u[r][i] += c * u[r][j];
  }
};

}  // namespace

JordanDecomposition jordan_decompose(const GramLattice& lat) {
  lat.validate("jordan_decompose");
  const Int& p = lat.p;
  int n = lat.dim();
  Congruence c{lat.gram, mat_identity(n)};

  for (int k = 0; k < n; ++k) {
    // Locate an entry of minimal valuation in the trailing block, preferring
    // the diagonal so no basis mixing is needed.
    long best = 1L << 30;
    for (int i = k; i < n; ++i)
      for (int j = i; j < n; ++j) best = std::min(best, val_or_large(c.g[i][j], p));
    int pi = -1, pj = -1;
    for (int i = k; i < n && pi < 0; ++i)
      if (val_or_large(c.g[i][i], p) == best) pi = pj = i;
    if (pi < 0) {
      for (int i = k; i < n && pi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (val_or_large(c.g[i][j], p) == best) {
            pi = i;
            pj = j;
            break;
          }
      // e_i += e_j (or -=) forces a diagonal entry of minimal valuation;
      // with p odd at least one sign avoids cancellation.
      Rat plus = c.g[pi][pi] + 2 * c.g[pi][pj] + c.g[pj][pj];
      c.add_basis(pi, pj, val_or_large(plus, p) == best ? Rat(1) : Rat(-1));
      pj = pi;
    }
    c.swap_basis(k, pi);

    const Rat d = c.g[k][k];
    for (int r = k + 1; r < n; ++r) {
      if (c.g[k][r] == 0) continue;
      c.add_basis(r, k, -c.g[k][r] / d);
    }
  }

  // Stable sort of the diagonal by valuation via basis swaps.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (val_p(c.g[j][j], p) < val_p(c.g[i][i], p)) c.swap_basis(i, j);

  JordanDecomposition out;
  out.witness = c.u;
  std::map<long, std::vector<Rat>> by_scale;
  for (int i = 0; i < n; ++i) by_scale[val_p(c.g[i][i], p)].push_back(c.g[i][i]);
  for (auto& [scale, entries] : by_scale) {
    Rat pw = 1;
    for (long i = 0; i < std::abs(scale); ++i) pw *= Rat(p);
    JordanBlock blk;
    blk.scale = scale;
    blk.unit_block = Mat(entries.size(), std::vector<Rat>(entries.size(), 0));
    for (size_t i = 0; i < entries.size(); ++i)
      blk.unit_block[i][i] = scale >= 0 ? Rat(entries[i] / pw) : Rat(entries[i] * pw);
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

std::vector<long> dual_quotient(const GramLattice& lat) {
  lat.validate("dual_quotient");
  const Int& p = lat.p;
  int n = lat.dim();
  Mat a = lat.gram;
  std::vector<long> vals;
  // Smith reduction over Z_(p): pivot on minimal valuation, clear with
  // p-integral multipliers.  Row and column operations are independent here
  // (no congruence needed), which keeps it a genuinely different route from
  // jordan_decompose.
  for (int k = 0; k < n; ++k) {
    long best = 1L << 30;
    int pi = k, pj = k;
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j) {
        long v = val_or_large(a[i][j], p);
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    std::swap(a[pi], a[k]);
    for (auto& row : a) std::swap(row[pj], row[k]);
    const Rat d = a[k][k];
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / d;
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (int j = k + 1; j < n; ++j) {
      if (a[k][j] == 0) continue;
      Rat f = a[k][j] / d;
      for (int i = k; i < n; ++i) a[i][j] -= f * a[i][k];
    }
    vals.push_back(best);
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

namespace {

long inv_mod(long a, long p) {
  long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
  while (newr != 0) {
    long q = r / newr;
    std::swap(t, newt);
    newt -= q * t;
    std::swap(r, newr);
    newr -= q * r;
  }
  if (r != 1) throw domain_error("inv_mod: not invertible");
  return ((t % p) + p) % p;
}

// Exhaustive isotropy search over F_p^t for Q(x) = x^T A x.
bool fp_anisotropic(const std::vector<std::vector<long>>& a, long p) {
  int t = static_cast<int>(a.size());
  double total = 1;
  for (int i = 0; i < t; ++i) total *= static_cast<double>(p);
  if (total > 2e6)
    throw resource_error("quotient anisotropy search: p^t too large");
  std::vector<long> x(t, 0);
  long count = static_cast<long>(total);
  for (long idx = 1; idx < count; ++idx) {
    long rem = idx;
    for (int i = 0; i < t; ++i) {
      x[i] = rem % p;
      rem /= p;
    }
    long q = 0;
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) q = (q + a[i][j] % p * x[i] % p * x[j]) % p;
    if (q % p == 0) return false;
  }
  return true;
}

}  // namespace

VertexReport vertex_report(const GramLattice& lat) {
  std::vector<long> vals = dual_quotient(lat);
  VertexReport rep;
  rep.is_vertex = std::all_of(vals.begin(), vals.end(),
                              [](long v) { return v == 0 || v == -1; });
  rep.t = static_cast<int>(std::count(vals.begin(), vals.end(), -1L));
  if (!rep.is_vertex || rep.t == 0) return rep;

  JordanDecomposition jd = jordan_decompose(lat);
  long p = lat.p.get_si();
  long two_inv = inv_mod(2, p);
  for (const auto& blk : jd.blocks) {
    if (blk.scale != -1) continue;
    int t = static_cast<int>(blk.unit_block.size());
    std::vector<std::vector<long>> q(t, std::vector<long>(t, 0));
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) {
        Int r = mod_rat(blk.unit_block[i][j], lat.p, lat.p);
        q[i][j] = (r.get_si() * two_inv) % p;
      }
    rep.quotient_gram = q;
    rep.quotient_kind =
        fp_anisotropic(q, p) ? QuotientKind::anisotropic : QuotientKind::split;
    break;
  }
  return rep;
}

bool is_self_dual(const GramLattice& lat) {
  std::vector<long> vals = dual_quotient(lat);
  return std::all_of(vals.begin(), vals.end(), [](long v) { return v == 0; });
}

bool is_almost_self_dual(const GramLattice& lat) {
  VertexReport rep = vertex_report(lat);
  return rep.is_vertex && rep.t == 2 &&
         rep.quotient_kind == QuotientKind::anisotropic;
}

int t_max(int n, const SquareClass& det) {
  if (n < 3) throw domain_error("t_max: n must be >= 3");
  if (!det.is_unit())
    throw domain_error("t_max: determinant class must be a unit");
  if (n % 2 == 1) return n - 1;
  int half = n / 2;
  bool minus_one_power_square =
      half % 2 == 0 || mpz_legendre(Int(-1).get_mpz_t(), det.p.get_mpz_t()) == 1;
  return det.unit_square == minus_one_power_square ? n - 2 : n;
}

namespace {

Rat least_nonsquare_unit(const Int& p) {
  for (Int u = 2; u < p; ++u)
    if (mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == -1) return Rat(u);
  throw std::logic_error("least_nonsquare_unit: none found");
}

}  // namespace

GramLattice construct_lattice(const Int& p, int n, const SquareClass& det,
                              int eps, LatticeKind kind) {
  require_odd_prime(p, "construct_lattice");
  if (n < 1) throw domain_error("construct_lattice: n must be >= 1");
  if (det.p != p || !det.is_unit())
    throw domain_error("construct_lattice: determinant class must be a unit at p");
  if (kind == LatticeKind::self_dual && eps != 1)
    throw domain_error(
        "construct_lattice: a self-dual lattice exists only when the Hasse "
        "invariant is +1 (existence theorem for unit-determinant spaces)");
  if (kind == LatticeKind::almost_self_dual && eps != -1)
    throw domain_error(
        "construct_lattice: an almost-self-dual lattice exists only when the "
        "Hasse invariant is -1 (existence theorem for unit-determinant spaces)");

  const Rat ns = least_nonsquare_unit(p);
  auto check = [&](const GramLattice& lat) {
    DiagonalForm f = ambient_form(lat);
    LocalInvariants inv = local_invariants(f, Place::at_prime(p));
    bool kind_ok = kind == LatticeKind::self_dual ? is_self_dual(lat)
                                                  : is_almost_self_dual(lat);
    return kind_ok && inv.det == det && inv.hasse == eps;
  };

  std::vector<Rat> unit_choices{Rat(1), ns};
  if (kind == LatticeKind::self_dual) {
    for (const Rat& d : unit_choices) {
      Mat g(n, std::vector<Rat>(n, 0));
      for (int i = 0; i < n - 1; ++i) g[i][i] = 1;
      g[n - 1][n - 1] = d;
      GramLattice lat{g, p};
      if (check(lat)) return lat;
    }
    throw not_found_error("construct_lattice: no self-dual construction matched");
  }

  if (n < 2)
    throw domain_error("construct_lattice: almost-self-dual needs n >= 2");
  for (const Rat& d : unit_choices)
    for (const Rat& a : unit_choices)
      for (const Rat& b : unit_choices) {
        Mat g(n, std::vector<Rat>(n, 0));
        for (int i = 0; i < n - 2; ++i) g[i][i] = 1;
        if (n >= 3) g[n - 3][n - 3] = d;
        g[n - 2][n - 2] = a / Rat(p);
        g[n - 1][n - 1] = b / Rat(p);
        GramLattice lat{g, p};
        if (check(lat)) return lat;
      }
  throw not_found_error(
      "construct_lattice: no almost-self-dual construction matched the "
      "requested invariants (for n = 2 not every class is realizable)");
}

DiagonalForm ambient_form(const GramLattice& lat) {
  JordanDecomposition jd = jordan_decompose(lat);
  DiagonalForm f;
  for (const auto& blk : jd.blocks) {
    Rat pw = 1;
    for (long i = 0; i < std::abs(blk.scale); ++i) pw *= Rat(lat.p);
    for (size_t i = 0; i < blk.unit_block.size(); ++i)
      f.entries.push_back(blk.scale >= 0 ? Rat(blk.unit_block[i][i] * pw)
                                         : Rat(blk.unit_block[i][i] / pw));
  }
  return f;
}

}  // namespace ssp
