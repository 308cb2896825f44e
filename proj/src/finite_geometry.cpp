#include "ssp/finite_geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "ssp/rational.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ssp {

namespace {

// Dense polynomial helpers over F_p, coefficient vectors of fixed length.
std::vector<int> decode_poly(int code, int p, int k) {
  std::vector<int> c(k, 0);
  for (int i = 0; i < k; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

int encode_poly(const std::vector<int>& c, int p) {
  int code = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) code = code * p + c[i];
  return code;
}

// Remainder of a (monic-leading or not) polynomial modulo the monic
// polynomial x^k + m(x), coefficients mod p.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  int k = static_cast<int>(m.size());
  for (int d = static_cast<int>(a.size()) - 1; d >= k; --d) {
    int c = a[d] % p;
    if (c == 0) continue;
    a[d] = 0;
    for (int i = 0; i < k; ++i)
      a[d - k + i] = ((a[d - k + i] - c * m[i]) % p + p) % p;
  }
  a.resize(k);
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return c;
}

bool poly_is_zero(const std::vector<int>& a) {
  return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// Irreducibility of x^k + m(x) over F_p by trial division against every
// monic polynomial of degree 1..k/2.  Desk scale only.
bool modulus_irreducible(const std::vector<int>& m, int p) {
  int k = static_cast<int>(m.size());
  std::vector<int> full(m);
  full.push_back(1);  // x^k + m(x)
  for (int d = 1; 2 * d <= k; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      std::vector<int> divisor = decode_poly(code, p, d);
      divisor.push_back(1);  // monic of degree d
      // full mod divisor
      std::vector<int> r = full;
      for (int top = static_cast<int>(r.size()) - 1; top >= d; --top) {
        int c = r[top] % p;
        if (c == 0) continue;
        for (int i = 0; i <= d; ++i)
          r[top - d + i] = ((r[top - d + i] - c * divisor[i]) % p + p) % p;
      }
      r.resize(d);
      if (poly_is_zero(r)) return false;
    }
  }
  return true;
}

}  // namespace

int FiniteField::max_q() {
  if (const char* env = std::getenv("SSP_MAX_Q")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 125;
}

FiniteField::FiniteField(int p, int k) : p_(p), k_(k) {
  require_odd_prime(Int(p), "FiniteField");
  if (k < 1) throw domain_error("FiniteField: k must be >= 1");
  q_ = 1;
  for (int i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > max_q())
      throw resource_error("FiniteField: p^k exceeds the cap " +
                           std::to_string(max_q()) + " (override with SSP_MAX_Q)");
  }
  for (int code = 0; code < q_; ++code) {
    std::vector<int> m = decode_poly(code, p, k);
    if (modulus_irreducible(m, p)) {
      modulus_ = m;
      break;
    }
  }
  if (modulus_.empty()) throw std::logic_error("FiniteField: no irreducible modulus found");
  build_tables();
}

FiniteField::FiniteField(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  require_odd_prime(Int(p), "FiniteField");
  if (k < 1 || static_cast<int>(modulus_.size()) != k)
    throw domain_error("FiniteField: modulus must list k coefficients c_0..c_{k-1}");
  q_ = 1;
  for (int i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > max_q())
      throw resource_error("FiniteField: p^k exceeds the cap " +
                           std::to_string(max_q()) + " (override with SSP_MAX_Q)");
  }
  for (int& c : modulus_) c = ((c % p) + p) % p;
  if (!modulus_irreducible(modulus_, p))
    throw domain_error("FiniteField: supplied modulus is reducible");
  build_tables();
}

void FiniteField::build_tables() {
  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, -1);
  frob_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    std::vector<int> pa = decode_poly(a, p_, k_);
    for (int b = a; b < q_; ++b) {
      std::vector<int> pb = decode_poly(b, p_, k_);
      std::vector<int> sum(k_);
      for (int i = 0; i < k_; ++i) sum[i] = (pa[i] + pb[i]) % p_;
      int s = encode_poly(sum, p_);
      add_[a * q_ + b] = s;
      add_[b * q_ + a] = s;
      int m = encode_poly(poly_mod(poly_mul(pa, pb, p_), modulus_, p_), p_);
      mul_[a * q_ + b] = m;
      mul_[b * q_ + a] = m;
    }
    std::vector<int> negc(k_);
    for (int i = 0; i < k_; ++i) negc[i] = (p_ - pa[i]) % p_;
    neg_[a] = encode_poly(negc, p_);
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
  for (int a = 0; a < q_; ++a) {
    int r = 1;
    for (int i = 0; i < p_; ++i) r = mul_[r * q_ + a];
    frob_[a] = r;
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw domain_error("FiniteField::inv: zero");
  return inv_[a];
}

int FiniteField::scalar(int c) const { return ((c % p_) + p_) % p_; }

Subspace row_space(const FiniteField& F, std::vector<std::vector<int>> rows) {
  size_t cols = rows.empty() ? 0 : rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    int lead_inv = F.inv(rows[rank][col]);
    for (size_t j = 0; j < cols; ++j) rows[rank][j] = F.mul(rows[rank][j], lead_inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      int f = rows[i][col];
      for (size_t j = 0; j < cols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  rows.resize(rank);
  return Subspace{rows};
}

int rank_of(const FiniteField& F, std::vector<std::vector<int>> rows) {
  return row_space(F, std::move(rows)).dim();
}

namespace {

int inv_mod_small(int a, int p) {
  a = ((a % p) + p) % p;
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw domain_error("inv_mod_small: not invertible");
}

int least_nonsquare(int p) {
  std::vector<bool> is_square(p, false);
  for (int x = 1; x < p; ++x) is_square[x * x % p] = true;
  for (int u = 2; u < p; ++u)
    if (!is_square[u]) return u;
  throw std::logic_error("least_nonsquare: none found");
}

}  // namespace

FiniteQuadSpace::FiniteQuadSpace(int t, SpaceKind kind, int p)
    : t_(t), kind_(kind), p_(p) {
  require_odd_prime(Int(p), "FiniteQuadSpace");
  if (t < 2 || t % 2 != 0)
    throw domain_error("FiniteQuadSpace: dimension must be even and >= 2");
  gram_.assign(t, std::vector<int>(t, 0));
  int inv2 = inv_mod_small(2, p);
  int planes = t / 2;
  for (int b = 0; b < planes; ++b) {
    int i = 2 * b;
    bool last = b == planes - 1;
    if (kind == SpaceKind::nonsplit && last) {
      // Norm form of F_{p^2}/F_p: x^2 - u y^2 with u a nonsquare unit.
      gram_[i][i] = 1;
      gram_[i + 1][i + 1] = p - least_nonsquare(p);
    } else {
      // Hyperbolic plane Q = x y.
      gram_[i][i + 1] = inv2;
      gram_[i + 1][i] = inv2;
    }
  }
}

int FiniteQuadSpace::quad(const FiniteField& F, const std::vector<int>& v) const {
  int acc = 0;
  for (int i = 0; i < t_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < t_; ++j) {
      if (gram_[i][j] == 0 || v[j] == 0) continue;
      acc = F.add(acc, F.mul(F.scalar(gram_[i][j]), F.mul(v[i], v[j])));
    }
  }
  return acc;
}

int FiniteQuadSpace::bilin(const FiniteField& F, const std::vector<int>& u,
                           const std::vector<int>& v) const {
  int acc = 0;
  for (int i = 0; i < t_; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < t_; ++j) {
      if (gram_[i][j] == 0 || v[j] == 0) continue;
      acc = F.add(acc, F.mul(F.scalar(gram_[i][j]), F.mul(u[i], v[j])));
    }
  }
  return F.add(acc, acc);  // [u,v] = 2 u^T A v
}

namespace {

void check_caps(const FiniteQuadSpace& space, const FiniteField& F) {
  if (space.t() > 6)
    throw resource_error("finite_geometry: dimension cap t <= 6 exceeded");
  if (space.p() != F.p())
    throw domain_error("finite_geometry: field characteristic mismatch");
}

// Canonical direction vectors (first nonzero coordinate 1) spanning the
// isotropic lines, in lexicographic order.
std::vector<std::vector<int>> isotropic_directions(const FiniteQuadSpace& space,
                                                   const FiniteField& F) {
  int t = space.t();
  long total = 1;
  for (int i = 0; i < t; ++i) total *= F.q();
  std::vector<std::vector<int>> out;
  for (long code = 1; code < total; ++code) {
    std::vector<int> v(t);
    long rem = code;
    for (int i = t - 1; i >= 0; --i) {
      v[i] = static_cast<int>(rem % F.q());
      rem /= F.q();
    }
    int lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    if (space.quad(F, v) == 0) out.push_back(std::move(v));
  }
  return out;
}

void extend_isotropic(const FiniteQuadSpace& space, const FiniteField& F,
                      const std::vector<std::vector<int>>& directions,
                      std::vector<std::vector<int>>& flag, size_t next, int d,
                      std::set<Subspace>& out) {
  if (static_cast<int>(flag.size()) == d) {
    Subspace s = row_space(F, flag);
    if (s.dim() == d) out.insert(std::move(s));
    return;
  }
  for (size_t i = next; i < directions.size(); ++i) {
    const std::vector<int>& w = directions[i];
    bool ok = true;
    for (const auto& v : flag)
      if (space.bilin(F, v, w) != 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    flag.push_back(w);
    extend_isotropic(space, F, directions, flag, i + 1, d, out);
    flag.pop_back();
  }
}

}  // namespace

std::vector<Subspace> enumerate_isotropic(const FiniteQuadSpace& space, int d,
                                          const FiniteField& F, ExecPolicy policy) {
  check_caps(space, F);
  if (d < 1 || d > space.t() / 2)
    throw domain_error("enumerate_isotropic: need 1 <= d <= t/2");

  std::vector<std::vector<int>> directions = isotropic_directions(space, F);
  std::set<Subspace> all;
  if (policy == ExecPolicy::parallel) {
#ifdef _OPENMP
    int n = static_cast<int>(directions.size());
    std::vector<std::set<Subspace>> shards;
#pragma omp parallel
    {
#pragma omp single
      shards.resize(omp_get_num_threads());
#pragma omp for schedule(dynamic)
      for (int i = 0; i < n; ++i) {
        std::vector<std::vector<int>> flag{directions[i]};
        extend_isotropic(space, F, directions, flag, i + 1, d,
                         shards[omp_get_thread_num()]);
      }
    }
    for (auto& shard : shards) all.merge(shard);
#else
    std::vector<std::vector<int>> flag;
    extend_isotropic(space, F, directions, flag, 0, d, all);
#endif
  } else {
    std::vector<std::vector<int>> flag;
    extend_isotropic(space, F, directions, flag, 0, d, all);
  }
  return {all.begin(), all.end()};
}

Subspace frobenius_image(const FiniteField& F, const Subspace& s) {
  std::vector<std::vector<int>> rows = s.rows;
  for (auto& row : rows)
    for (int& c : row) c = F.frob(c);
  return row_space(F, std::move(rows));
}

std::vector<Subspace> s_lambda_points(const FiniteQuadSpace& space,
                                      const FiniteField& F, ExecPolicy policy) {
  int half = space.t() / 2;
  std::vector<Subspace> lagrangians = enumerate_isotropic(space, half, F, policy);
  std::vector<Subspace> out;
  for (const Subspace& L : lagrangians) {
    Subspace phi = frobenius_image(F, L);
    std::vector<std::vector<int>> stacked = L.rows;
    stacked.insert(stacked.end(), phi.rows.begin(), phi.rows.end());
    if (rank_of(F, std::move(stacked)) == half + 1) out.push_back(L);
  }
  return out;
}

std::vector<Subspace> s_lambda_points(int t, SpaceKind kind, int p, int k,
                                      ExecPolicy policy) {
  FiniteQuadSpace space(t, kind, p);
  FiniteField F(p, k);
  return s_lambda_points(space, F, policy);
}

std::vector<std::vector<Subspace>> frobenius_orbits(
    const std::vector<Subspace>& points, const FiniteField& F) {
  std::set<Subspace> pool(points.begin(), points.end());
  std::vector<std::vector<Subspace>> orbits;
  std::set<Subspace> seen;
  for (const Subspace& start : points) {
    if (seen.count(start)) continue;
    std::vector<Subspace> orbit;
    Subspace cur = start;
    while (!seen.count(cur)) {
      if (!pool.count(cur))
        throw domain_error("frobenius_orbits: point set is not Frobenius-closed");
      seen.insert(cur);
      orbit.push_back(cur);
      cur = frobenius_image(F, cur);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::pair<Subspace, Subspace> orientations(const FiniteQuadSpace& space) {
  if (space.t() != 2 || space.kind() != SpaceKind::nonsplit)
    throw domain_error(
        "orientations: defined for the 2-dimensional nonsplit (anisotropic) "
        "space; a split plane already has rational isotropic lines");
  FiniteField F(space.p(), 2);
  std::vector<Subspace> lines = enumerate_isotropic(space, 1, F, ExecPolicy::serial);
  if (lines.size() != 2)
    throw std::logic_error("orientations: expected exactly two isotropic lines");
  return {lines[0], lines[1]};
}

}  // namespace ssp
