#include "ssp/mass.hpp"

#include <mutex>
#include <vector>

namespace ssp {

namespace {

Int binom(unsigned n, unsigned k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

std::mutex bernoulli_mutex;
std::vector<Rat> bernoulli_cache;  // guarded by bernoulli_mutex

}  // namespace

Rat bernoulli(unsigned n) {
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  if (bernoulli_cache.empty()) {
    bernoulli_cache.push_back(Rat(1));
    bernoulli_cache.push_back(Rat(-1, 2));
  }
  while (bernoulli_cache.size() <= n) {
    unsigned k = static_cast<unsigned>(bernoulli_cache.size());
    // sum_{j=0}^{k} C(k+1, j) B_j = 0
    Rat sum = 0;
    for (unsigned j = 0; j < k; ++j) sum += Rat(binom(k + 1, j)) * bernoulli_cache[j];
    bernoulli_cache.push_back(-sum / Rat(k + 1));
  }
  return bernoulli_cache[n];
}

Rat bernoulli_poly(unsigned n, const Rat& x) {
  // sum_{k=0}^{n} C(n,k) B_k x^{n-k}
  Rat value = 0;
  for (unsigned k = 0; k <= n; ++k) {
    Rat xp = 1;
    for (unsigned i = 0; i < n - k; ++i) xp *= x;
    value += Rat(binom(n, k)) * bernoulli(k) * xp;
  }
  return value;
}

Rat zeta_neg(unsigned r) {
  if (r < 1) throw domain_error("zeta_neg: r must be >= 1");
  return -bernoulli(2 * r) / Rat(2 * r);
}

int kronecker_chi(const Int& d, const Int& a) {
  return mpz_kronecker(d.get_mpz_t(), a.get_mpz_t());
}

bool is_fundamental_discriminant(const Int& d) {
  if (d == 0 || d == 1) return false;
  auto squarefree = [](Int n) {
    n = abs(n);
    for (Int f = 2; f * f <= n; ++f)
      if (n % (f * f) == 0) return false;
    return true;
  };
  Int mod4 = ((d % 4) + 4) % 4;
  if (mod4 == 1) return squarefree(d);
  if (mod4 == 0) {
    Int q = d / 4;
    Int qmod4 = ((q % 4) + 4) % 4;
    return (qmod4 == 2 || qmod4 == 3) && squarefree(q);
  }
  return false;
}

Rat l_neg(unsigned m, const Int& disc) {
  if (m < 1) throw domain_error("l_neg: m must be >= 1");
  if (abs(disc) > 1000000)
    throw resource_error("l_neg: |disc| exceeds the 10^6 cap (the character sum has |disc| terms)");
  if (!is_fundamental_discriminant(disc))
    throw domain_error("l_neg: " + disc.get_str() +
                       " is not a fundamental discriminant");
  Int f = abs(disc);
  Rat b_m_chi = 0;
  for (Int a = 1; a <= f; ++a) {
    int chi = kronecker_chi(disc, a);
    if (chi == 0) continue;
    b_m_chi += Rat(chi) * bernoulli_poly(m, Rat(a) / Rat(f));
  }
  Rat fpow = 1;
  for (unsigned i = 0; i + 1 < m; ++i) fpow *= Rat(f);
  b_m_chi *= fpow;
  return -b_m_chi / Rat(m);
}

MassOutput mass(const MassInput& input) {
  if (input.n < 3) throw domain_error("mass: n must be >= 3");
  require_odd_prime(input.p, "mass");
  if (input.vol <= 0) throw domain_error("mass: vol must be positive");

  const Int& p = input.p;
  Rat value = input.vol;
  if (input.n % 2 == 1) {
    unsigned m = static_cast<unsigned>((input.n - 1) / 2);
    for (unsigned r = 1; r <= m; ++r) value *= zeta_neg(r);
    Rat half_pow = 1;
    for (unsigned i = 0; i + 1 < m; ++i) half_pow *= Rat(1, 2);
    value *= half_pow;
    Int p2m = 1;
    for (unsigned i = 0; i < 2 * m; ++i) p2m *= p;
    value *= Rat(p2m - 1) / Rat(2 * (p + 1));
  } else {
    if (!input.disc.has_value())
      throw domain_error("mass: even n requires a fundamental discriminant for chi");
    unsigned m = static_cast<unsigned>(input.n / 2);
    for (unsigned r = 1; r <= m; ++r) value *= zeta_neg(r);
    value *= l_neg(m, *input.disc);
    Rat half_pow = 1;
    for (unsigned i = 0; i + 1 < m; ++i) half_pow *= Rat(1, 2);
    value *= half_pow;
    Int pm1 = 1, pm = 1, pmp1 = 1;
    for (unsigned i = 0; i + 1 < m; ++i) pm1 *= p;
    for (unsigned i = 0; i < m; ++i) pm *= p;
    for (unsigned i = 0; i < m + 1; ++i) pmp1 *= p;
    Rat local = input.variant == EvenLocalVariant::as_printed
                    ? Rat((pm1 + 1) * pmp1) / Rat(2 * (p + 1))
                    : Rat((pm1 + 1) * (pm + 1)) / Rat(2 * (p + 1));
    value *= local;
  }
  return MassOutput{value, abs(value)};
}

Rat deuring(const Int& p) {
  require_odd_prime(p, "deuring");
  return Rat(p - 1) / Rat(24);
}

}  // namespace ssp
