#include "ssp/rational.hpp"

#include <algorithm>
#include <set>

namespace ssp {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw domain_error("parse_rat: empty string");
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw domain_error("parse_rat: malformed rational '" + text + "'");
  if (d == 0) throw domain_error("parse_rat: zero denominator in '" + text + "'");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_odd_prime(const Int& p) {
  if (p < 3 || p % 2 == 0) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

void require_odd_prime(const Int& p, const char* where) {
  if (!is_odd_prime(p))
    throw domain_error(std::string(where) + ": p = " + p.get_str() +
                       " is not an odd prime (p = 2 and composites are rejected)");
}

long val_p(const Rat& q, const Int& p) {
  if (q == 0) throw domain_error("val_p: valuation of zero");
  mpz_class tmp;
  long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_num().get_mpz_t(), p.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t()));
  return vn - vd;
}

Rat unit_part(const Rat& q, const Int& p) {
  mpz_class n, d;
  mpz_remove(n.get_mpz_t(), q.get_num().get_mpz_t(), p.get_mpz_t());
  mpz_remove(d.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t());
  Rat u(n, d);
  u.canonicalize();
  return u;
}

Int mod_rat(const Rat& q, const Int& m, const Int& p) {
  if (q != 0 && val_p(q, p) < 0)
    throw domain_error("mod_rat: rational is not p-integral");
  Int n = q.get_num() % m;
  if (n < 0) n += m;
  Int d = q.get_den() % m;
  Int dinv;
  if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t()) == 0)
    throw domain_error("mod_rat: denominator not invertible modulo p^k");
  return (n * dinv) % m;
}

int legendre_unit(const Rat& u, const Int& p) {
  int ln = mpz_legendre(u.get_num().get_mpz_t(), p.get_mpz_t());
  int ld = mpz_legendre(u.get_den().get_mpz_t(), p.get_mpz_t());
  if (ln == 0 || ld == 0)
    throw domain_error("legendre_unit: argument is not a p-unit");
  return ln * ld;
}

namespace {

void collect_odd_primes(Int n, std::set<Int>& out) {
  n = abs(n);
  mpz_class tmp;
  mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), Int(2).get_mpz_t());
  n = tmp;
  Int d = 3;
  const Int cap = 1000000;
  while (n > 1 && d * d <= n && d <= cap) {
    if (n % d == 0) {
      out.insert(d);
      while (n % d == 0) n /= d;
    }
    d += 2;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0)
      out.insert(n);
    else
      throw resource_error("odd_prime_support: cofactor " + n.get_str() +
                           " exceeds the trial-division cap and is composite");
  }
}

}  // namespace

std::vector<Int> odd_prime_support(const std::vector<Rat>& values) {
  std::set<Int> primes;
  for (const Rat& q : values) {
    if (q == 0) throw domain_error("odd_prime_support: zero entry");
    collect_odd_primes(q.get_num(), primes);
    collect_odd_primes(q.get_den(), primes);
  }
  return {primes.begin(), primes.end()};
}

}  // namespace ssp
