#include "ssp/global_forms.hpp"

#include <algorithm>
#include <numeric>

namespace ssp {

int InvariantProfile::eps_at(const Int& p) const {
  auto it = finite.find(p);
  return it == finite.end() ? 1 : it->second.eps;
}

int InvariantProfile::eps_infinity() const {
  int s = signature.second;
  return (s * (s - 1) / 2) % 2 == 0 ? 1 : -1;
}

InvariantProfile profile_of(const DiagonalForm& form) {
  form.validate("profile_of");
  InvariantProfile prof;
  prof.dim = form.dim();
  LocalInvariants real = local_invariants(form, Place::at_real());
  prof.signature = real.signature;

  int eps_product = real.hasse;
  for (const Int& p : odd_prime_support(form.entries)) {
    LocalInvariants inv = local_invariants(form, Place::at_prime(p));
    prof.finite[p] = PrimeData{inv.det, inv.hasse};
    eps_product *= inv.hasse;
  }
  // The 2-adic entry is the value the product formula forces; its det class
  // is deliberately left unset.
  prof.finite[Int(2)] = PrimeData{std::nullopt, eps_product};
  return prof;
}

bool reciprocity_check(const InvariantProfile& profile) {
  int prod = profile.eps_infinity();
  for (const auto& [p, data] : profile.finite) prod *= data.eps;
  return prod == 1;
}

InvariantProfile nearby_profile(const InvariantProfile& profile, const Int& p) {
  require_odd_prime(p, "nearby_profile");
  auto [r, s] = profile.signature;
  if (s != 2 || r != profile.dim - 2)
    throw domain_error("nearby_profile: signature must be (n-2, 2), got (" +
                       std::to_string(r) + ", " + std::to_string(s) + ")");
  if (profile.eps_at(p) != 1)
    throw domain_error("nearby_profile: eps at p must be +1 (it may already have been flipped)");
  auto it = profile.finite.find(p);
  if (it != profile.finite.end() && it->second.det.has_value() &&
      !it->second.det->is_unit())
    throw domain_error("nearby_profile: determinant class at p must be a unit");

  InvariantProfile out = profile;
  out.signature = {profile.dim, 0};
  PrimeData entry = it == profile.finite.end() ? PrimeData{} : it->second;
  entry.eps = -1;
  out.finite[p] = entry;
  return out;
}

bool profile_matches(const DiagonalForm& form, const InvariantProfile& profile) {
  if (form.dim() != profile.dim) return false;
  LocalInvariants real = local_invariants(form, Place::at_real());
  if (real.signature != profile.signature) return false;

  int eps_product = real.hasse;
  std::vector<Int> support = odd_prime_support(form.entries);
  for (const Int& p : support) {
    int eps = hasse_invariant(form, Place::at_prime(p));
    eps_product *= eps;
    auto it = profile.finite.find(p);
    if (it == profile.finite.end()) {
      if (eps != 1) return false;  // unlisted primes carry eps = +1
    }
  }
  for (const auto& [p, data] : profile.finite) {
    if (p == 2) {
      if (data.eps != eps_product) return false;
      continue;
    }
    Place place = Place::at_prime(p);
    if (hasse_invariant(form, place) != data.eps) return false;
    SquareClass det = local_invariants(form, place).det.value();
    if (data.det.has_value()) {
      if (!(det == *data.det)) return false;
    } else if (!det.is_unit()) {
      return false;
    }
  }
  return true;
}

namespace {

// Candidate entry values of height <= bound supported on the given primes,
// in the documented deterministic order: by (height, numerator, denominator,
// sign) with the positive value first.
std::vector<Rat> candidate_scalars(const std::vector<Int>& primes, long bound) {
  auto supported = [&](Int n) {
    for (const Int& p : primes)
      while (n % p == 0) n /= p;
    return n == 1;
  };
  std::vector<Rat> out;
  for (long h = 1; h <= bound; ++h)
    for (long num = 1; num <= h; ++num)
      for (long den = 1; den <= h; ++den) {
        if (std::max(num, den) != h) continue;
        if (std::gcd(num, den) != 1) continue;
        if (!supported(num) || !supported(den)) continue;
        out.emplace_back(num, den);
        out.emplace_back(-Rat(num, den));
      }
  return out;
}

// One square class per candidate and listed odd prime: valuation parity and
// the Legendre sign of the unit part.
struct ClassBit {
  int parity;
  int sign;
};

struct Search {
  const InvariantProfile& profile;
  std::vector<Rat> pool;
  std::vector<Int> odd_primes;
  std::vector<std::vector<ClassBit>> cls;       // [pool index][prime index]
  std::vector<std::optional<ClassBit>> target;  // det class per prime, if pinned

  bool run(std::vector<Rat>& entries) {
    std::vector<ClassBit> acc(odd_primes.size(), ClassBit{0, 1});
    return dfs(entries, 0, 0, acc);
  }

  bool dfs(std::vector<Rat>& entries, int idx, int negs, std::vector<ClassBit>& acc) {
    int n = profile.dim;
    int want_neg = profile.signature.second;
    bool last = idx == n - 1;
    for (size_t ci = 0; ci < pool.size(); ++ci) {
      const Rat& c = pool[ci];
      int negs2 = negs + (c < 0 ? 1 : 0);
      if (negs2 > want_neg || negs2 + (n - idx - 1) < want_neg) continue;
      if (last && !closes_det(ci, acc)) continue;
      entries[idx] = c;
      if (last) {
        if (profile_matches(DiagonalForm{entries}, profile)) return true;
        continue;
      }
      for (size_t j = 0; j < odd_primes.size(); ++j) {
        acc[j].parity ^= cls[ci][j].parity;
        acc[j].sign *= cls[ci][j].sign;
      }
      if (dfs(entries, idx + 1, negs2, acc)) return true;
      for (size_t j = 0; j < odd_primes.size(); ++j) {
        acc[j].parity ^= cls[ci][j].parity;
        acc[j].sign *= cls[ci][j].sign;
      }
    }
    return false;
  }

  // The last entry must complete the determinant class at every listed odd
  // prime (unit parity when the profile leaves the class unpinned).
  bool closes_det(size_t ci, const std::vector<ClassBit>& acc) const {
    for (size_t j = 0; j < odd_primes.size(); ++j) {
      int parity = acc[j].parity ^ cls[ci][j].parity;
      int sign = acc[j].sign * cls[ci][j].sign;
      if (target[j].has_value()) {
        if (parity != target[j]->parity || sign != target[j]->sign) return false;
      } else if (parity != 0) {
        return false;
      }
    }
    return true;
  }
};

}  // namespace

DiagonalForm realize_form(const InvariantProfile& profile, long bound) {
  if (bound < 1) throw domain_error("realize_form: bound must be positive");
  if (!reciprocity_check(profile))
    throw domain_error("realize_form: profile violates Hilbert reciprocity, no global form exists");
  if (profile.dim < 1) throw domain_error("realize_form: dim must be >= 1");
  if (profile.signature.first + profile.signature.second != profile.dim)
    throw domain_error("realize_form: signature does not sum to dim");

  std::vector<Int> primes;
  std::vector<Int> odd_primes;
  for (const auto& [p, data] : profile.finite) {
    primes.push_back(p);
    if (p != 2) odd_primes.push_back(p);
  }
  if (primes.empty()) primes.push_back(2);

  // Height-major deterministic order: the pool for height h extends the pool
  // for h-1, so the first hit is the lexicographically least solution.
  for (long h = 1; h <= bound; ++h) {
    Search search{profile, candidate_scalars(primes, h), odd_primes, {}, {}};
    search.cls.resize(search.pool.size());
    for (size_t i = 0; i < search.pool.size(); ++i)
      for (const Int& p : odd_primes) {
        SquareClass sc = square_class(search.pool[i], p);
        search.cls[i].push_back(ClassBit{sc.val_parity, sc.unit_square ? 1 : -1});
      }
    for (const Int& p : odd_primes) {
      const PrimeData& data = profile.finite.at(p);
      if (data.det.has_value())
        search.target.push_back(
            ClassBit{data.det->val_parity, data.det->unit_square ? 1 : -1});
      else
        search.target.push_back(std::nullopt);
    }
    std::vector<Rat> entries(profile.dim);
    if (search.run(entries)) return DiagonalForm{entries};
  }
  throw not_found_error("realize_form: no form of height <= " +
                        std::to_string(bound) + " realizes the profile");
}

}  // namespace ssp
