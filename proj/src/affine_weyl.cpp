#include "ssp/affine_weyl.hpp"

#include <algorithm>
#include <string>

namespace ssp {

SignedPerm SignedPerm::identity(int m) {
  SignedPerm s;
  s.img.resize(m);
  for (int i = 0; i < m; ++i) s.img[i] = i + 1;
  return s;
}

SignedPerm SignedPerm::compose(const SignedPerm& other) const {
  // (this ∘ other)(e_j) = this(other(e_j))
  SignedPerm out;
  out.img.resize(img.size());
  for (size_t j = 0; j < img.size(); ++j) {
    int mid = other.img[j];
    int target = mid > 0 ? img[mid - 1] : -img[-mid - 1];
    out.img[j] = target;
  }
  return out;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm out;
  out.img.resize(img.size());
  for (size_t j = 0; j < img.size(); ++j) {
    int code = img[j];
    if (code > 0)
      out.img[code - 1] = static_cast<int>(j) + 1;
    else
      out.img[-code - 1] = -(static_cast<int>(j) + 1);
  }
  return out;
}

int SignedPerm::flips() const {
  int f = 0;
  for (int c : img) f += c < 0;
  return f;
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  // x |-> a.fin(b.fin(x) + b.trans) + a.trans
  WeylElement out;
  out.fin = a.fin.compose(b.fin);
  std::vector<long> moved = a.fin.apply(b.trans);
  out.trans.resize(moved.size());
  for (size_t i = 0; i < moved.size(); ++i) out.trans[i] = moved[i] + a.trans[i];
  return out;
}

WeylElement weyl_inverse(const WeylElement& a) {
  WeylElement out;
  out.fin = a.fin.inverse();
  std::vector<long> neg = out.fin.apply(a.trans);
  out.trans.resize(neg.size());
  for (size_t i = 0; i < neg.size(); ++i) out.trans[i] = -neg[i];
  return out;
}

namespace {

std::vector<int> unit_vec(int m, int i, int v) {
  std::vector<int> e(m, 0);
  e[i] = v;
  return e;
}

long dot(const std::vector<int>& root, const std::vector<long>& v) {
  long s = 0;
  for (size_t i = 0; i < root.size(); ++i) s += root[i] * v[i];
  return s;
}

}  // namespace

CoxeterDatum CoxeterDatum::build(Family family, int m, SigmaChoice sigma,
                                 std::optional<std::set<int>> K) {
  if (family == Family::B && m < 2)
    throw domain_error("CoxeterDatum: type B needs rank m >= 2");
  if (family == Family::D && m < 3)
    throw domain_error("CoxeterDatum: type D needs rank m >= 3");
  if (m > 8)
    throw resource_error("CoxeterDatum: rank cap m <= 8 (enumeration is exponential in m)");
  if (family == Family::B && sigma == SigmaChoice::swap_last_pair)
    throw domain_error(
        "CoxeterDatum: the B diagram has no automorphism swapping the last "
        "two nodes; swap_last_pair is a type D choice");

  CoxeterDatum d;
  d.family_ = family;
  d.m_ = m;
  d.sigma_ = sigma;

  // Positive roots: e_i +- e_j (i < j), plus the short e_i in type B.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<int> r(m, 0);
      r[i] = 1;
      r[j] = -1;
      d.pos_roots_.push_back(r);
      r[j] = 1;
      d.pos_roots_.push_back(r);
    }
  if (family == Family::B)
    for (int i = 0; i < m; ++i) d.pos_roots_.push_back(unit_vec(m, i, 1));

  // Simple reflections.  s_i (1 <= i <= m-1) swaps coordinates i, i+1;
  // s_m flips the last sign (B) or swaps the last two with both signs
  // flipped (D); s_0 is the affine reflection in <x, e_1+e_2> = 1.
  d.simples_.resize(m + 1);
  for (int i = 1; i < m; ++i) {
    SignedPerm w = SignedPerm::identity(m);
    w.img[i - 1] = i + 1;
    w.img[i] = i;
    d.simples_[i] = WeylElement{std::vector<long>(m, 0), w};
  }
  {
    SignedPerm w = SignedPerm::identity(m);
    if (family == Family::B) {
      w.img[m - 1] = -m;
    } else {
      w.img[m - 2] = -m;
      w.img[m - 1] = -(m - 1);
    }
    d.simples_[m] = WeylElement{std::vector<long>(m, 0), w};
  }
  {
    SignedPerm w = SignedPerm::identity(m);
    w.img[0] = -2;
    w.img[1] = -1;
    std::vector<long> v(m, 0);
    v[0] = 1;
    v[1] = 1;
    d.simples_[0] = WeylElement{v, w};
  }

  // tau: translation by e_1 composed with the sign flip of coordinate 1 (and
  // of the last coordinate too in type D, to stay inside the group).
  {
    SignedPerm w = SignedPerm::identity(m);
    w.img[0] = -1;
    if (family == Family::D) w.img[m - 1] = -m;
    std::vector<long> v(m, 0);
    v[0] = 1;
    d.tau_ = WeylElement{v, w};
  }
  if (d.length(d.tau_) != 0)
    throw std::logic_error("CoxeterDatum: tau is not length zero");
  if (d.omega_component(d.tau_) != 1)
    throw std::logic_error("CoxeterDatum: tau has the wrong component");

  // Coxeter matrix of the affine diagram from the simple-root gradients
  // (node 0 carries -theta = -(e_1 + e_2)).
  auto simple_root = [&](int node) {
    std::vector<int> r(m, 0);
    if (node == 0) {
      r[0] = -1;
      r[1] = -1;
    } else if (node < m) {
      r[node - 1] = 1;
      r[node] = -1;
    } else if (family == Family::B) {
      r[m - 1] = 1;
    } else {
      r[m - 2] = 1;
      r[m - 1] = 1;
    }
    return r;
  };
  auto ip = [&](const std::vector<int>& a, const std::vector<int>& b) {
    int s = 0;
    for (int i = 0; i < m; ++i) s += a[i] * b[i];
    return s;
  };
  d.cox_m_.assign(m + 1, std::vector<int>(m + 1, 2));
  for (int i = 0; i <= m; ++i) {
    d.cox_m_[i][i] = 1;
    for (int j = 0; j <= m; ++j) {
      if (i == j) continue;
      std::vector<int> a = simple_root(i), b = simple_root(j);
      int prod = (2 * ip(a, b) / ip(b, b)) * (2 * ip(a, b) / ip(a, a));
      d.cox_m_[i][j] = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
    }
  }

  // Node action of tau by conjugation; verified rather than hard-coded.
  auto conj_nodes = [&](auto&& act) {
    std::vector<int> perm(m + 1, -1);
    for (int i = 0; i <= m; ++i) {
      WeylElement c = act(d.simples_[i]);
      for (int j = 0; j <= m; ++j)
        if (c == d.simples_[j]) {
          perm[i] = j;
          break;
        }
      if (perm[i] < 0)
        throw std::logic_error("CoxeterDatum: conjugation does not permute the simples");
    }
    return perm;
  };
  WeylElement tau_inv = weyl_inverse(d.tau_);
  d.tau_nodes_ = conj_nodes(
      [&](const WeylElement& s) { return weyl_mul(weyl_mul(d.tau_, s), tau_inv); });

  if (sigma == SigmaChoice::identity) {
    d.sigma_nodes_.resize(m + 1);
    for (int i = 0; i <= m; ++i) d.sigma_nodes_[i] = i;
  } else {
    // sigma acts as conjugation by the improper reflection flipping the last
    // coordinate.
    SignedPerm flip = SignedPerm::identity(m);
    flip.img[m - 1] = -m;
    d.sigma_nodes_ = conj_nodes([&](const WeylElement& s) {
      WeylElement out;
      out.fin = flip.compose(s.fin).compose(flip);
      out.trans = flip.apply(s.trans);
      return out;
    });
  }

  // K defaults to everything but node 0 (hyperspecial).
  if (K.has_value()) {
    for (int v : *K)
      if (v < 0 || v > m) throw domain_error("CoxeterDatum: K contains a non-node");
    d.K_ = *K;
  } else {
    for (int i = 1; i <= m; ++i) d.K_.insert(i);
  }
  for (int v : d.K_)
    if (!d.K_.count(d.sigma_nodes_[v]))
      throw domain_error("CoxeterDatum: K is not sigma-stable");

  // Admissible set: subword closure below every translation in the
  // W_0-orbit of e_1.
  std::vector<std::vector<long>> orbit;
  {
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> queue;
    std::vector<long> lambda(m, 0);
    lambda[0] = 1;
    queue.push_back(lambda);
    seen.insert(lambda);
    while (!queue.empty()) {
      std::vector<long> v = queue.back();
      queue.pop_back();
      orbit.push_back(v);
      for (int i = 1; i <= m; ++i) {
        std::vector<long> w = d.simples_[i].fin.apply(v);
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    std::sort(orbit.begin(), orbit.end());
  }
  std::set<WeylElement> adm;
  for (const auto& mu : orbit) {
    WeylElement t_mu = d.translation(mu);
    WeylElement a = weyl_mul(t_mu, d.tau_);  // tau is an involution
    std::vector<int> word = d.reduced_word(a);
    size_t L = word.size();
    for (size_t mask = 0; mask < (size_t{1} << L); ++mask) {
      WeylElement b = d.identity_element();
      for (size_t i = 0; i < L; ++i)
        if (mask & (size_t{1} << i)) b = weyl_mul(b, d.simples_[word[i]]);
      adm.insert(weyl_mul(b, d.tau_));
    }
  }
  d.adm_.assign(adm.begin(), adm.end());
  return d;
}

const WeylElement& CoxeterDatum::simple(int node) const {
  if (node < 0 || node > m_)
    throw domain_error("CoxeterDatum::simple: node out of range");
  return simples_[node];
}

WeylElement CoxeterDatum::identity_element() const {
  return WeylElement{std::vector<long>(m_, 0), SignedPerm::identity(m_)};
}

WeylElement CoxeterDatum::translation(const std::vector<long>& v) const {
  if (static_cast<int>(v.size()) != m_)
    throw domain_error("CoxeterDatum::translation: wrong rank");
  return WeylElement{v, SignedPerm::identity(m_)};
}

void CoxeterDatum::check_element(const WeylElement& x) const {
  if (static_cast<int>(x.trans.size()) != m_ ||
      static_cast<int>(x.fin.img.size()) != m_)
    throw domain_error("CoxeterDatum: element has the wrong rank for this datum");
  if (family_ == Family::D && x.fin.flips() % 2 != 0)
    throw domain_error("CoxeterDatum: odd sign count is not an element of type D");
}

bool CoxeterDatum::root_positive(const std::vector<long>& root) const {
  for (long c : root) {
    if (c > 0) return true;
    if (c < 0) return false;
  }
  throw std::logic_error("root_positive: zero vector");
}

long CoxeterDatum::length(const WeylElement& x) const {
  check_element(x);
  SignedPerm winv = x.fin.inverse();
  long total = 0;
  for (const auto& alpha : pos_roots_) {
    std::vector<long> alpha_l(alpha.begin(), alpha.end());
    long pairing = dot(alpha, x.trans);
    bool pos = root_positive(winv.apply(alpha_l));
    total += pos ? std::labs(pairing) : std::labs(pairing - 1);
  }
  return total;
}

int CoxeterDatum::omega_component(const WeylElement& x) const {
  check_element(x);
  long s = 0;
  for (long c : x.trans) s += c;
  return static_cast<int>(((s % 2) + 2) % 2);
}

std::vector<int> CoxeterDatum::reduced_word(const WeylElement& x) const {
  check_element(x);
  std::vector<int> word;
  WeylElement cur = x;
  long len = length(cur);
  while (len > 0) {
    bool found = false;
    for (int i = 0; i <= m_; ++i) {
      WeylElement next = weyl_mul(simples_[i], cur);
      if (length(next) == len - 1) {
        word.push_back(i);
        cur = next;
        --len;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no descent found");
  }
  if (!(cur == identity_element() || cur == tau_))
    throw std::logic_error("reduced_word: length-zero part is neither e nor tau");
  return word;
}

bool CoxeterDatum::bruhat_leq(const WeylElement& a, const WeylElement& b) const {
  check_element(a);
  check_element(b);
  if (omega_component(a) != omega_component(b)) return false;
  WeylElement x = a, y = b;
  if (omega_component(a) == 1) {
    x = weyl_mul(a, tau_);
    y = weyl_mul(b, tau_);
  }
  // Recursive descent criterion inside the Coxeter group W_a.
  WeylElement e = identity_element();
  auto rec = [&](auto&& self, const WeylElement& u, const WeylElement& v) -> bool {
    if (v == e) return u == e;
    long lv = length(v);
    for (int i = 0; i <= m_; ++i) {
      WeylElement sv = weyl_mul(simples_[i], v);
      if (length(sv) != lv - 1) continue;
      WeylElement su = weyl_mul(simples_[i], u);
      if (length(su) < length(u)) return self(self, su, sv);
      return self(self, u, sv);
    }
    throw std::logic_error("bruhat_leq: no descent");
  };
  return rec(rec, x, y);
}

bool CoxeterDatum::is_min_rep(const WeylElement& x) const {
  long len = length(x);
  for (int s : K_)
    if (length(weyl_mul(simples_[s], x)) <= len) return false;
  return true;
}

std::vector<WeylElement> CoxeterDatum::min_reps() const {
  std::vector<WeylElement> out;
  for (const auto& w : adm_)
    if (is_min_rep(w)) out.push_back(w);
  return out;
}

std::vector<WeylElement> CoxeterDatum::eo_set() const { return min_reps(); }

std::set<int> CoxeterDatum::support(const WeylElement& x) const {
  WeylElement w = omega_component(x) == 1 ? weyl_mul(x, tau_) : x;
  std::vector<int> word = reduced_word(w);
  return {word.begin(), word.end()};
}

std::vector<int> CoxeterDatum::tau_sigma_nodes() const {
  std::vector<int> perm(m_ + 1);
  for (int i = 0; i <= m_; ++i) perm[i] = tau_nodes_[sigma_nodes_[i]];
  return perm;
}

std::set<int> CoxeterDatum::sigma_support(const WeylElement& x) const {
  std::set<int> supp = support(x);
  std::vector<int> pi = omega_component(x) == 1 ? tau_sigma_nodes() : sigma_nodes_;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v : std::set<int>(supp))
      if (supp.insert(pi[v]).second) grew = true;
  }
  return supp;
}

bool CoxeterDatum::is_sigma_coxeter(const WeylElement& x) const {
  std::set<int> supp = sigma_support(x);
  std::vector<int> pi = omega_component(x) == 1 ? tau_sigma_nodes() : sigma_nodes_;
  std::set<int> seen;
  long orbits = 0;
  for (int v : supp) {
    if (seen.count(v)) continue;
    ++orbits;
    int cur = v;
    while (seen.insert(cur).second) cur = pi[cur];
  }
  return length(x) == orbits;
}

std::vector<WeylElement> CoxeterDatum::eo_cox_set() const {
  std::vector<WeylElement> out;
  for (const auto& w : eo_set()) {
    if (!is_sigma_coxeter(w)) continue;
    if (static_cast<int>(sigma_support(w).size()) == m_ + 1) continue;
    out.push_back(w);
  }
  return out;
}

int CoxeterDatum::coxeter_m(int i, int j) const {
  if (i < 0 || j < 0 || i > m_ || j > m_)
    throw domain_error("coxeter_m: node out of range");
  return cox_m_[i][j];
}

std::vector<std::set<int>> CoxeterDatum::j_set() const {
  if (static_cast<int>(K_.size()) != m_)
    throw domain_error("j_set: requires |S - K| = 1 (a maximal proper K)");
  int excluded = -1;
  for (int v = 0; v <= m_; ++v)
    if (!K_.count(v)) excluded = v;

  // Breadth-first distances on the diagram.
  std::vector<int> dist(m_ + 1, -1);
  std::vector<int> queue{excluded};
  dist[excluded] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w = 0; w <= m_; ++w)
      if (cox_m_[v][w] >= 3 && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }

  std::vector<int> pi = tau_sigma_nodes();
  std::vector<std::set<int>> out;
  for (unsigned mask = 1; mask < (1u << (m_ + 1)); ++mask) {
    std::set<int> sigma;
    for (int v = 0; v <= m_; ++v)
      if (mask & (1u << v)) sigma.insert(v);
    bool stable = std::all_of(sigma.begin(), sigma.end(),
                              [&](int v) { return sigma.count(pi[v]) > 0; });
    if (!stable) continue;
    int d0 = dist[*sigma.begin()];
    bool equi = std::all_of(sigma.begin(), sigma.end(),
                            [&](int v) { return dist[v] == d0; });
    if (equi) out.push_back(sigma);
  }
  return out;
}

std::vector<CoxeterDatum::TableRow> CoxeterDatum::table_rows() const {
  std::vector<TableRow> rows;
  auto chain = [&](int j) {
    // s_0 s_2 s_3 ... s_{j-1}
    std::vector<int> w{0};
    for (int s = 2; s <= j - 1; ++s) w.push_back(s);
    return w;
  };
  rows.push_back(TableRow{{0, 1}, {}});
  int top = family_ == Family::B ? m_ : m_ - 1;
  for (int j = 2; j <= top; ++j) rows.push_back(TableRow{{j}, chain(j)});
  if (family_ == Family::D && sigma_ == SigmaChoice::swap_last_pair) {
    std::vector<int> wm1 = chain(m_ - 1);  // s_0 s_2 ... s_{m-2}
    wm1.push_back(m_);
    std::vector<int> wm = chain(m_ - 1);
    wm.push_back(m_ - 1);
    rows.push_back(TableRow{{m_ - 1}, wm1});
    rows.push_back(TableRow{{m_}, wm});
  }
  return rows;
}

WeylElement CoxeterDatum::table_w_sigma(const std::set<int>& label) const {
  std::vector<TableRow> rows = table_rows();
  // Later rows win: the two printed maximal rows of the D nonsplit table
  // take precedence over the generic chain at the double-booked label.
  const TableRow* hit = nullptr;
  for (const auto& row : rows)
    if (row.label == label) hit = &row;
  if (!hit) {
    std::string text;
    for (int v : label) text += (text.empty() ? "" : ",") + std::to_string(v);
    throw domain_error("table_w_sigma: {" + text + "} is not a stratum label of this table");
  }
  return eval_word(hit->word, true);
}

int CoxeterDatum::t_sigma(const std::set<int>& label) const {
  return static_cast<int>(2 * (length(table_w_sigma(label)) + 1));
}

WeylElement CoxeterDatum::eval_word(const std::vector<int>& word, bool times_tau) const {
  WeylElement x = identity_element();
  for (int s : word) x = weyl_mul(x, simple(s));
  if (times_tau) x = weyl_mul(x, tau_);
  return x;
}

std::vector<Rat> CoxeterDatum::apply_affine(const WeylElement& x,
                                            const std::vector<Rat>& pt) const {
  check_element(x);
  std::vector<Rat> out = x.fin.apply(pt);
  for (int i = 0; i < m_; ++i) out[i] += Rat(x.trans[i]);
  return out;
}

std::vector<WeylElement> sorted_by_length_word(const CoxeterDatum& datum,
                                               std::vector<WeylElement> elems) {
  std::vector<std::tuple<long, std::vector<int>, int, WeylElement>> keyed;
  keyed.reserve(elems.size());
  for (auto& e : elems)
    keyed.emplace_back(datum.length(e), datum.reduced_word(e),
                       datum.omega_component(e), e);
  std::sort(keyed.begin(), keyed.end());
  std::vector<WeylElement> out;
  out.reserve(keyed.size());
  for (auto& [l, w, c, e] : keyed) out.push_back(e);
  return out;
}

}  // namespace ssp
