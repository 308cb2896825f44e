#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ssp/affine_weyl.hpp"
#include "ssp/lattice.hpp"

using namespace ssp;

namespace {

std::set<WeylElement> as_set(const std::vector<WeylElement>& v) {
  return {v.begin(), v.end()};
}

std::set<WeylElement> table_elements(const CoxeterDatum& d) {
  std::set<WeylElement> out;
  for (const auto& row : d.table_rows()) out.insert(d.eval_word(row.word, true));
  return out;
}

// Greedy right descents, an independent second reduced word.
std::vector<int> right_word(const CoxeterDatum& d, const WeylElement& x) {
  WeylElement cur = d.omega_component(x) == 1 ? weyl_mul(x, d.tau()) : x;
  std::vector<int> word;
  long len = d.length(cur);
  while (len > 0) {
    for (int i = 0; i <= d.m(); ++i) {
      WeylElement next = weyl_mul(cur, d.simple(i));
      if (d.length(next) == len - 1) {
        word.push_back(i);
        cur = next;
        --len;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

TEST_CASE("datum construction") {
  CoxeterDatum b2 = CoxeterDatum::build(Family::B, 2, SigmaChoice::identity);
  CHECK(b2.length(b2.tau()) == 0);
  CHECK_FALSE(b2.tau() == b2.identity_element());
  CHECK(b2.omega_component(b2.tau()) == 1);
  CHECK(b2.omega_component(b2.translation({1, 0})) == 1);

  CHECK_NOTHROW(CoxeterDatum::build(Family::D, 4, SigmaChoice::swap_last_pair));
  CHECK_THROWS_AS(CoxeterDatum::build(Family::B, 2, SigmaChoice::swap_last_pair),
                  domain_error);
  CHECK_THROWS_AS(CoxeterDatum::build(Family::D, 2, SigmaChoice::identity),
                  domain_error);
  // K = S - {m} is not stable under the last-pair swap
  std::set<int> K;
  for (int i = 0; i < 4; ++i) K.insert(i);
  CHECK_THROWS_AS(CoxeterDatum::build(Family::D, 4, SigmaChoice::swap_last_pair, K),
                  domain_error);
  CHECK_NOTHROW(CoxeterDatum::build(Family::D, 4, SigmaChoice::identity, K));
}

TEST_CASE("diagram structure") {
  CoxeterDatum b4 = CoxeterDatum::build(Family::B, 4, SigmaChoice::identity);
  // fork at 0,1 into 2; double bond at the far end
  CHECK(b4.coxeter_m(0, 2) == 3);
  CHECK(b4.coxeter_m(1, 2) == 3);
  CHECK(b4.coxeter_m(0, 1) == 2);
  CHECK(b4.coxeter_m(3, 4) == 4);
  // tau swaps the fork tips
  CHECK(b4.tau_nodes()[0] == 1);
  CHECK(b4.tau_nodes()[1] == 0);
  CHECK(b4.tau_nodes()[3] == 3);

  // B~_2 degenerates to a path with two double bonds
  CoxeterDatum b2 = CoxeterDatum::build(Family::B, 2, SigmaChoice::identity);
  CHECK(b2.coxeter_m(0, 2) == 4);
  CHECK(b2.coxeter_m(1, 2) == 4);
  CHECK(b2.coxeter_m(0, 1) == 2);

  CoxeterDatum d4 = CoxeterDatum::build(Family::D, 4, SigmaChoice::swap_last_pair);
  CHECK(d4.coxeter_m(2, 3) == 3);
  CHECK(d4.coxeter_m(2, 4) == 3);
  CHECK(d4.coxeter_m(3, 4) == 2);
  CHECK(d4.tau_nodes()[0] == 1);
  CHECK(d4.tau_nodes()[3] == 4);  // tau also swaps the far fork
  CHECK(d4.sigma_nodes()[3] == 4);
  std::vector<int> ts = d4.tau_sigma_nodes();
  CHECK(ts[3] == 3);  // tau sigma fixes the far fork, swaps 0 and 1
  CHECK(ts[0] == 1);

  // D~_3 is the 4-cycle 0-2-1-3-0
  CoxeterDatum d3 = CoxeterDatum::build(Family::D, 3, SigmaChoice::identity);
  CHECK(d3.coxeter_m(0, 2) == 3);
  CHECK(d3.coxeter_m(0, 3) == 3);
  CHECK(d3.coxeter_m(1, 2) == 3);
  CHECK(d3.coxeter_m(1, 3) == 3);
  CHECK(d3.coxeter_m(0, 1) == 2);
  CHECK(d3.coxeter_m(2, 3) == 2);
}

TEST_CASE("length and the geometric separation count") {
  for (auto [family, m, sigma] :
       {std::tuple{Family::B, 2, SigmaChoice::identity},
        std::tuple{Family::B, 3, SigmaChoice::identity},
        std::tuple{Family::D, 3, SigmaChoice::swap_last_pair},
        std::tuple{Family::D, 4, SigmaChoice::identity}}) {
    CoxeterDatum d = CoxeterDatum::build(family, m, sigma);
    CHECK(d.length(d.identity_element()) == 0);
    std::vector<long> lambda(m, 0);
    lambda[0] = 1;
    WeylElement t_lambda = d.translation(lambda);
    long expected = family == Family::B ? 2 * m - 1 : 2 * m - 2;
    CHECK(d.length(t_lambda) == expected);
    CHECK(testing::separation_length(d, t_lambda) == expected);
    for (const auto& w : d.adm_set())
      CHECK(d.length(w) == testing::separation_length(d, w));
  }
}

TEST_CASE("reduced words are consistent") {
  CoxeterDatum d = CoxeterDatum::build(Family::B, 3, SigmaChoice::identity);
  for (const auto& w : d.adm_set()) {
    std::vector<int> left = d.reduced_word(w);
    std::vector<int> right = right_word(d, w);
    CHECK(left.size() == right.size());
    CHECK(static_cast<long>(left.size()) == d.length(w));
    CHECK(d.eval_word(left, d.omega_component(w) == 1) == w);
    CHECK(d.eval_word(right, d.omega_component(w) == 1) == w);
  }
}

TEST_CASE("bruhat order") {
  CoxeterDatum d = CoxeterDatum::build(Family::B, 2, SigmaChoice::identity);
  WeylElement e = d.identity_element();
  CHECK(d.bruhat_leq(e, e));
  CHECK_FALSE(d.bruhat_leq(e, d.tau()));  // components differ
  CHECK(d.bruhat_leq(d.tau(), d.tau()));
  // identity below every element of W_a
  for (const auto& w : d.adm_set()) {
    WeylElement wa = weyl_mul(w, d.tau());
    CHECK(d.bruhat_leq(e, wa));
  }
  // subword sanity: s0 <= s0 s2 s0
  WeylElement s0 = d.simple(0);
  WeylElement s0s2s0 = d.eval_word({0, 2, 0}, false);
  CHECK(d.bruhat_leq(s0, s0s2s0));
  CHECK_FALSE(d.bruhat_leq(s0s2s0, s0));
  CHECK_THROWS_AS(
      d.bruhat_leq(e, CoxeterDatum::build(Family::B, 3, SigmaChoice::identity).tau()),
      domain_error);
}

TEST_CASE("admissible set") {
  for (auto [family, m, sigma] :
       {std::tuple{Family::B, 2, SigmaChoice::identity},
        std::tuple{Family::D, 3, SigmaChoice::identity},
        std::tuple{Family::D, 4, SigmaChoice::swap_last_pair}}) {
    CoxeterDatum d = CoxeterDatum::build(family, m, sigma);
    std::set<WeylElement> adm = as_set(d.adm_set());
    CHECK(adm.count(d.tau()) == 1);
    CHECK(adm.count(d.identity_element()) == 0);
    std::vector<long> lambda(m, 0);
    lambda[0] = 1;
    CHECK(adm.count(d.translation(lambda)) == 1);
    // every member is genuinely below some orbit translation
    for (const auto& w : adm) {
      bool below = false;
      for (int i = 0; i < m && !below; ++i)
        for (long sign : {1L, -1L}) {
          std::vector<long> mu(m, 0);
          mu[i] = sign;
          if (d.bruhat_leq(w, d.translation(mu))) {
            below = true;
            break;
          }
        }
      CHECK(below);
    }
  }
}

TEST_CASE("adm_set is the full lower cone (ball cross-check)") {
  // Brute-force the ball of radius l(t_lambda) by breadth-first right
  // multiplication, filter by the recursive Bruhat criterion against every
  // orbit translation, and compare with the subword-closure enumeration.
  for (auto [family, m] : {std::pair{Family::B, 2}, std::pair{Family::D, 3}}) {
    CoxeterDatum d = CoxeterDatum::build(family, m, SigmaChoice::identity);
    std::vector<long> lambda(m, 0);
    lambda[0] = 1;
    long radius = d.length(d.translation(lambda));

    std::set<WeylElement> ball{d.identity_element(), d.tau()};
    std::vector<WeylElement> frontier(ball.begin(), ball.end());
    while (!frontier.empty()) {
      std::vector<WeylElement> next;
      for (const auto& w : frontier)
        for (int i = 0; i <= m; ++i) {
          WeylElement ws = weyl_mul(w, d.simple(i));
          if (d.length(ws) <= radius && ball.insert(ws).second) next.push_back(ws);
        }
      frontier = std::move(next);
    }

    std::vector<WeylElement> translations;
    for (int i = 0; i < m; ++i)
      for (long sign : {1L, -1L}) {
        std::vector<long> mu(m, 0);
        mu[i] = sign;
        translations.push_back(d.translation(mu));
      }
    std::set<WeylElement> expected;
    for (const auto& w : ball)
      for (const auto& t : translations)
        if (d.bruhat_leq(w, t)) {
          expected.insert(w);
          break;
        }
    CHECK(expected == as_set(d.adm_set()));
  }
}

TEST_CASE("minimal coset representatives") {
  CoxeterDatum d = CoxeterDatum::build(Family::B, 3, SigmaChoice::identity);
  CHECK(d.is_min_rep(d.tau()));
  WeylElement s0tau = weyl_mul(d.simple(0), d.tau());
  CHECK(d.is_min_rep(s0tau));  // 0 is not in the default K
  std::set<WeylElement> reps = as_set(d.min_reps());
  CHECK(reps.count(d.tau()) == 1);
  CHECK(reps.count(s0tau) == 1);

  // with 0 in K, s0 tau stops being minimal
  std::set<int> K{0, 2, 3};
  CoxeterDatum dk = CoxeterDatum::build(Family::B, 3, SigmaChoice::identity, K);
  CHECK_FALSE(dk.is_min_rep(s0tau));
  CHECK(dk.is_min_rep(dk.tau()));
}

TEST_CASE("sigma support and sigma-Coxeter elements") {
  CoxeterDatum d = CoxeterDatum::build(Family::B, 3, SigmaChoice::identity);
  CHECK(d.sigma_support(d.tau()).empty());
  CHECK(d.is_sigma_coxeter(d.tau()));

  WeylElement s0tau = weyl_mul(d.simple(0), d.tau());
  CHECK(d.sigma_support(s0tau) == std::set<int>{0, 1});
  CHECK(d.is_sigma_coxeter(s0tau));

  WeylElement s0s1tau = d.eval_word({0, 1}, true);
  CHECK(d.length(s0s1tau) == 2);
  CHECK(d.sigma_support(s0s1tau) == std::set<int>{0, 1});
  CHECK_FALSE(d.is_sigma_coxeter(s0s1tau));  // one orbit versus length two
}

TEST_CASE("EO sets against the stratum tables") {
  for (int m : {2, 3, 4}) {
    CoxeterDatum d = CoxeterDatum::build(Family::B, m, SigmaChoice::identity);
    std::set<WeylElement> cox = as_set(d.eo_cox_set());
    std::set<WeylElement> eo = as_set(d.eo_set());
    for (const auto& w : cox) {
      CHECK(eo.count(w) == 1);
      CHECK(d.sigma_support(w).size() < static_cast<size_t>(m + 1));
    }
    CHECK(cox == table_elements(d));
    CHECK(cox.size() == static_cast<size_t>(m));
  }
  for (int m : {3, 4}) {
    CoxeterDatum split = CoxeterDatum::build(Family::D, m, SigmaChoice::identity);
    CHECK(as_set(split.eo_cox_set()) == table_elements(split));
    CHECK(split.eo_cox_set().size() == static_cast<size_t>(m - 1));
    CoxeterDatum nonsplit =
        CoxeterDatum::build(Family::D, m, SigmaChoice::swap_last_pair);
    CHECK(as_set(nonsplit.eo_cox_set()) == table_elements(nonsplit));
    CHECK(nonsplit.eo_cox_set().size() == static_cast<size_t>(m + 1));
  }
}

TEST_CASE("table lookups and stratum types") {
  CoxeterDatum b3 = CoxeterDatum::build(Family::B, 3, SigmaChoice::identity);
  CHECK(b3.table_w_sigma({0, 1}) == b3.tau());
  CHECK(b3.t_sigma({0, 1}) == 2);
  CHECK(b3.table_w_sigma({2}) == weyl_mul(b3.simple(0), b3.tau()));
  CHECK(b3.t_sigma({2}) == 4);
  CHECK(b3.table_w_sigma({3}) == b3.eval_word({0, 2}, true));
  CHECK_THROWS_AS(b3.table_w_sigma({1, 2}), domain_error);

  CoxeterDatum d4 = CoxeterDatum::build(Family::D, 4, SigmaChoice::swap_last_pair);
  CHECK(d4.table_w_sigma({4}) == d4.eval_word({0, 2, 3}, true));
  CHECK(d4.table_w_sigma({3}) == d4.eval_word({0, 2, 4}, true));  // printed maximal row
  CHECK(d4.t_sigma({3}) == 8);
  CHECK(d4.t_sigma({4}) == 8);
}

TEST_CASE("the minimal stratum is tau with label {0,1}") {
  for (auto [family, m, sigma] :
       {std::tuple{Family::B, 2, SigmaChoice::identity},
        std::tuple{Family::B, 4, SigmaChoice::identity},
        std::tuple{Family::D, 3, SigmaChoice::swap_last_pair},
        std::tuple{Family::D, 4, SigmaChoice::identity}}) {
    CoxeterDatum d = CoxeterDatum::build(family, m, sigma);
    std::vector<WeylElement> zero;
    for (const auto& w : d.eo_cox_set())
      if (d.length(w) == 0) zero.push_back(w);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == d.tau());
    CHECK(d.table_w_sigma({0, 1}) == zero[0]);
    CHECK(d.t_sigma({0, 1}) == 2);
  }
}

TEST_CASE("maximal stratum type matches t_max") {
  for (long p : {3L, 5L}) {
    for (int m : {2, 3, 4, 5}) {
      CoxeterDatum d = CoxeterDatum::build(Family::B, m, SigmaChoice::identity);
      int biggest = 0;
      for (const auto& row : d.table_rows())
        biggest = std::max(biggest, d.t_sigma(row.label));
      for (bool unit_square : {true, false})
        CHECK(biggest == t_max(2 * m + 1, SquareClass{Int(p), 0, unit_square}));
    }
    for (int m : {3, 4, 5}) {
      int minus_one = testing::legendre_by_enumeration(-1, p);
      bool match_square = (m % 2 == 0) || minus_one == 1;  // (-1)^m as a class
      CoxeterDatum split = CoxeterDatum::build(Family::D, m, SigmaChoice::identity);
      int biggest = 0;
      for (const auto& row : split.table_rows())
        biggest = std::max(biggest, split.t_sigma(row.label));
      CHECK(biggest == t_max(2 * m, SquareClass{Int(p), 0, match_square}));
      CoxeterDatum nonsplit =
          CoxeterDatum::build(Family::D, m, SigmaChoice::swap_last_pair);
      biggest = 0;
      for (const auto& row : nonsplit.table_rows())
        biggest = std::max(biggest, nonsplit.t_sigma(row.label));
      CHECK(biggest == t_max(2 * m, SquareClass{Int(p), 0, !match_square}));
    }
  }
}

TEST_CASE("j_set") {
  CoxeterDatum b4 = CoxeterDatum::build(Family::B, 4, SigmaChoice::identity);
  std::vector<std::set<int>> j = b4.j_set();
  std::set<std::set<int>> js(j.begin(), j.end());
  // excluded vertex 0: singleton fixed nodes qualify, the fork pair does not
  CHECK(js.count({2}) == 1);
  CHECK(js.count({3}) == 1);
  CHECK(js.count({4}) == 1);
  CHECK(js.count({0, 1}) == 0);  // d(0) = 0 but d(1) = 2

  // excluded vertex m: the fork tips are equidistant
  std::set<int> K;
  for (int i = 0; i < 4; ++i) K.insert(i);
  CoxeterDatum bm = CoxeterDatum::build(Family::B, 4, SigmaChoice::identity, K);
  std::vector<std::set<int>> jm = bm.j_set();
  std::set<std::set<int>> jms(jm.begin(), jm.end());
  CHECK(jms.count({0, 1}) == 1);

  std::set<int> small{2, 3};
  CHECK_THROWS_AS(
      CoxeterDatum::build(Family::B, 4, SigmaChoice::identity, small).j_set(),
      domain_error);
}
