#include <doctest.h>

#include <cstdlib>

#include "ssp/affine_weyl.hpp"
#include "ssp/lattice.hpp"
#include <set>

#include "ssp/finite_geometry.hpp"

using namespace ssp;

namespace {

long formula_lagrangians(int d, long q) {
  long c = 2;
  for (int i = 1; i < d; ++i) {
    long qi = 1;
    for (int j = 0; j < i; ++j) qi *= q;
    c *= qi + 1;
  }
  return c;
}

}  // namespace

TEST_CASE("finite field construction") {
  FiniteField f(3, 2);
  CHECK(f.q() == 9);
  CHECK(f.modulus() == std::vector<int>{1, 0});  // x^2 + 1, the least irreducible
  CHECK(f.mul(f.inv(5), 5) == 1);
  // Frobenius is an automorphism of order k
  for (int a = 0; a < f.q(); ++a) {
    for (int b = 0; b < f.q(); ++b)
      CHECK(f.frob(f.mul(a, b)) == f.mul(f.frob(a), f.frob(b)));
    CHECK(f.frob(f.frob(a)) == a);
  }
  CHECK_THROWS_AS(FiniteField(2, 2), domain_error);
  CHECK_THROWS_AS(FiniteField(3, 2, {0, 0}), domain_error);  // x^2 reducible
}

TEST_CASE("field cap respects the environment override") {
  CHECK_THROWS_AS(FiniteField(5, 4), resource_error);  // 625 > 125
  setenv("SSP_MAX_Q", "700", 1);
  CHECK(FiniteField(5, 4).q() == 625);
  unsetenv("SSP_MAX_Q");
}

TEST_CASE("standard spaces have the right Witt index") {
  for (int p : {3, 5}) {
    FiniteField f(p, 1);
    for (int t : {2, 4}) {
      FiniteQuadSpace split(t, SpaceKind::split, p);
      FiniteQuadSpace nonsplit(t, SpaceKind::nonsplit, p);
      CHECK(!enumerate_isotropic(split, t / 2, f).empty());
      if (t / 2 - 1 >= 1)
        CHECK(!enumerate_isotropic(nonsplit, t / 2 - 1, f).empty());
      // nonsplit has no Lagrangian over F_p
      CHECK(enumerate_isotropic(nonsplit, t / 2, f).empty());
    }
  }
}

TEST_CASE("isotropic enumeration examples") {
  FiniteQuadSpace plane(2, SpaceKind::nonsplit, 3);
  CHECK(enumerate_isotropic(plane, 1, FiniteField(3, 1)).empty());
  CHECK(enumerate_isotropic(plane, 1, FiniteField(3, 2)).size() == 2);

  FiniteQuadSpace split4(4, SpaceKind::split, 3);
  std::vector<Subspace> lag = enumerate_isotropic(split4, 2, FiniteField(3, 1));
  CHECK(lag.size() == 8);  // 2 (q + 1) for q = 3
  // second enumeration ordered differently: the serial kernel
  std::vector<Subspace> serial =
      enumerate_isotropic(split4, 2, FiniteField(3, 1), ExecPolicy::serial);
  CHECK(lag == serial);

  CHECK_THROWS_AS(enumerate_isotropic(split4, 3, FiniteField(3, 1)), domain_error);
  CHECK_THROWS_AS(
      enumerate_isotropic(FiniteQuadSpace(8, SpaceKind::split, 3), 4, FiniteField(3, 1)),
      resource_error);
  CHECK_THROWS_AS(
      enumerate_isotropic(FiniteQuadSpace(2, SpaceKind::split, 5), 1, FiniteField(3, 1)),
      domain_error);
}

TEST_CASE("lagrangian counts match the product formula") {
  for (long q : {3L, 5L})
    for (int d = 1; d <= 3; ++d) {
      FiniteQuadSpace space(2 * d, SpaceKind::split, static_cast<int>(q));
      std::vector<Subspace> lag =
          enumerate_isotropic(space, d, FiniteField(static_cast<int>(q), 1));
      CHECK(static_cast<long>(lag.size()) == formula_lagrangians(d, q));
    }
}

TEST_CASE("point counts are independent of the modulus") {
  // x^2 + 1 and x^2 + x + 2 are both irreducible over F_3
  FiniteField f1(3, 2);
  FiniteField f2(3, 2, {2, 1});
  FiniteQuadSpace plane(2, SpaceKind::nonsplit, 3);
  std::vector<Subspace> p1 = s_lambda_points(plane, f1);
  std::vector<Subspace> p2 = s_lambda_points(plane, f2);
  CHECK(p1.size() == p2.size());
  CHECK(frobenius_orbits(p1, f1).size() == frobenius_orbits(p2, f2).size());

  FiniteQuadSpace four(4, SpaceKind::nonsplit, 3);
  CHECK(s_lambda_points(four, f1).size() == s_lambda_points(four, f2).size());
}

TEST_CASE("minimal stratum has two points swapped by Frobenius") {
  for (int p : {3, 5}) {
    std::vector<Subspace> pts = s_lambda_points(2, SpaceKind::nonsplit, p, 2);
    CHECK(pts.size() == 2);
    FiniteField f(p, 2);
    auto orbits = frobenius_orbits(pts, f);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].size() == 2);
    CHECK(s_lambda_points(2, SpaceKind::nonsplit, p, 1).empty());
  }
}

TEST_CASE("minimal stratum stabilizes over the even tower") {
  // two points at every even level; none rational over odd-degree extensions
  CHECK(s_lambda_points(2, SpaceKind::nonsplit, 3, 2).size() == 2);
  CHECK(s_lambda_points(2, SpaceKind::nonsplit, 3, 3).empty());
  CHECK(s_lambda_points(2, SpaceKind::nonsplit, 3, 4).size() == 2);
  CHECK(s_lambda_points(2, SpaceKind::nonsplit, 5, 2).size() == 2);
  CHECK(s_lambda_points(2, SpaceKind::nonsplit, 5, 3).empty());
}

TEST_CASE("type 4 stratum point sets") {
  // no Lagrangians at all over F_3 for the nonsplit form
  CHECK(s_lambda_points(4, SpaceKind::nonsplit, 3, 1).empty());
  std::vector<Subspace> pts = s_lambda_points(4, SpaceKind::nonsplit, 3, 2);
  CHECK(!pts.empty());
  FiniteField f(3, 2);
  for (const auto& orbit : frobenius_orbits(pts, f)) CHECK(!orbit.empty());
  // parallel and serial kernels agree
  CHECK(pts == s_lambda_points(4, SpaceKind::nonsplit, 3, 2, ExecPolicy::serial));
}

TEST_CASE("frobenius orbit errors and empties") {
  FiniteField f(3, 2);
  CHECK(frobenius_orbits({}, f).empty());
  std::vector<Subspace> pts = s_lambda_points(2, SpaceKind::nonsplit, 3, 2);
  pts.pop_back();  // no longer Phi-closed
  CHECK_THROWS_AS(frobenius_orbits(pts, f), domain_error);
}

TEST_CASE("stratum types achievable for n = 5 match the nonempty point sets") {
  // For SO_5 (B family, m = 2) the sigma-Coxeter strata carry t in {2, 4};
  // those are exactly the types whose point sets show up over some F_{3^k},
  // k <= 4, within t <= t_max = 4.
  CoxeterDatum d = CoxeterDatum::build(Family::B, 2, SigmaChoice::identity);
  std::set<int> achieved;
  for (const auto& w : d.eo_cox_set())
    achieved.insert(2 * (static_cast<int>(d.length(w)) + 1));
  CHECK(achieved == std::set<int>{2, 4});
  int cap = t_max(5, SquareClass{Int(3), 0, true});
  for (int t = 2; t <= cap; t += 2) {
    bool nonempty = false;
    for (int k = 1; k <= 4 && !nonempty; ++k)
      nonempty = !s_lambda_points(t, SpaceKind::nonsplit, 3, k).empty();
    CHECK(nonempty == (achieved.count(t) == 1));
  }
}

TEST_CASE("orientations") {
  FiniteQuadSpace plane3(2, SpaceKind::nonsplit, 3);
  auto [a, b] = orientations(plane3);
  CHECK(a < b);
  FiniteField f(3, 2);
  CHECK(frobenius_image(f, a) == b);
  CHECK(frobenius_image(f, b) == a);

  FiniteQuadSpace plane5(2, SpaceKind::nonsplit, 5);
  auto [c, d] = orientations(plane5);
  CHECK(c != d);

  CHECK_THROWS_AS(orientations(FiniteQuadSpace(2, SpaceKind::split, 3)), domain_error);
}
