#include <doctest.h>

#include "oracles.hpp"
#include "ssp/mass.hpp"

using namespace ssp;

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rat(1));
  CHECK(bernoulli(1) == Rat(-1, 2));
  CHECK(bernoulli(2) == testing::at_bernoulli(2));
  CHECK(bernoulli(2) == Rat(1, 6));
  CHECK(bernoulli(4) == Rat(-1, 30));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == Rat(-691, 2730));
}

TEST_CASE("zeta at negative odd integers") {
  CHECK(zeta_neg(1) == Rat(-1, 12));
  CHECK(zeta_neg(2) == Rat(1, 120));
  CHECK(zeta_neg(5) == -bernoulli(10) / Rat(10));
  for (unsigned r = 1; r <= 20; ++r) {
    CHECK(zeta_neg(r) == -testing::at_bernoulli(2 * r) / Rat(2 * r));
    CHECK((zeta_neg(r) < 0) == (r % 2 == 1));  // alternating signs
  }
  CHECK_THROWS_AS(zeta_neg(0), domain_error);
}

TEST_CASE("fundamental discriminants") {
  for (long d : {-3, -4, -7, -8, 5, 8, 12, -20})
    CHECK(is_fundamental_discriminant(Int(d)));
  for (long d : {0, 1, -1, 2, 3, 4, -6, 9, -9, 18})
    CHECK_FALSE(is_fundamental_discriminant(Int(d)));
}

TEST_CASE("L values at non-positive integers") {
  CHECK(l_neg(1, Int(-4)) == Rat(1, 2));
  CHECK(l_neg(1, Int(-3)) == Rat(1, 3));
  CHECK_THROWS_AS(l_neg(1, Int(1)), domain_error);
  CHECK_THROWS_AS(l_neg(1, Int(9)), domain_error);

  // Independent finite character sum: L(0, chi) = -(1/|d|) sum chi(a) a.
  for (long d : {-3, -4, -7, -8, -11, -20}) {
    Rat s = 0;
    for (long a = 1; a <= -d; ++a) s += Rat(kronecker_chi(Int(d), Int(a)) * a);
    CHECK(l_neg(1, Int(d)) == -s / Rat(-d));
  }
}

TEST_CASE("odd-dimensional mass") {
  MassOutput out = mass(MassInput{3, Int(3), Rat(1), std::nullopt});
  CHECK(out.value == Rat(-1, 12));
  CHECK(out.abs_value == Rat(1, 12));
  CHECK(out.abs_value == deuring(Int(3)));

  out = mass(MassInput{5, Int(3), Rat(1), std::nullopt});
  CHECK(out.abs_value == Rat(1, 288));
  CHECK(out.value == Rat(-1, 288));
  // the same value assembled in a different evaluation order
  Rat direct = Rat(-1, 12) * Rat(1, 120) * Rat(1, 2) * Rat(80, 8);
  CHECK(out.value == direct);
}

TEST_CASE("even-dimensional mass") {
  MassInput in{4, Int(3), Rat(1), Int(5), EvenLocalVariant::corrected};
  MassOutput out = mass(in);
  // assembled from the tested pieces: zeta(-1) zeta(-3) L(-1,chi_5)
  // * 2^{1-m} * (p^{m-1}+1)(p^m+1)/(2(p+1)) with m = 2, p = 3
  Rat expected = zeta_neg(1) * zeta_neg(2) * l_neg(2, Int(5)) * Rat(1, 2) *
                 Rat((3 + 1) * (9 + 1), 2 * (3 + 1));
  CHECK(out.value == expected);
  CHECK(out.value != 0);

  in.variant = EvenLocalVariant::as_printed;
  MassOutput printed = mass(in);
  // the two variants differ by exactly p^{m+1} / (p^m + 1)
  CHECK(printed.value * Rat(9 + 1) == out.value * Rat(27));

  // an odd character at even m kills the generalized Bernoulli number, so
  // this combination vanishes identically
  CHECK(mass(MassInput{4, Int(3), Rat(1), Int(-4)}).value == 0);

  in.disc.reset();
  CHECK_THROWS_AS(mass(in), domain_error);
}

TEST_CASE("mass is multiplicative in vol") {
  MassInput base{7, Int(5), Rat(1), std::nullopt};
  MassOutput unit = mass(base);
  base.vol = Rat(36, 7);
  CHECK(mass(base).value == Rat(36, 7) * unit.value);
}

TEST_CASE("deuring") {
  CHECK(deuring(Int(3)) == Rat(1, 12));
  CHECK(deuring(Int(5)) == Rat(1, 6));
  CHECK(deuring(Int(7)) == Rat(1, 4));
  CHECK_THROWS_AS(deuring(Int(2)), domain_error);
  for (long p : {3, 5, 7, 11, 13, 17, 19, 23})
    CHECK(mass(MassInput{3, Int(p), Rat(1), std::nullopt}).abs_value == deuring(Int(p)));
}
