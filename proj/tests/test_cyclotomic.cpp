#include <doctest.h>

#include <numeric>
#include <random>

#include "hopfbraid/cyclotomic.hpp"

using hopfbraid::CycloScalar;
using hopfbraid::Rational;
using hopfbraid::euler_phi;

namespace {
CycloScalar zeta(long m, long k = 1) { return CycloScalar::root_of_unity(m, k); }

// deterministic stream of small field elements: short combinations of roots
// of unity with small rational coefficients
CycloScalar random_scalar(std::mt19937& rng) {
  static const long mods[] = {1, 3, 4, 5, 8, 12};
  std::uniform_int_distribution<int> nterms(0, 3), pick(0, 5), num(-4, 4),
      den(1, 3);
  CycloScalar v(0);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    long m = mods[pick(rng)];
    std::uniform_int_distribution<long> ex(0, m - 1);
    v += CycloScalar(hopfbraid::make_rational(num(rng), den(rng))) * zeta(m, ex(rng));
  }
  return v;
}
}  // namespace

TEST_CASE("roots of unity: construction and normalization") {
  CHECK(zeta(1, 0) == CycloScalar(1));
  CHECK(zeta(8, 4) == CycloScalar(-1));
  CHECK(zeta(5, 7) == zeta(5, 2));
  CHECK(zeta(8, 2) == zeta(4, 1));
  CHECK(zeta(12, 2) == zeta(6, 1));
  CHECK(zeta(6, 1).conductor() == 3);  // zeta_6 = -zeta_3^2 lives in Q(zeta_3)
  CHECK(zeta(2, 1) == CycloScalar(-1));
  CHECK(zeta(4, 1).conductor() == 4);
  CHECK(zeta(4, 1).str() == "i");
  CHECK((-zeta(4, 1)).str() == "-i");
}

TEST_CASE("power identity for all conductors up to 48") {
  for (long m = 1; m <= 48; ++m)
    for (long k = 0; k < m; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      REQUIRE(zeta(m, k).pow(m) == CycloScalar(1));
    }
}

TEST_CASE("field arithmetic basics") {
  CycloScalar i = zeta(4, 1);
  CHECK((CycloScalar(1) + i) * (CycloScalar(1) - i) == CycloScalar(2));
  CHECK(zeta(5) / zeta(5) == CycloScalar(1));
  CHECK((zeta(3) + zeta(4)).conductor() == 12);
  CHECK(zeta(3) * zeta(3) * zeta(3) == CycloScalar(1));
  CHECK(zeta(8).inverse() == zeta(8, 7));
  CHECK(zeta(8).pow(-3) == zeta(8, 5));
  CHECK_THROWS_AS(CycloScalar(0).inverse(), hopfbraid::division_by_zero);
}

TEST_CASE("denominator handling stays exact") {
  CycloScalar half(hopfbraid::make_rational(1, 2));
  CycloScalar v = half * zeta(8) + half * zeta(8, 3);
  CHECK(v + v == zeta(8) + zeta(8, 3));
  CHECK((v / half) == zeta(8) + zeta(8, 3));
  CHECK_THROWS(v.rational_value());
}

TEST_CASE("field axioms on a deterministic random sample") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    CycloScalar a = random_scalar(rng), b = random_scalar(rng),
                c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == CycloScalar(0));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == CycloScalar(1));
      CHECK((a / a) == CycloScalar(1));
    }
  }
}

TEST_CASE("canonical conductor is minimal after arithmetic") {
  // zeta_8 * zeta_8 = i must land at conductor 4, squares again at 1
  CycloScalar w = zeta(8);
  CHECK((w * w).conductor() == 4);
  CHECK((w * w * w * w).conductor() == 1);
  // sqrt(2) = zeta_8 + zeta_8^-1 genuinely needs conductor 8
  CycloScalar sqrt2 = zeta(8) + zeta(8, 7);
  CHECK(sqrt2.conductor() == 8);
  CHECK(sqrt2 * sqrt2 == CycloScalar(2));
  // cancellation drops all the way to rational
  CHECK((zeta(12, 1) - zeta(12, 1)).conductor() == 1);
  CHECK((zeta(3) + zeta(3, 2)).conductor() == 1);
  CHECK(zeta(3) + zeta(3, 2) == CycloScalar(-1));
}

TEST_CASE("multiplicative order") {
  CHECK(CycloScalar(1).multiplicative_order() == 1);
  CHECK(zeta(8, 2).multiplicative_order() == 4);
  CHECK(zeta(2, 1).multiplicative_order() == 2);
  CHECK(!CycloScalar(2).multiplicative_order().has_value());
  CHECK(!(CycloScalar(1) + zeta(4, 1)).multiplicative_order().has_value());
  CHECK_THROWS_AS(CycloScalar(0).multiplicative_order(), hopfbraid::zero_input);
  for (long m = 1; m <= 48; ++m)
    for (long k = 0; k < m; ++k) {
      long expect = m / std::gcd(k, m);
      CAPTURE(m);
      CAPTURE(k);
      REQUIRE(zeta(m, k).multiplicative_order() == expect);
    }
}

TEST_CASE("sqrt_of_sign") {
  CHECK(CycloScalar::sqrt_of_sign(CycloScalar(1)) == CycloScalar(1));
  CHECK(CycloScalar::sqrt_of_sign(CycloScalar(-1)) == zeta(4, 1));
  CycloScalar r = CycloScalar::sqrt_of_sign(CycloScalar(-1));
  CHECK(r * r == CycloScalar(-1));
  CHECK_THROWS_AS(CycloScalar::sqrt_of_sign(CycloScalar(2)),
                  hopfbraid::invalid_sign);
  CHECK_THROWS_AS(CycloScalar::sqrt_of_sign(CycloScalar(0)),
                  hopfbraid::invalid_sign);
}

TEST_CASE("galois conjugation") {
  CycloScalar w = zeta(8);
  CHECK(w.galois(3) == zeta(8, 3));
  CHECK(w.conj() == zeta(8, 7));
  CycloScalar sqrt2 = zeta(8) + zeta(8, 7);
  CHECK(sqrt2.conj() == sqrt2);
  CHECK(sqrt2.galois(3) == -sqrt2);
  CHECK_THROWS(w.galois(2));
}

TEST_CASE("canonical ordering is a strict total order on distinct values") {
  std::mt19937 rng(7);
  std::vector<CycloScalar> vals;
  for (int i = 0; i < 40; ++i) vals.push_back(random_scalar(rng));
  for (const auto& a : vals)
    for (const auto& b : vals) {
      if (a == b) {
        CHECK(!(a < b));
        CHECK(!(b < a));
      } else {
        CHECK((a < b) != (b < a));
      }
    }
}

TEST_CASE("dense coordinate round trip") {
  CycloScalar v = zeta(12, 5) + CycloScalar(3) * zeta(12, 1);
  auto d = v.dense_coeffs();
  CHECK(d.size() == euler_phi(12));
  CHECK(CycloScalar::from_dense(v.conductor(), d) == v);
  CHECK_THROWS(CycloScalar::from_dense(6, {Rational(1), Rational(0)}));
}

TEST_CASE("text rendering") {
  CHECK(CycloScalar(0).str() == "0");
  CHECK(CycloScalar(-1).str() == "-1");
  CHECK(CycloScalar(hopfbraid::make_rational(-3, 2)).str() == "-3/2");
  CHECK(zeta(8, 3).str() == "z8^3");
  CHECK((zeta(8) + zeta(8, 7)).str() == "z8 - z8^3");  // zeta_8^7 = -zeta_8^3
  CHECK((CycloScalar(1) + zeta(4, 1)).str() == "1 + i");
  CHECK((CycloScalar(hopfbraid::make_rational(1, 2)) * zeta(5, 2)).str() ==
        "1/2*z5^2");
}
