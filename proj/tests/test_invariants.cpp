#include <doctest.h>

#include <string>
#include <vector>

#include "hopfbraid/invariants.hpp"

using namespace hopfbraid;

namespace {

CycloScalar zeta(long m, long k) { return CycloScalar::root_of_unity(m, k); }

InvariantPolynomial poly(std::vector<CycloScalar> roots) {
  return InvariantPolynomial::from_roots(std::move(roots));
}

}  // namespace

TEST_CASE("polynomial root multisets are canonical") {
  const InvariantPolynomial a = poly({zeta(4, 1), CycloScalar(1), zeta(4, 3)});
  const InvariantPolynomial b = poly({CycloScalar(1), zeta(4, 3), zeta(4, 1)});
  CHECK(a == b);
  CHECK(a.degree() == 3);
  CHECK(a.str() == b.str());

  CHECK(InvariantPolynomial::one().degree() == 0);
  CHECK(InvariantPolynomial::one().str() == "1");
  CHECK(InvariantPolynomial().degree() == 0);

  CHECK(poly({CycloScalar(1), CycloScalar(1)}).str() == "(x - 1)^2");
  CHECK(poly({CycloScalar(-1)}).str() == "(x + 1)");
  CHECK(poly({CycloScalar()}).str() == "x");
  CHECK(poly({CycloScalar(2)}) != poly({CycloScalar(3)}));
}

TEST_CASE("polynomial coefficients expand the product of linear factors") {
  // (x - 1)(x + 1) = x^2 - 1
  const auto c1 = poly({CycloScalar(1), CycloScalar(-1)}).coefficients();
  REQUIRE(c1.size() == 3);
  CHECK(c1[0] == CycloScalar(-1));
  CHECK(c1[1] == CycloScalar());
  CHECK(c1[2] == CycloScalar(1));

  // (x - i)(x + i) = x^2 + 1
  const auto c2 = poly({zeta(4, 1), zeta(4, 3)}).coefficients();
  REQUIRE(c2.size() == 3);
  CHECK(c2[0] == CycloScalar(1));
  CHECK(c2[1] == CycloScalar());
  CHECK(c2[2] == CycloScalar(1));

  // product over all fifth roots of unity = x^5 - 1
  std::vector<CycloScalar> fifth;
  for (long k = 0; k < 5; ++k) fifth.push_back(zeta(5, k));
  const auto c3 = poly(fifth).coefficients();
  REQUIRE(c3.size() == 6);
  CHECK(c3[0] == CycloScalar(-1));
  for (size_t k = 1; k < 5; ++k) CHECK(c3[k] == CycloScalar());
  CHECK(c3[5] == CycloScalar(1));

  const auto p = poly({zeta(8, 3), CycloScalar(2)});
  CHECK(p.evaluated_at(zeta(8, 3)).is_zero());
  CHECK(p.evaluated_at(CycloScalar(2)).is_zero());
  CHECK(!p.evaluated_at(CycloScalar(1)).is_zero());
}

TEST_CASE("polynomial multiplication and exact division") {
  const auto p = poly({CycloScalar(1), zeta(3, 1)});
  const auto q = poly({zeta(3, 1), zeta(3, 2)});
  const auto prod = p * q;
  CHECK(prod.degree() == 4);
  CHECK(prod.divided_by(p) == q);
  CHECK(prod.divided_by(q) == p);
  CHECK(prod.divided_by(InvariantPolynomial::one()) == prod);
  CHECK(prod.divided_by(prod) == InvariantPolynomial::one());

  CHECK_THROWS_AS(p.divided_by(poly({CycloScalar(5)})), division_not_exact);
  // multiplicity matters: (x - z3) divides prod twice but p only once
  CHECK_THROWS_AS(p.divided_by(poly({zeta(3, 1), zeta(3, 1)})),
                  division_not_exact);
}

TEST_CASE("Drinfeld element acts on cyclic modules by quadratic exponents") {
  for (int n = 1; n <= 6; ++n) {
    auto A = cyclic_group_hopf(n);
    for (int d = 0; d < n; ++d) {
      auto rm = cyclic_r_matrix(n, d);
      const AlgebraElement u = drinfeld_element(rm);
      for (int k = 0; k < n; ++k) {
        const CycloScalar xi = cyclic_module_scalar(u, k);
        CHECK(xi == zeta(n, -(long)d * k * k));
        // the scalar action has order dividing the cube of the dimension
        CHECK(xi.pow((long)n * n * n) == CycloScalar(1));
      }
    }
  }
}

TEST_CASE("cyclic triples match their closed forms") {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d < n; ++d) {
      auto rm = cyclic_r_matrix(n, d);
      const PolynomialTriple t = cyclic_polynomial_triple(rm);
      CAPTURE(n);
      CAPTURE(d);
      CHECK(t.d == 1);

      std::vector<CycloScalar> proots, qroots;
      for (long k = 0; k < n; ++k) {
        proots.push_back(zeta(n, -d * k * k));
        if (n % 2 == 0) {
          CycloScalar r = zeta(n, -d * k * k);
          if (k % 2 == 1) r = CycloScalar(-1) * r;
          qroots.push_back(r);
        }
      }
      CHECK(t.P == poly(proots));
      CHECK(t.Q == poly(qroots));  // empty list = constant 1 for odd n
      CHECK(t.Ptilde == t.P * t.Q);
      CHECK(t.Ptilde.divided_by(t.P) == t.Q);
    }
  }
}

TEST_CASE("five-element cyclic family separates into three classes") {
  std::vector<BraidedSignature> sigs;
  for (int d = 0; d < 5; ++d)
    sigs.push_back(cyclic_signature(cyclic_r_matrix(5, d)));

  const auto groups = partition_by_signature(sigs);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0] == std::vector<int>{0});
  CHECK(groups[1] == std::vector<int>{1, 4});
  CHECK(groups[2] == std::vector<int>{2, 3});

  const CycloScalar one(1);
  CHECK(sigs[0].entries[0].P == poly({one, one, one, one, one}));
  CHECK(sigs[1].entries[0].P ==
        poly({one, zeta(5, 1), zeta(5, 1), zeta(5, 4), zeta(5, 4)}));
  CHECK(sigs[2].entries[0].P ==
        poly({one, zeta(5, 2), zeta(5, 2), zeta(5, 3), zeta(5, 3)}));
  for (const auto& s : sigs) CHECK(s.entries[0].Q == InvariantPolynomial::one());
}

TEST_CASE("small cyclic families are completely separated") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<BraidedSignature> sigs;
    for (int d = 0; d < n; ++d)
      sigs.push_back(cyclic_signature(cyclic_r_matrix(n, d)));
    const auto groups = partition_by_signature(sigs);
    CAPTURE(n);
    CHECK(groups.size() == (size_t)n);
    for (int d = 0; d < n; ++d) CHECK(groups[(size_t)d] == std::vector<int>{d});
  }

  // order two: the quotient polynomials alone already separate the two cases
  const auto t0 = cyclic_polynomial_triple(cyclic_r_matrix(2, 0));
  const auto t1 = cyclic_polynomial_triple(cyclic_r_matrix(2, 1));
  CHECK(t0.Q == poly({CycloScalar(1), CycloScalar(-1)}));
  CHECK(t1.Q == poly({CycloScalar(1), CycloScalar(1)}));
}

TEST_CASE("central functionals act on simple comodules by verified scalars") {
  SuzukiAlgebra S({1, 2, +1, -1});
  const auto mods = suzuki_simple_comodules(S);
  REQUIRE(mods.size() == 5);

  const auto eps = LinearFunctional::counit_functional(S.A);
  for (const auto& m : mods) CHECK(comodule_scalar(eps, m) == CycloScalar(1));

  // a coordinate functional is not central and does not act by a scalar on
  // the two-dimensional comodule
  const int n = S.A->dim;
  LinearFunctional coord{S.A,
                         std::vector<CycloScalar>((size_t)n, CycloScalar())};
  const auto x12 = S.generator(1, 2);
  int idx = -1;
  for (int i = 0; i < n; ++i)
    if (!x12.coords[(size_t)i].is_zero()) idx = i;
  REQUIRE(idx >= 0);
  coord.values[(size_t)idx] = CycloScalar(1);
  CHECK_THROWS_AS(comodule_scalar(coord, mods[4]), construction_failed);
}

TEST_CASE("reference scalar actions of the coribbon pair") {
  for (SuzukiParams p : {SuzukiParams{1, 2, +1, -1}, SuzukiParams{1, 3, -1, -1},
                         SuzukiParams{2, 2, +1, +1}}) {
    SuzukiAlgebra S(p);
    const int N = p.N, L = p.L;
    const auto mods = suzuki_simple_comodules(S);
    const long cube = (long)S.A->dim * S.A->dim * S.A->dim;

    for (const auto& br : enumerate_braidings(S)) {
      const auto crib = coribbon_set(S, br);
      REQUIRE(crib.size() == 2);
      CAPTURE(p.str());
      CAPTURE(br.label());

      for (size_t idx = 0; idx < mods.size(); ++idx) {
        const auto& m = mods[idx];
        CAPTURE(m.label);
        CycloScalar xi, xibar;
        if (br.family == BraidingFamily::sigma) {
          const CycloScalar ab = br.par1 * br.par2;
          if ((int)idx < 4 * N) {
            const long s = (long)idx / 4 + 1;
            if (idx % 2 == 0) {  // even one-dimensional comodule
              xi = ab.pow(-2 * s * s);
              xibar = xi;
            } else {  // odd one-dimensional comodule
              xi = ab.pow(-2 * s * s - 2 * s * L - (long)L * L) *
                   br.par1.pow((long)L * L);
              xibar = L % 2 == 1 ? CycloScalar(-1) * xi : xi;
            }
          } else {
            const long s = ((long)idx - 4 * N) / (L - 1);
            const long t = ((long)idx - 4 * N) % (L - 1) + 1;
            xi = ab.pow(-2 * s * s - 2 * s * t - t * t) * br.par1.pow(t * t);
            xibar = t % 2 == 1 ? CycloScalar(-1) * xi : xi;
          }
        } else {
          const CycloScalar g = br.par1;
          if ((int)idx < 4 * N) {
            const long s = (long)idx / 4 + 1;
            if (idx % 2 == 0) {
              xi = g.pow(-4 * s * s);
            } else {
              xi = CycloScalar(p.lambda) * g.pow(-4 * (s + 1) * (s + 1));
            }
            xibar = xi;
          } else {
            const long s = (long)idx - 4 * N;
            xi = g.pow(-(2 * s + 1) * (2 * s + 1));
            xibar = CycloScalar(-1) * xi;
          }
        }
        CHECK(comodule_scalar(crib[0], m) == xi);
        CHECK(comodule_scalar(crib[1], m) == xibar);
        CHECK(categorical_dimension(br, m) == xi * CycloScalar(m.dim()));
        CHECK(xi.pow(cube) == CycloScalar(1));
      }
    }
  }
}

TEST_CASE("braided triples match the two-parameter closed forms") {
  for (SuzukiParams p : {SuzukiParams{1, 2, +1, -1}, SuzukiParams{1, 3, -1, -1},
                         SuzukiParams{2, 2, +1, +1}}) {
    SuzukiAlgebra S(p);
    const auto braidings = enumerate_braidings(S);
    const long m = 4L * p.N * p.L;
    size_t pos = 0;
    for (int i = 0; i < p.N; ++i)
      for (int j = 0; j < p.L; ++j)
        for (int sign : {+1, -1}) {
          REQUIRE(pos < braidings.size());
          const Braiding& br = braidings[pos++];
          const long e1 = (long)p.L * (2L * i + (1 - p.nu) / 2);
          const long e2 = (long)p.N * (2L * j + (1 - p.lambda) / 2);
          REQUIRE(br.par1 == CycloScalar(sign) * zeta(m, e1 + e2));

          const BraidedSignature sig = braided_signature(S, br);
          REQUIRE(sig.entries.size() == 2);
          CAPTURE(p.str());
          CAPTURE(br.label());
          CHECK(sig.entries[0] == sigma_closed_form_triple(p, i, j, sign, 1));
          CHECK(sig.entries[1] == sigma_closed_form_triple(p, i, j, sign, 2));
        }

    // no simple comodules above dimension two
    const auto empty = braided_polynomial_triple(S, braidings[0], 3);
    CHECK(empty.P == InvariantPolynomial::one());
    CHECK(empty.Ptilde == InvariantPolynomial::one());
    CHECK(empty.Q == InvariantPolynomial::one());
  }
}

TEST_CASE("braided triples match the one-parameter closed forms") {
  for (SuzukiParams p :
       {SuzukiParams{1, 2, +1, -1}, SuzukiParams{2, 2, +1, +1}}) {
    SuzukiAlgebra S(p);
    const auto braidings = enumerate_braidings(S);
    const long m = 8L * p.N;
    size_t pos = (size_t)(2 * p.N * p.L);
    for (int i = 0; i < 2 * p.N; ++i) {
      BraidedSignature first;
      for (int sign : {+1, -1}) {
        REQUIRE(pos < braidings.size());
        const Braiding& br = braidings[pos++];
        REQUIRE(br.family == BraidingFamily::tau);
        REQUIRE(br.par1 == zeta(m, 4L * i));
        REQUIRE(br.par2 == CycloScalar(sign) * zeta(m, 4L * i));

        const BraidedSignature sig = braided_signature(S, br);
        REQUIRE(sig.entries.size() == 2);
        CAPTURE(p.str());
        CAPTURE(br.label());
        CHECK(sig.entries[0] == tau_closed_form_triple(p, i, 1));
        CHECK(sig.entries[1] == tau_closed_form_triple(p, i, 2));

        // the second parameter's sign never shows in the signature
        if (sign == +1)
          first = sig;
        else
          CHECK(first == sig);
      }
    }
    CHECK(pos == braidings.size());
  }
}

TEST_CASE("dimension-two triple of the first one-parameter braiding") {
  SuzukiAlgebra S({1, 2, +1, -1});
  const auto braidings = enumerate_braidings(S);
  REQUIRE(braidings.size() == 8);
  const Braiding& br = braidings[4];
  REQUIRE(br.family == BraidingFamily::tau);
  REQUIRE(br.par1 == CycloScalar(1));

  const PolynomialTriple t = braided_polynomial_triple(S, br, 2);
  CHECK(t.P == poly({CycloScalar(1)}));
  CHECK(t.Q == poly({CycloScalar(-1)}));
  CHECK(t.Ptilde == poly({CycloScalar(1), CycloScalar(-1)}));
  CHECK(t.P.str() == "(x - 1)");
  CHECK(t.Q.str() == "(x + 1)");
}

TEST_CASE("signature partition of the sixteen-dimensional family") {
  SuzukiAlgebra S({1, 2, +1, -1});
  const auto braidings = enumerate_braidings(S);
  REQUIRE(braidings.size() == 8);

  std::vector<BraidedSignature> sigs;
  for (const auto& br : braidings) sigs.push_back(braided_signature(S, br));
  const auto groups = partition_by_signature(sigs);

  REQUIRE(groups.size() == 6);
  CHECK(groups[0] == std::vector<int>{0});
  CHECK(groups[1] == std::vector<int>{1});
  CHECK(groups[2] == std::vector<int>{2});
  CHECK(groups[3] == std::vector<int>{3});
  CHECK(groups[4] == std::vector<int>{4, 5});
  CHECK(groups[5] == std::vector<int>{6, 7});

  // the dimension-two polynomial of each class, in enumeration order
  const std::vector<CycloScalar> expected = {
      zeta(8, 1), CycloScalar(-1) * zeta(8, 1), zeta(8, 3),
      CycloScalar(-1) * zeta(8, 3), CycloScalar(1), CycloScalar(-1)};
  for (size_t g = 0; g < groups.size(); ++g)
    CHECK(sigs[(size_t)groups[g][0]].entries[1].P ==
          poly({expected[g]}));
}
