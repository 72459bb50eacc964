#include <doctest.h>

#include <random>

#include "hopfbraid/linalg.hpp"

using namespace hopfbraid;

namespace {
CycloScalar zeta(long m, long k = 1) { return CycloScalar::root_of_unity(m, k); }

Mat random_matrix(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> val(-3, 3), root(0, 7);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = CycloScalar(val(rng));
      if (root(rng) == 0) m.at(i, j) += zeta(8, root(rng));
    }
  return m;
}
}  // namespace

TEST_CASE("inverse and identity") {
  std::mt19937 rng(91);
  for (int trial = 0; trial < 12; ++trial) {
    Mat m = random_matrix(5, rng);
    try {
      Mat inv = m.inverse();
      CHECK((m * inv).is_identity());
      CHECK((inv * m).is_identity());
    } catch (const singular_matrix&) {
      CHECK(m.rank() < 5);
    }
  }
}

TEST_CASE("rank") {
  Mat m(3, 3);
  m.at(0, 0) = CycloScalar(1);
  m.at(1, 1) = zeta(4);
  CHECK(m.rank() == 2);
  m.at(2, 2) = zeta(8) + zeta(8, 7);
  CHECK(m.rank() == 3);
  // duplicated row is detected over the exact field
  Mat d(2, 3);
  d.at(0, 0) = zeta(8);
  d.at(0, 2) = CycloScalar(2);
  d.at(1, 0) = zeta(8) * zeta(3);
  d.at(1, 2) = CycloScalar(2) * zeta(3);
  CHECK(d.rank() == 1);
}

TEST_CASE("solve_dense recovers known solutions") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    Mat m = random_matrix(6, rng);
    if (m.rank() < 6) continue;
    std::vector<CycloScalar> x0(6);
    std::uniform_int_distribution<int> val(-2, 2);
    for (auto& v : x0) v = CycloScalar(val(rng)) + zeta(3, val(rng) & 1);
    auto b = m.apply(x0);
    auto x = solve_dense(m, b);
    CHECK(x == x0);
  }
}

TEST_CASE("solve_dense rejects inconsistent systems") {
  Mat m(2, 1);
  m.at(0, 0) = CycloScalar(1);
  m.at(1, 0) = CycloScalar(1);
  std::vector<CycloScalar> b{CycloScalar(1), CycloScalar(2)};
  CHECK_THROWS_AS(solve_dense(m, b), inconsistent_system);
}

TEST_CASE("nullspace") {
  // rows (1, 1, 0) and (0, 0, 1): kernel spanned by (1, -1, 0)
  Mat m(2, 3);
  m.at(0, 0) = CycloScalar(1);
  m.at(0, 1) = CycloScalar(1);
  m.at(1, 2) = CycloScalar(1);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(!ns[0][0].is_zero());
  CHECK(ns[0][0] == -ns[0][1]);
  CHECK(ns[0][2].is_zero());
  // full-rank square matrix has trivial kernel
  CHECK(nullspace(Mat::identity(4)).empty());
}

TEST_CASE("sparse solver matches dense solver") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> val(-2, 2), pos(0, 9);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 10;
    Mat dense(n, n);
    std::vector<SparseRow> rows(n);
    for (int i = 0; i < n; ++i) {
      dense.at(i, i) = CycloScalar(1) + zeta(8, (i % 4));
      rows[i].emplace_back(i, dense.at(i, i));
      for (int t = 0; t < 3; ++t) {
        int j = pos(rng);
        int v = val(rng);
        if (v == 0 || j == i) continue;
        dense.at(i, j) += CycloScalar(v);
        rows[i].emplace_back(j, CycloScalar(v));
      }
    }
    if (dense.rank() < n) continue;
    std::vector<CycloScalar> b(n);
    for (auto& v : b) v = CycloScalar(val(rng)) * zeta(4, val(rng) & 1);
    auto xs = solve_sparse(rows, b, n);
    auto xd = solve_dense(dense, b);
    CHECK(xs == xd);
  }
}
