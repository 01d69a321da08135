#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "snf.hpp"

using namespace gexp;
using namespace gexp::snf;

TEST_CASE("known Smith forms") {
  auto A = ZMat::from_rows({{2, 4}, {6, 8}});
  auto r = smith_normal_form(A, true);
  REQUIRE(r.rank == 2);
  CHECK(r.diag[0] == 2);
  CHECK(r.diag[1] == 4);
  CHECK(r.have_uv);

  auto Z = ZMat(3, 2);
  auto rz = smith_normal_form(Z);
  CHECK(rz.rank == 0);
  CHECK(rz.diag.empty());

  auto I = ZMat::identity(4);
  auto ri = smith_normal_form(I);
  REQUIRE(ri.rank == 4);
  for (const auto& d : ri.diag) CHECK(d == 1);

  // one invariant factor divisible by the next prime power
  auto B = ZMat::from_rows({{3, 0}, {0, 9}});
  auto rb = smith_normal_form(B);
  REQUIRE(rb.rank == 2);
  CHECK(rb.diag[0] == 3);
  CHECK(rb.diag[1] == 9);

  auto C = ZMat::from_rows({{0, 9}, {3, 0}});
  auto rc = smith_normal_form(C);
  REQUIRE(rc.rank == 2);
  CHECK(rc.diag[0] == 3);
  CHECK(rc.diag[1] == 9);
}

TEST_CASE("seeded random matrices satisfy every invariant") {
  std::mt19937_64 rng(20260822);
  std::uniform_int_distribution<int> entry(-20, 20);
  std::uniform_int_distribution<size_t> rdist(1, 5), cdist(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    size_t rows = rdist(rng), cols = cdist(rng);
    ZMat A(rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) A.at(i, j) = entry(rng);

    auto r = smith_normal_form(A, true);
    REQUIRE(r.have_uv);

    // recomposition U A V = diag
    auto D = matmul(matmul(r.U, A), r.V);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) {
        Int want = (i == j && i < r.rank) ? r.diag[i] : Int(0);
        CHECK(D.at(i, j) == want);
      }

    // unimodular transforms
    Int du = oracle::det_cofactor(r.U);
    Int dv = oracle::det_cofactor(r.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));

    // divisibility chain, positivity
    for (size_t i = 0; i < r.rank; ++i) {
      CHECK(r.diag[i] > 0);
      if (i + 1 < r.rank) CHECK(r.diag[i + 1] % r.diag[i] == 0);
    }

    // product of the first k divisors equals the gcd of the k x k minors
    Int prod = 1;
    for (size_t k = 1; k <= std::min(rows, cols); ++k) {
      Int mg = oracle::minor_gcd(A, k);
      if (k <= r.rank) {
        prod *= r.diag[k - 1];
        CHECK(prod == mg);
      } else {
        CHECK(mg == 0);
      }
    }
  }
}

TEST_CASE("bareiss determinant matches cofactor expansion") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    size_t n = 1 + static_cast<size_t>(trial % 5);
    ZMat A(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) A.at(i, j) = entry(rng);
    CHECK(det_bareiss(A) == oracle::det_cofactor(A));
  }
}

TEST_CASE("sparse matrices round trip and rank agrees with the Smith form") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    size_t rows = 1 + static_cast<size_t>(trial % 6), cols = 1 + (trial * 7) % 5;
    SparseZMat S(rows, cols);
    ZMat A(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
      std::vector<std::pair<uint32_t, Int>> acc;
      for (size_t j = 0; j < cols; ++j) {
        int v = entry(rng);
        A.at(i, j) = v;
        if (v != 0) acc.emplace_back(static_cast<uint32_t>(j), Int(v));
      }
      S.set_row(i, std::move(acc));
    }
    CHECK(S.to_dense(1000) == A);
    CHECK(zrank(S) == smith_normal_form(A).rank);
  }
}

TEST_CASE("accumulating duplicate sparse entries") {
  SparseZMat S(1, 3);
  S.set_row(0, {{2, Int(5)}, {0, Int(1)}, {2, Int(-5)}, {1, Int(2)}});
  const auto& row = S.row(0);
  REQUIRE(row.size() == 2);
  CHECK(row[0].first == 0);
  CHECK(row[0].second == 1);
  CHECK(row[1].first == 1);
  CHECK(row[1].second == 2);
}

TEST_CASE("dense conversion respects the entry cap") {
  SparseZMat S(100, 100);
  for (size_t i = 0; i < 100; ++i) S.set_row(i, {});
  CHECK_THROWS_AS(S.to_dense(50), Error);
}

TEST_CASE("product_is_zero") {
  SparseZMat A(2, 2), B(2, 2);
  A.set_row(0, {{0, Int(1)}});
  A.set_row(1, {});
  B.set_row(0, {});
  B.set_row(1, {{0, Int(3)}, {1, Int(4)}});
  CHECK(product_is_zero(A, B));
  SparseZMat C(2, 2);
  C.set_row(0, {{0, Int(2)}});
  C.set_row(1, {});
  CHECK_FALSE(product_is_zero(C, A));
}
