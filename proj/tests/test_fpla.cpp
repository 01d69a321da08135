#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "fpla.hpp"
#include "oracles.hpp"

using namespace gexp;
using namespace gexp::fpla;

TEST_CASE("field arithmetic and inverses") {
  for (uint32_t p : {3u, 5u, 7u, 11u}) {
    auto f = PrimeField::make(p);
    CHECK(f.p() == p);
    for (uint32_t a = 1; a < p; ++a) {
      CHECK(f.mul(static_cast<uint8_t>(a), f.inv(static_cast<uint8_t>(a))) == 1);
      CHECK(f.add(static_cast<uint8_t>(a), f.neg(static_cast<uint8_t>(a))) == 0);
    }
    CHECK(f.reduce(-1) == p - 1);
    CHECK(f.reduce(static_cast<long long>(p) * 5) == 0);
  }
  CHECK_THROWS_AS(PrimeField::make(2), Error);
  CHECK_THROWS_AS(PrimeField::make(9), Error);
  CHECK_THROWS_AS(PrimeField::make(0), Error);
  try {
    PrimeField::make(2);
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid);
    CHECK(std::string(e.what()).find("odd prime required") != std::string::npos);
  }
}

TEST_CASE("rref canonical form") {
  auto f = PrimeField::make(3);
  // rows spanning the plane used by the verification pipeline at p = 3
  FpMat m = FpMat::from_rows({{1, 1, 0}, {2, 0, 1}});
  size_t rank = rref(f, m);
  CHECK(rank == 2);
  CHECK(m == FpMat::from_rows({{1, 0, 2}, {0, 1, 1}}));

  FpMat z = FpMat::from_rows({{0, 0, 0}, {1, 2, 1}, {2, 1, 2}});
  CHECK(rref(f, z) == 1);
}

TEST_CASE("subspace membership and element lists match the brute span") {
  auto f = PrimeField::make(3);
  std::vector<FpVec> gens = {{1, 1, 0}, {2, 0, 1}};
  auto S = Subspace::from_spanning(f, 3, gens);
  CHECK(S.dim() == 2);
  auto expect = oracle::span_elements(f, 3, gens);
  auto got = S.elements();
  std::sort(got.begin(), got.end());
  CHECK(got == expect);
  for (const auto& v : expect) CHECK(S.contains(v));
  CHECK_FALSE(S.contains({1, 0, 0}));
}

TEST_CASE("intersection and sum against brute enumeration") {
  auto f = PrimeField::make(3);
  auto A = Subspace::from_spanning(f, 3, {{1, 0, 0}, {0, 1, 0}});
  auto B = Subspace::from_spanning(f, 3, {{0, 1, 0}, {0, 0, 1}});
  auto I = intersect(A, B);
  CHECK(I.dim() == 1);
  CHECK(I.contains({0, 1, 0}));
  auto U = sum(A, B);
  CHECK(U == Subspace::full(f, 3));
  CHECK(intersect(A, Subspace::zero(f, 3)).dim() == 0);
}

TEST_CASE("subspace counts match the brute census") {
  auto f = PrimeField::make(3);
  for (size_t k = 0; k <= 3; ++k) {
    auto brute = oracle::all_subspaces_brute(f, 3, k);
    CHECK(subspace_count(f, 3, k) == brute.size());
    auto listed = enumerate_subspaces(f, 3, k, 1000);
    CHECK(listed.size() == brute.size());
    std::set<std::vector<FpVec>> seen;
    for (const auto& s : listed) {
      auto els = s.elements();
      std::sort(els.begin(), els.end());
      seen.insert(els);
    }
    CHECK(seen == brute);
  }
  CHECK(subspace_count(f, 3, 1) == 13);
  CHECK(subspace_count(f, 3, 2) == 13);
  CHECK(subspace_count(f, 4, 2) == 130);
  auto f5 = PrimeField::make(5);
  CHECK(subspace_count(f5, 3, 1) == 31);
  CHECK(subspace_count(f5, 3, 2) == 31);
}

TEST_CASE("enumeration respects the cap") {
  auto f = PrimeField::make(3);
  CHECK_THROWS_AS(enumerate_subspaces(f, 4, 2, 10), Error);
  try {
    enumerate_subspaces(f, 4, 2, 10);
  } catch (const Error& e) {
    CHECK(e.code() == errc::cap_exceeded);
  }
}

TEST_CASE("dimension formula under sum and intersection") {
  auto f = PrimeField::make(3);
  auto all1 = enumerate_subspaces(f, 3, 1, 1000);
  auto all2 = enumerate_subspaces(f, 3, 2, 1000);
  for (const auto& a : all2)
    for (const auto& b : all2)
      CHECK(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());
  for (const auto& a : all1)
    for (const auto& b : all2)
      CHECK(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());
}

TEST_CASE("string rendering uses names when given") {
  auto f = PrimeField::make(3);
  auto S = Subspace::from_spanning(f, 3, {{1, 1, 0}});
  auto s = S.to_string({"h", "x+", "x-"});
  CHECK(s.find("h") != std::string::npos);
  CHECK(s.find("x+") != std::string::npos);
}
