#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "group.hpp"
#include "oracles.hpp"

using namespace gexp;
using namespace gexp::grp;
using gexp::fpla::FpVec;
using gexp::fpla::PrimeField;

namespace {

// Multiplication computed straight from the definition on digit vectors,
// bypassing every table in BracketGroup.
elt_t slow_mul(const BracketGroup& G, elt_t g, elt_t h) {
  const auto& f = G.algebra().field();
  const uint32_t p = f.p();
  FpVec a = G.decode_v(G.part_a(g)), s = G.decode_v(G.part_s(g));
  FpVec b = G.decode_v(G.part_a(h)), t = G.decode_v(G.part_s(h));
  uint8_t half = f.inv(2);
  FpVec br = G.algebra().bracket(a, b);
  FpVec c(G.dim(), 0);
  for (uint32_t i = 0; i < G.dim(); ++i) {
    uint8_t carry = (static_cast<uint32_t>(a[i]) + b[i] >= p) ? 1 : 0;
    c[i] = f.add(f.mul(half, br[i]), carry);
  }
  FpVec ab = fpla::vec_add(f, a, b);
  FpVec st = fpla::vec_add(f, fpla::vec_add(f, s, t), c);
  return G.make(G.encode_v(ab), G.encode_v(st));
}

}  // namespace

TEST_CASE("group tables match the definition") {
  auto f = PrimeField::make(3);
  auto alg = bracket::BracketAlgebra::sl2(f);
  auto Gp = BracketGroup::build(alg, 1000000);
  const auto& G = *Gp;
  CHECK(G.order() == 729);
  CHECK(G.v_count() == 27);
  for (elt_t g = 0; g < G.order(); g += 7)
    for (elt_t h = 0; h < G.order(); h += 5) CHECK(G.mul(g, h) == slow_mul(G, g, h));
  for (elt_t g = 0; g < G.order(); ++g) {
    CHECK(G.mul(g, G.id()) == g);
    CHECK(G.mul(G.id(), g) == g);
    CHECK(G.mul(g, G.inv(g)) == G.id());
  }
}

TEST_CASE("associativity on a grid") {
  auto f = PrimeField::make(3);
  auto alg = bracket::BracketAlgebra::sl2(f);
  auto Gp = BracketGroup::build(alg, 1000000);
  const auto& G = *Gp;
  for (elt_t a = 0; a < G.order(); a += 31)
    for (elt_t b = 0; b < G.order(); b += 29)
      for (elt_t c = 0; c < G.order(); c += 23)
        CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
}

TEST_CASE("powers and element orders against repeated multiplication") {
  auto f = PrimeField::make(3);
  auto alg = bracket::BracketAlgebra::sl2(f);
  auto Gp = BracketGroup::build(alg, 1000000);
  const auto& G = *Gp;
  for (elt_t g = 0; g < G.order(); ++g) {
    CHECK(G.element_order(g) == oracle::naive_element_order(G, g));
    CHECK(G.pw(g, 3) == G.make(0, G.part_a(g)));
    CHECK(G.pw(g, 0) == G.id());
    CHECK(G.pw(g, -1) == G.inv(g));
    CHECK(G.pw(g, 5) == G.mul(G.pw(g, 2), G.pw(g, 3)));
  }
  CHECK(G.exponent() == oracle::naive_exponent(G));
  CHECK(G.exponent() == 9);
  CHECK(G.exponent(4) == 9);
}

TEST_CASE("commutators land in W and match the bracket") {
  auto f = PrimeField::make(3);
  auto alg = bracket::BracketAlgebra::sl2(f);
  auto Gp = BracketGroup::build(alg, 1000000);
  const auto& G = *Gp;
  for (elt_t g = 0; g < G.order(); g += 11)
    for (elt_t h = 0; h < G.order(); h += 13) {
      elt_t c = G.commutator(g, h);
      CHECK(G.part_a(c) == 0);
      CHECK(G.part_s(c) == G.bracket_v(G.part_a(g), G.part_a(h)));
    }
}

TEST_CASE("center is W for sl2 and everything for the zero bracket") {
  auto f = PrimeField::make(3);
  auto Gs = BracketGroup::build(bracket::BracketAlgebra::sl2(f), 1000000);
  CHECK(center_size(*Gs) == 27);
  auto Gz = BracketGroup::build(bracket::BracketAlgebra::zero(f, 2), 1000000);
  CHECK(center_size(*Gz) == Gz->order());
}

TEST_CASE("zero bracket on one generator gives the cyclic group of order p^2") {
  auto f = PrimeField::make(3);
  auto Gp = BracketGroup::build(bracket::BracketAlgebra::zero(f, 1), 1000);
  const auto& G = *Gp;
  CHECK(G.order() == 9);
  CHECK(G.exponent() == 9);
  uint32_t cyclic = 0;
  for (elt_t g = 0; g < G.order(); ++g)
    if (G.element_order(g) == 9) ++cyclic;
  CHECK(cyclic == 6);
}

TEST_CASE("exponent at p = 5") {
  auto f = PrimeField::make(5);
  auto Gp = BracketGroup::build(bracket::BracketAlgebra::sl2(f), 1000000);
  CHECK(Gp->order() == 15625);
  CHECK(Gp->exponent(2) == 25);
}

TEST_CASE("subgroup closure and membership") {
  auto f = PrimeField::make(3);
  auto Gp = BracketGroup::build(bracket::BracketAlgebra::sl2(f), 1000000);
  const auto& G = *Gp;

  auto full = Subgroup::closure(G, {G.make(G.encode_v({1, 0, 0}), 0),
                                    G.make(G.encode_v({0, 1, 0}), 0),
                                    G.make(G.encode_v({0, 0, 1}), 0)},
                                1000000);
  CHECK(full.size() == 729);
  CHECK(full.index() == 1);

  auto trivial = Subgroup::closure(G, {}, 1000);
  CHECK(trivial.size() == 1);
  CHECK(trivial.contains(G.id()));

  elt_t g = G.make(G.encode_v({1, 0, 0}), 0);
  auto cyc = Subgroup::closure(G, {g}, 1000);
  CHECK(cyc.size() == G.element_order(g));
  CHECK(cyc.is_closed());
  CHECK(cyc.exponent() == G.element_order(g));

  CHECK_THROWS_AS(Subgroup::closure(G, {g, G.make(G.encode_v({0, 1, 0}), 0)}, 10), Error);
}

TEST_CASE("subgroup intersection") {
  auto f = PrimeField::make(3);
  auto Gp = BracketGroup::build(bracket::BracketAlgebra::sl2(f), 1000000);
  const auto& G = *Gp;
  elt_t a = G.make(G.encode_v({1, 0, 0}), 0);
  elt_t b = G.make(G.encode_v({0, 1, 0}), 0);
  auto A = Subgroup::closure(G, {a}, 1000);
  auto B = Subgroup::closure(G, {b}, 1000);
  auto I = intersect_subgroups(A, B);
  for (elt_t e : I.elements()) {
    CHECK(A.contains(e));
    CHECK(B.contains(e));
  }
  for (elt_t e : A.elements())
    if (B.contains(e)) CHECK(I.contains(e));
}

TEST_CASE("coset action is a homomorphism with the subgroup as point stabilizer") {
  auto f = PrimeField::make(3);
  auto Gp = BracketGroup::build(bracket::BracketAlgebra::sl2(f), 1000000);
  const auto& G = *Gp;
  auto H = Subgroup::closure(G, {G.make(G.encode_v({1, 0, 0}), 0),
                                 G.make(G.encode_v({0, 1, 0}), 0)},
                             1000000);
  auto act = coset_action(G, H, 10000);
  CHECK(act.degree == G.order() / H.size());
  for (elt_t g = 0; g < G.order(); g += 17)
    for (elt_t h = 0; h < G.order(); h += 19)
      CHECK(act.perm_of(G.mul(g, h)) == compose(act.perm_of(g), act.perm_of(h)));
  for (elt_t h : H.elements()) {
    auto p = act.perm_of(h);
    CHECK(p.img[0] == 0);
  }
  CHECK_THROWS_AS(coset_action(G, Subgroup::closure(G, {}, 10), 100), Error);
}
