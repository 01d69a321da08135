#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace gexp::grp {

struct Perm {
  std::vector<uint16_t> img;

  static Perm identity(uint32_t degree) {
    Perm p;
    p.img.resize(degree);
    for (uint32_t i = 0; i < degree; ++i) p.img[i] = static_cast<uint16_t>(i);
    return p;
  }
  uint32_t degree() const { return static_cast<uint32_t>(img.size()); }
  bool is_identity() const {
    for (uint32_t i = 0; i < degree(); ++i)
      if (img[i] != i) return false;
    return true;
  }
  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }
};

bool is_valid_permutation(const Perm& p);

// (f * g)(x) = f(g(x))
Perm compose(const Perm& f, const Perm& g);

// Least common multiple of the cycle lengths.
uint64_t perm_order(const Perm& p);

struct PermGroup {
  uint32_t degree = 0;
  std::vector<Perm> generators;
};

// Sylow p-subgroup of Sym(p^n) for n in {1,2}, p an odd prime <= 7.
// n = 1: one p-cycle. n = 2: p disjoint base p-cycles plus one block shift;
// the closure is an iterated wreath product of order p^(p+1).
PermGroup wreath_sylow(uint32_t p, uint32_t n);

// Every element of the generated group, via worklist closure. Deterministic
// order (sorted); errors out past cap.
std::vector<Perm> materialize(const PermGroup& g, uint64_t cap);

uint64_t exponent_of(const std::vector<Perm>& elements);

}  // namespace gexp::grp
