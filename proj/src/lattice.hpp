#pragma once

#include <optional>

#include "group.hpp"

namespace gexp::lattice {

// The maximal subgroups of G are exactly the preimages of hyperplanes of V:
// p-th powers land in W, so W lies under the Frattini subgroup and index-p
// subgroups correspond to index-p subspaces of G/W = V. One subgroup per
// hyperplane, (p^n - 1)/(p - 1) in total, each of order p^(2n-1).
std::vector<grp::Subgroup> maximal_subgroups(const grp::BracketGroup& G, uint64_t cap);

// Subgroup generated by every p-th power and every commutator of H, with the
// generating sets collected by full enumeration over H (all elements, all
// ordered pairs).
grp::Subgroup frattini(const grp::BracketGroup& G, const grp::Subgroup& H,
                       unsigned threads = 1);

// Intersection of all index-p^2 subgroups, computed as the intersection of
// the Frattini subgroups of the maximal subgroups. Every index-p^2 subgroup
// is maximal in some maximal subgroup M, hence contains that M's Frattini
// subgroup; conversely the Frattini subgroup of M is itself an intersection
// of index-p^2 subgroups of G. So the two intersections agree.
grp::Subgroup index_p2_intersection(const grp::BracketGroup& G,
                                    const std::vector<grp::Subgroup>& maximals,
                                    const std::vector<grp::Subgroup>& frattinis);

// Direct route: enumerate every maximal subgroup of every maximal subgroup
// via the elementary-abelian quotient M / Phi(M). Returns the distinct
// index-p^2 subgroups of G.
std::vector<grp::Subgroup> enumerate_index_p2(const grp::BracketGroup& G,
                                              const std::vector<grp::Subgroup>& maximals,
                                              const std::vector<grp::Subgroup>& frattinis);

// Closure of the lifts (u,0), (v,0) of a basis of a 2-dimensional subalgebra
// S. Comes out of order p^4 with K meet W = {0} x S.
grp::Subgroup lift_subalgebra(const grp::BracketGroup& G, const fpla::Subspace& S, uint64_t cap);

// Full preimage {(a, s) : a in the line} of a 1-dimensional subspace of V;
// order p^(n+1).
grp::Subgroup line_preimage(const grp::BracketGroup& G, const fpla::Subspace& line);

// {0} x U for a subspace U of W.
grp::Subgroup w_part(const grp::BracketGroup& G, const fpla::Subspace& U);
grp::Subgroup w_subgroup(const grp::BracketGroup& G);

// Index-p^2 witness family: preimages of all lines of V followed by lifts of
// all 2-dimensional subalgebras, both in enumeration order.
struct WitnessFamily {
  std::vector<grp::Subgroup> members;
  std::vector<fpla::Subspace> lines;
  std::vector<fpla::Subspace> subalgebras;
};

WitnessFamily witness_family(const grp::BracketGroup& G, uint64_t cap);

struct EmbedBudget {
  uint64_t hom_pairs = 0;     // 0 = exhaustive over all ordered pairs
  uint64_t order_samples = 0; // 0 = exhaustive over all elements
  uint64_t seed = 0;
  uint64_t degree_cap = 10000;
};

struct EmbeddingCheck {
  uint32_t degree = 0;
  bool family_intersection_trivial = false;
  bool homomorphism_ok = false;
  uint64_t hom_pairs_checked = 0;
  bool hom_exhaustive = false;
  bool image_orders_divide_p2 = false;
  uint64_t image_orders_checked = 0;
  bool image_orders_exhaustive = false;
  bool injective = false;
  uint64_t separated_elements = 0;
};

// Builds the coset action on each family member and checks that the combined
// map into the product of the symmetric groups is an injective homomorphism
// whose image consists of elements of order dividing p^2.
EmbeddingCheck verify_embedding(const grp::BracketGroup& G,
                                const std::vector<grp::Subgroup>& family,
                                const EmbedBudget& budget);

}  // namespace gexp::lattice
