#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bracket.hpp"
#include "perm.hpp"

namespace gexp::grp {

// Encoded group element: a_index * p^n + s_index, where each index packs the
// digit vector of the V / W component in mixed radix base p. Encodings are
// dense in [0, p^(2n)), which makes them double as hash keys, sort keys and
// bitset positions. The identity encodes to 0.
using elt_t = uint32_t;
using vidx_t = uint16_t;

// The central extension 1 -> W -> G -> V -> 1 attached to a bracket algebra
// B on V = W = F_p^n, with multiplication
//   (a,s)(b,t) = (a+b, s+t+c(a,b)),   c(a,b) = 2^{-1}[a,b] + kappa(a,b),
// where kappa(a,b)_i = 1 exactly when the digit sum a_i + b_i (representatives
// in [0,p)) reaches p. The carry term makes (a,s)^p = (0,a), so the p-power
// map V -> W is the identity under the chosen identification.
class BracketGroup {
 public:
  static std::unique_ptr<const BracketGroup> build(const bracket::BracketAlgebra& alg,
                                                   uint64_t cap);

  const bracket::BracketAlgebra& algebra() const { return alg_; }
  uint32_t p() const { return p_; }
  uint32_t dim() const { return n_; }
  uint32_t v_count() const { return pn_; }  // |V| = p^n
  uint64_t order() const { return order_; }

  // V-index arithmetic (tables).
  vidx_t vadd(vidx_t a, vidx_t b) const { return vadd_[static_cast<size_t>(a) * pn_ + b]; }
  vidx_t vneg(vidx_t a) const { return vneg_[a]; }
  vidx_t cocycle(vidx_t a, vidx_t b) const { return coc_[static_cast<size_t>(a) * pn_ + b]; }
  vidx_t bracket_v(vidx_t a, vidx_t b) const { return brk_[static_cast<size_t>(a) * pn_ + b]; }

  vidx_t encode_v(const fpla::FpVec& v) const;
  fpla::FpVec decode_v(vidx_t idx) const;

  elt_t id() const { return 0; }
  elt_t make(vidx_t a, vidx_t s) const { return static_cast<elt_t>(a) * pn_ + s; }
  vidx_t part_a(elt_t e) const { return static_cast<vidx_t>(e / pn_); }
  vidx_t part_s(elt_t e) const { return static_cast<vidx_t>(e % pn_); }
  elt_t lift(vidx_t a) const { return make(a, 0); }

  elt_t mul(elt_t g, elt_t h) const {
    vidx_t ga = part_a(g), gs = part_s(g), ha = part_a(h), hs = part_s(h);
    return make(vadd(ga, ha), vadd(vadd(gs, hs), cocycle(ga, ha)));
  }
  elt_t inv(elt_t g) const { return inv_[g]; }
  elt_t pw(elt_t g, long long k) const;
  elt_t commutator(elt_t g, elt_t h) const {  // g^{-1} h^{-1} g h
    return mul(mul(inv(g), inv(h)), mul(g, h));
  }

  // Least k >= 1 with g^k = id, located on the ladder of divisors of |G|.
  uint64_t element_order(elt_t g) const;
  // lcm of all element orders, by full enumeration.
  uint64_t exponent(unsigned threads = 1) const;

  std::string elt_to_string(elt_t e) const;

 private:
  BracketGroup(const bracket::BracketAlgebra& alg, uint64_t cap);

  bracket::BracketAlgebra alg_;
  uint32_t p_, n_, pn_;
  uint64_t order_;
  uint8_t half_;  // 2^{-1} mod p
  std::vector<vidx_t> vadd_, vneg_, coc_, brk_;
  std::vector<elt_t> inv_;
};

// Subgroup given by its full (sorted) element list plus a membership bitset.
class Subgroup {
 public:
  static Subgroup closure(const BracketGroup& G, std::vector<elt_t> gens, uint64_t cap);
  // Trusted constructor for element sets already known to be closed.
  static Subgroup from_sorted_elements(const BracketGroup& G, std::vector<elt_t> elems,
                                       std::vector<elt_t> gens = {});

  const BracketGroup& group() const { return *G_; }
  const std::vector<elt_t>& elements() const { return elems_; }
  const std::vector<elt_t>& generators() const { return gens_; }
  uint64_t size() const { return elems_.size(); }
  bool contains(elt_t e) const { return member_[e]; }
  uint64_t index() const;
  uint64_t exponent() const;
  bool is_closed() const;  // pairwise product check, for small subgroups

  bool operator==(const Subgroup& o) const { return G_ == o.G_ && elems_ == o.elems_; }

 private:
  Subgroup(const BracketGroup& G, std::vector<elt_t> elems, std::vector<elt_t> gens);

  const BracketGroup* G_;
  std::vector<elt_t> elems_;
  std::vector<elt_t> gens_;
  std::vector<bool> member_;
};

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b);
Subgroup intersect_all(const std::vector<Subgroup>& subs);

// |Z(G)|: (a,s) is central iff the cocycle is symmetric at a, scanned over
// the tables.
uint64_t center_size(const BracketGroup& G);

// Left cosets xH in minimal-element order (the identity's coset is 0), with
// G acting by left multiplication: g sends xH to (gx)H.
struct CosetAction {
  const BracketGroup* G = nullptr;
  uint32_t degree = 0;
  std::vector<elt_t> reps;
  std::vector<uint16_t> coset_of;

  Perm perm_of(elt_t g) const {
    Perm p;
    p.img.resize(degree);
    for (uint32_t i = 0; i < degree; ++i)
      p.img[i] = coset_of[G->mul(g, reps[i])];
    return p;
  }
};

CosetAction coset_action(const BracketGroup& G, const Subgroup& H, uint64_t degree_cap);

}  // namespace gexp::grp
