#include "group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <sstream>

#include "util.hpp"

namespace gexp::grp {

BracketGroup::BracketGroup(const bracket::BracketAlgebra& alg, uint64_t cap)
    : alg_(alg), p_(alg.field().p()), n_(alg.dim()) {
  auto checks = alg_.validate();
  require(checks.alternating, errc::invalid,
          "group construction requires an alternating structure table");
  uint64_t pn = 1;
  for (uint32_t i = 0; i < n_; ++i) {
    pn *= p_;
    require(pn <= 65535, errc::cap_exceeded, "component space too large to index");
  }
  pn_ = static_cast<uint32_t>(pn);
  order_ = pn * pn;
  require(order_ <= cap, errc::cap_exceeded, "group order exceeds cap");
  half_ = alg_.field().inv(alg_.field().reduce(2));

  const fpla::PrimeField& f = alg_.field();
  std::vector<fpla::FpVec> dec(pn_);
  for (uint32_t a = 0; a < pn_; ++a) dec[a] = decode_v(static_cast<vidx_t>(a));

  vadd_.resize(static_cast<size_t>(pn_) * pn_);
  brk_.resize(static_cast<size_t>(pn_) * pn_);
  coc_.resize(static_cast<size_t>(pn_) * pn_);
  vneg_.resize(pn_);
  for (uint32_t a = 0; a < pn_; ++a) {
    fpla::FpVec nv(n_);
    for (uint32_t i = 0; i < n_; ++i) nv[i] = f.neg(dec[a][i]);
    vneg_[a] = encode_v(nv);
    for (uint32_t b = 0; b < pn_; ++b) {
      fpla::FpVec s(n_), c(n_);
      fpla::FpVec br = alg_.bracket(dec[a], dec[b]);
      for (uint32_t i = 0; i < n_; ++i) {
        s[i] = f.add(dec[a][i], dec[b][i]);
        // c(a,b) = 2^{-1}[a,b] + carry(a,b)
        uint8_t carry = static_cast<uint8_t>(dec[a][i] + dec[b][i] >= p_ ? 1 : 0);
        c[i] = f.add(f.mul(half_, br[i]), carry);
      }
      vadd_[static_cast<size_t>(a) * pn_ + b] = encode_v(s);
      brk_[static_cast<size_t>(a) * pn_ + b] = encode_v(br);
      coc_[static_cast<size_t>(a) * pn_ + b] = encode_v(c);
    }
  }

  inv_.resize(order_);
  for (uint32_t a = 0; a < pn_; ++a) {
    vidx_t na = vneg_[a];
    vidx_t cc = coc_[static_cast<size_t>(a) * pn_ + na];
    for (uint32_t s = 0; s < pn_; ++s) {
      vidx_t ns = vadd(vneg_[s], vneg_[cc]);
      inv_[make(static_cast<vidx_t>(a), static_cast<vidx_t>(s))] = make(na, ns);
    }
  }
}

std::unique_ptr<const BracketGroup> BracketGroup::build(const bracket::BracketAlgebra& alg,
                                                        uint64_t cap) {
  return std::unique_ptr<const BracketGroup>(new BracketGroup(alg, cap));
}

vidx_t BracketGroup::encode_v(const fpla::FpVec& v) const {
  require(v.size() == n_, errc::invalid, "vector dimension mismatch");
  uint32_t idx = 0;
  for (uint32_t i = n_; i-- > 0;) idx = idx * p_ + v[i];
  return static_cast<vidx_t>(idx);
}

fpla::FpVec BracketGroup::decode_v(vidx_t idx) const {
  fpla::FpVec v(n_);
  uint32_t x = idx;
  for (uint32_t i = 0; i < n_; ++i) {
    v[i] = static_cast<uint8_t>(x % p_);
    x /= p_;
  }
  return v;
}

elt_t BracketGroup::pw(elt_t g, long long k) const {
  if (k < 0) return pw(inv(g), -k);
  elt_t acc = id(), base = g;
  unsigned long long e = static_cast<unsigned long long>(k);
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

uint64_t BracketGroup::element_order(elt_t g) const {
  // The order divides |G| = p^(2n), so walk the p-power ladder.
  uint64_t k = 1;
  elt_t acc = g;
  for (uint32_t step = 0; step <= 2 * n_; ++step) {
    if (acc == id()) return k;
    acc = pw(acc, p_);
    k *= p_;
  }
  fail(errc::internal, "element order not a divisor of the group order");
}

uint64_t BracketGroup::exponent(unsigned threads) const {
  std::vector<uint64_t> partial(threads ? threads : 1, 1);
  util::parallel_chunks(order_, threads, [&](uint64_t lo, uint64_t hi, unsigned w) {
    uint64_t e = 1;
    for (uint64_t g = lo; g < hi; ++g)
      e = util::lcm_u64(e, element_order(static_cast<elt_t>(g)));
    partial[w] = e;
  });
  uint64_t e = 1;
  for (uint64_t x : partial) e = util::lcm_u64(e, x);
  return e;
}

std::string BracketGroup::elt_to_string(elt_t e) const {
  std::ostringstream os;
  os << "(" << fpla::vec_to_string(decode_v(part_a(e))) << "|"
     << fpla::vec_to_string(decode_v(part_s(e))) << ")";
  return os.str();
}

Subgroup::Subgroup(const BracketGroup& G, std::vector<elt_t> elems, std::vector<elt_t> gens)
    : G_(&G), elems_(std::move(elems)), gens_(std::move(gens)), member_(G.order(), false) {
  for (elt_t e : elems_) member_[e] = true;
}

Subgroup Subgroup::closure(const BracketGroup& G, std::vector<elt_t> gens, uint64_t cap) {
  std::vector<bool> seen(G.order(), false);
  std::vector<elt_t> elems;
  std::deque<elt_t> work;
  auto push = [&](elt_t e) {
    if (!seen[e]) {
      require(elems.size() < cap, errc::cap_exceeded, "closure exceeds cap");
      seen[e] = true;
      elems.push_back(e);
      work.push_back(e);
    }
  };
  push(G.id());
  for (elt_t g : gens) push(g);
  while (!work.empty()) {
    elt_t f = work.front();
    work.pop_front();
    for (elt_t g : gens) {
      push(G.mul(f, g));
      push(G.mul(g, f));
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup(G, std::move(elems), std::move(gens));
}

Subgroup Subgroup::from_sorted_elements(const BracketGroup& G, std::vector<elt_t> elems,
                                        std::vector<elt_t> gens) {
  require(!elems.empty() && elems[0] == G.id(), errc::invalid,
          "element set must be sorted and contain the identity");
  return Subgroup(G, std::move(elems), std::move(gens));
}

uint64_t Subgroup::index() const {
  require(size() > 0 && G_->order() % size() == 0, errc::internal,
          "subgroup size does not divide the group order");
  return G_->order() / size();
}

uint64_t Subgroup::exponent() const {
  uint64_t e = 1;
  for (elt_t g : elems_) e = util::lcm_u64(e, G_->element_order(g));
  return e;
}

bool Subgroup::is_closed() const {
  for (elt_t a : elems_)
    for (elt_t b : elems_)
      if (!member_[G_->mul(a, b)]) return false;
  return true;
}

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
  require(&a.group() == &b.group(), errc::invalid, "parent group mismatch");
  std::vector<elt_t> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return Subgroup::from_sorted_elements(a.group(), std::move(out));
}

Subgroup intersect_all(const std::vector<Subgroup>& subs) {
  require(!subs.empty(), errc::invalid, "intersect_all needs at least one subgroup");
  Subgroup acc = subs[0];
  for (size_t i = 1; i < subs.size(); ++i) acc = intersect_subgroups(acc, subs[i]);
  return acc;
}

uint64_t center_size(const BracketGroup& G) {
  const uint32_t pn = G.v_count();
  uint64_t central = 0;
  for (uint32_t a = 0; a < pn; ++a) {
    bool commutes = true;
    for (uint32_t b = 0; b < pn && commutes; ++b)
      commutes = G.cocycle(static_cast<vidx_t>(a), static_cast<vidx_t>(b)) ==
                 G.cocycle(static_cast<vidx_t>(b), static_cast<vidx_t>(a));
    if (commutes) ++central;
  }
  return central * pn;
}

CosetAction coset_action(const BracketGroup& G, const Subgroup& H, uint64_t degree_cap) {
  require(&H.group() == &G, errc::invalid, "parent group mismatch");
  uint64_t degree = G.order() / H.size();
  require(degree * H.size() == G.order(), errc::internal, "coset count not integral");
  require(degree <= degree_cap && degree <= 65534, errc::cap_exceeded,
          "coset degree exceeds cap");
  CosetAction act;
  act.G = &G;
  act.degree = static_cast<uint32_t>(degree);
  act.coset_of.assign(G.order(), 0xffff);
  for (elt_t e = 0; e < G.order(); ++e) {
    if (act.coset_of[e] != 0xffff) continue;
    uint16_t idx = static_cast<uint16_t>(act.reps.size());
    act.reps.push_back(e);
    for (elt_t h : H.elements()) act.coset_of[G.mul(e, h)] = idx;
  }
  require(act.reps.size() == degree, errc::internal, "coset enumeration miscount");
  return act;
}

}  // namespace gexp::grp
