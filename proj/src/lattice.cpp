#include "lattice.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "util.hpp"

namespace gexp::lattice {

using grp::BracketGroup;
using grp::elt_t;
using grp::Subgroup;
using grp::vidx_t;

namespace {

std::vector<vidx_t> encode_subspace(const BracketGroup& G, const fpla::Subspace& s) {
  std::vector<vidx_t> out;
  for (const auto& v : s.elements()) out.push_back(G.encode_v(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Subgroup> maximal_subgroups(const BracketGroup& G, uint64_t cap) {
  const fpla::PrimeField& f = G.algebra().field();
  uint32_t n = G.dim();
  std::vector<Subgroup> out;
  for (const auto& hyper : fpla::enumerate_subspaces(f, n, n - 1, cap)) {
    std::vector<elt_t> elems;
    elems.reserve(static_cast<size_t>(G.v_count()) / G.p() * G.v_count());
    for (vidx_t a : encode_subspace(G, hyper))
      for (uint32_t s = 0; s < G.v_count(); ++s)
        elems.push_back(G.make(a, static_cast<vidx_t>(s)));
    std::sort(elems.begin(), elems.end());
    out.push_back(Subgroup::from_sorted_elements(G, std::move(elems)));
  }
  return out;
}

grp::Subgroup frattini(const BracketGroup& G, const Subgroup& H, unsigned threads) {
  require(&H.group() == &G, errc::invalid, "parent group mismatch");
  const std::vector<elt_t>& el = H.elements();
  size_t m = el.size();
  // Cache the (a, s) parts and inverses once; the pair sweep is the hot loop.
  std::vector<vidx_t> pa(m), ps(m), ia(m), is(m);
  for (size_t i = 0; i < m; ++i) {
    pa[i] = G.part_a(el[i]);
    ps[i] = G.part_s(el[i]);
    elt_t iv = G.inv(el[i]);
    ia[i] = G.part_a(iv);
    is[i] = G.part_s(iv);
  }
  std::vector<std::vector<bool>> hits(threads ? threads : 1,
                                      std::vector<bool>(G.order(), false));
  util::parallel_chunks(m, threads, [&](uint64_t lo, uint64_t hi, unsigned w) {
    std::vector<bool>& hit = hits[w];
    for (uint64_t i = lo; i < hi; ++i) {
      hit[G.pw(el[i], G.p())] = true;
      vidx_t gia = ia[i], gis = is[i];
      for (size_t j = 0; j < m; ++j) {
        // g^{-1} h^{-1} g h evaluated through the multiplication tables
        vidx_t a1 = G.vadd(gia, ia[j]);
        vidx_t s1 = G.vadd(G.vadd(gis, is[j]), G.cocycle(gia, ia[j]));
        vidx_t a2 = G.vadd(pa[i], pa[j]);
        vidx_t s2 = G.vadd(G.vadd(ps[i], ps[j]), G.cocycle(pa[i], pa[j]));
        vidx_t a3 = G.vadd(a1, a2);
        vidx_t s3 = G.vadd(G.vadd(s1, s2), G.cocycle(a1, a2));
        hit[G.make(a3, s3)] = true;
      }
    }
  });
  std::vector<elt_t> gens;
  for (elt_t e = 0; e < G.order(); ++e)
    for (const auto& hit : hits)
      if (hit[e]) {
        gens.push_back(e);
        break;
      }
  return Subgroup::closure(G, std::move(gens), G.order());
}

Subgroup index_p2_intersection(const BracketGroup& G, const std::vector<Subgroup>& maximals,
                               const std::vector<Subgroup>& frattinis) {
  require(!maximals.empty() && maximals.size() == frattinis.size(), errc::invalid,
          "need the maximal subgroups with their Frattini subgroups");
  return grp::intersect_all(frattinis);
}

std::vector<Subgroup> enumerate_index_p2(const BracketGroup& G,
                                         const std::vector<Subgroup>& maximals,
                                         const std::vector<Subgroup>& frattinis) {
  require(maximals.size() == frattinis.size(), errc::invalid, "mismatched lists");
  uint32_t p = G.p();
  std::set<std::vector<elt_t>> seen;
  std::vector<Subgroup> out;
  for (size_t mi = 0; mi < maximals.size(); ++mi) {
    const Subgroup& M = maximals[mi];
    const Subgroup& Phi = frattinis[mi];
    // Greedy basis of the elementary abelian quotient M / Phi(M).
    std::vector<elt_t> basis;
    std::vector<elt_t> span_elems = Phi.elements();
    std::vector<bool> in_span(G.order(), false);
    for (elt_t e : span_elems) in_span[e] = true;
    for (elt_t e : M.elements()) {
      if (in_span[e]) continue;
      basis.push_back(e);
      std::vector<elt_t> grown = span_elems;
      elt_t bj = G.id();
      for (uint32_t j = 1; j < p; ++j) {
        bj = G.mul(bj, e);
        for (elt_t x : span_elems) grown.push_back(G.mul(bj, x));
      }
      span_elems = std::move(grown);
      for (elt_t x : span_elems) in_span[x] = true;
      if (span_elems.size() == M.size()) break;
    }
    size_t r = basis.size();
    require(span_elems.size() == M.size(), errc::internal, "quotient basis incomplete");
    // Coordinates of each element of M in the quotient, coset by coset.
    std::vector<uint32_t> coords(G.order(), 0);
    std::vector<bool> assigned(G.order(), false);
    std::vector<uint8_t> tup(r, 0);
    uint64_t tuples = 1;
    for (size_t i = 0; i < r; ++i) tuples *= p;
    for (uint64_t t = 0; t < tuples; ++t) {
      elt_t rep = G.id();
      for (size_t i = 0; i < r; ++i)
        if (tup[i]) rep = G.mul(rep, G.pw(basis[i], tup[i]));
      uint32_t packed = 0;
      for (size_t i = r; i-- > 0;) packed = packed * p + tup[i];
      for (elt_t ph : Phi.elements()) {
        elt_t e = G.mul(rep, ph);
        require(!assigned[e], errc::internal, "coset coordinates collide");
        assigned[e] = true;
        coords[e] = packed;
      }
      size_t d = 0;
      while (d < r && ++tup[d] == p) tup[d++] = 0;
    }
    // Index-p subgroups of M = kernels of the nonzero functionals, one per
    // hyperplane of the quotient.
    std::vector<std::vector<uint8_t>> functionals;
    std::vector<uint8_t> lam(r, 0);
    uint64_t total = tuples;
    for (uint64_t t = 1; t < total; ++t) {
      size_t d = 0;
      while (++lam[d] == p) lam[d++] = 0;
      size_t lead = 0;
      while (lead < r && lam[lead] == 0) ++lead;
      // One functional per hyperplane: fix the leading coefficient at 1.
      if (lead < r && lam[lead] == 1) functionals.push_back(lam);
    }
    for (const auto& fl : functionals) {
      std::vector<elt_t> elems;
      for (elt_t e : M.elements()) {
        uint32_t packed = coords[e];
        uint32_t dot = 0;
        for (size_t i = 0; i < r; ++i) {
          dot += fl[i] * (packed % p);
          packed /= p;
        }
        if (dot % p == 0) elems.push_back(e);
      }
      if (seen.insert(elems).second)
        out.push_back(Subgroup::from_sorted_elements(G, std::move(elems)));
    }
  }
  return out;
}

Subgroup lift_subalgebra(const BracketGroup& G, const fpla::Subspace& S, uint64_t cap) {
  require(S.dim() == 2, errc::invalid, "lift expects a 2-dimensional subalgebra");
  require(G.algebra().is_subalgebra(S), errc::invalid,
          "lift expects a subspace closed under the bracket");
  std::vector<elt_t> gens;
  for (size_t r = 0; r < S.dim(); ++r)
    gens.push_back(G.lift(G.encode_v(S.basis().row(r))));
  return Subgroup::closure(G, std::move(gens), cap);
}

Subgroup line_preimage(const BracketGroup& G, const fpla::Subspace& line) {
  require(line.dim() == 1, errc::invalid, "preimage expects a 1-dimensional subspace");
  std::vector<elt_t> elems;
  for (vidx_t a : encode_subspace(G, line))
    for (uint32_t s = 0; s < G.v_count(); ++s)
      elems.push_back(G.make(a, static_cast<vidx_t>(s)));
  std::sort(elems.begin(), elems.end());
  return Subgroup::from_sorted_elements(G, std::move(elems));
}

Subgroup w_part(const BracketGroup& G, const fpla::Subspace& U) {
  std::vector<elt_t> elems;
  for (vidx_t s : encode_subspace(G, U)) elems.push_back(G.make(0, s));
  std::sort(elems.begin(), elems.end());
  return Subgroup::from_sorted_elements(G, std::move(elems));
}

Subgroup w_subgroup(const BracketGroup& G) {
  std::vector<elt_t> elems;
  for (uint32_t s = 0; s < G.v_count(); ++s) elems.push_back(G.make(0, static_cast<vidx_t>(s)));
  return Subgroup::from_sorted_elements(G, std::move(elems));
}

WitnessFamily witness_family(const BracketGroup& G, uint64_t cap) {
  WitnessFamily fam;
  const fpla::PrimeField& f = G.algebra().field();
  fam.lines = fpla::enumerate_subspaces(f, G.dim(), 1, cap);
  fam.subalgebras = G.algebra().subalgebras_of_dim(2, cap);
  for (const auto& line : fam.lines) fam.members.push_back(line_preimage(G, line));
  for (const auto& s : fam.subalgebras) fam.members.push_back(lift_subalgebra(G, s, cap));
  return fam;
}

EmbeddingCheck verify_embedding(const BracketGroup& G, const std::vector<Subgroup>& family,
                                const EmbedBudget& budget) {
  require(!family.empty(), errc::invalid, "empty subgroup family");
  EmbeddingCheck out;
  out.family_intersection_trivial = grp::intersect_all(family).size() == 1;

  std::mt19937_64 rng(budget.seed);
  out.homomorphism_ok = true;
  out.image_orders_divide_p2 = true;
  uint64_t p2 = static_cast<uint64_t>(G.p()) * G.p();

  for (const Subgroup& H : family) {
    grp::CosetAction act = coset_action(G, H, budget.degree_cap);
    out.degree = act.degree;
    // Permutation images of all elements, reused by both sweeps.
    std::vector<grp::Perm> image(G.order());
    for (elt_t g = 0; g < G.order(); ++g) image[g] = act.perm_of(g);

    if (budget.hom_pairs == 0) {
      for (elt_t g = 0; g < G.order() && out.homomorphism_ok; ++g)
        for (elt_t h = 0; h < G.order(); ++h)
          if (!(grp::compose(image[g], image[h]) == image[G.mul(g, h)])) {
            out.homomorphism_ok = false;
            break;
          }
      out.hom_pairs_checked += G.order() * G.order();
      out.hom_exhaustive = true;
    } else {
      for (uint64_t t = 0; t < budget.hom_pairs && out.homomorphism_ok; ++t) {
        elt_t g = static_cast<elt_t>(rng() % G.order());
        elt_t h = static_cast<elt_t>(rng() % G.order());
        if (!(grp::compose(image[g], image[h]) == image[G.mul(g, h)]))
          out.homomorphism_ok = false;
      }
      out.hom_pairs_checked += budget.hom_pairs;
      out.hom_exhaustive = false;
    }

    if (budget.order_samples == 0) {
      for (elt_t g = 0; g < G.order(); ++g)
        if (p2 % grp::perm_order(image[g]) != 0) {
          out.image_orders_divide_p2 = false;
          break;
        }
      out.image_orders_checked += G.order();
      out.image_orders_exhaustive = true;
    } else {
      for (uint64_t t = 0; t < budget.order_samples; ++t) {
        elt_t g = static_cast<elt_t>(rng() % G.order());
        if (p2 % grp::perm_order(image[g]) != 0) {
          out.image_orders_divide_p2 = false;
          break;
        }
      }
      out.image_orders_checked += budget.order_samples;
      out.image_orders_exhaustive = false;
    }
  }

  // g is separated when some member excludes it; its action then moves that
  // member's identity coset, so the combined image of g is nontrivial.
  out.injective = true;
  out.separated_elements = 0;
  for (elt_t g = 1; g < G.order(); ++g) {
    bool separated = false;
    for (const Subgroup& H : family)
      if (!H.contains(g)) {
        separated = true;
        break;
      }
    if (separated)
      ++out.separated_elements;
    else
      out.injective = false;
  }
  return out;
}

}  // namespace gexp::lattice
