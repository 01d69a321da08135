#include "perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "fpla.hpp"
#include "util.hpp"

namespace gexp::grp {

bool is_valid_permutation(const Perm& p) {
  std::vector<bool> hit(p.degree(), false);
  for (uint16_t v : p.img) {
    if (v >= p.degree() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

Perm compose(const Perm& f, const Perm& g) {
  require(f.degree() == g.degree(), errc::invalid, "permutation degree mismatch");
  Perm r;
  r.img.resize(f.degree());
  for (uint32_t x = 0; x < f.degree(); ++x) r.img[x] = f.img[g.img[x]];
  return r;
}

uint64_t perm_order(const Perm& p) {
  std::vector<bool> seen(p.degree(), false);
  uint64_t ord = 1;
  for (uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    uint32_t j = i;
    do {
      seen[j] = true;
      j = p.img[j];
      ++len;
    } while (j != i);
    ord = util::lcm_u64(ord, len);
  }
  return ord;
}

PermGroup wreath_sylow(uint32_t p, uint32_t n) {
  require(n == 1 || n == 2, errc::invalid, "only depths 1 and 2 are supported");
  require(p >= 3 && p <= 7 && fpla::is_prime(p), errc::invalid,
          "odd prime p <= 7 required");
  PermGroup g;
  if (n == 1) {
    g.degree = p;
    Perm c = Perm::identity(p);
    for (uint32_t i = 0; i < p; ++i) c.img[i] = static_cast<uint16_t>((i + 1) % p);
    g.generators.push_back(std::move(c));
    return g;
  }
  g.degree = p * p;
  for (uint32_t b = 0; b < p; ++b) {
    Perm c = Perm::identity(p * p);
    for (uint32_t r = 0; r < p; ++r) c.img[b * p + r] = static_cast<uint16_t>(b * p + (r + 1) % p);
    g.generators.push_back(std::move(c));
  }
  Perm shift = Perm::identity(p * p);
  for (uint32_t b = 0; b < p; ++b)
    for (uint32_t r = 0; r < p; ++r)
      shift.img[b * p + r] = static_cast<uint16_t>(((b + 1) % p) * p + r);
  g.generators.push_back(std::move(shift));
  return g;
}

namespace {
std::string perm_key(const Perm& p) {
  std::string s;
  s.reserve(p.img.size());
  for (uint16_t v : p.img) s.push_back(static_cast<char>(v));
  return s;
}
}  // namespace

std::vector<Perm> materialize(const PermGroup& g, uint64_t cap) {
  for (const Perm& gen : g.generators)
    require(gen.degree() == g.degree && is_valid_permutation(gen), errc::invalid,
            "generator is not a permutation of the stated degree");
  require(g.degree <= 255, errc::invalid, "degree too large to materialize");
  std::vector<Perm> elems;
  std::unordered_set<std::string> seen;
  std::vector<Perm> work;
  Perm id = Perm::identity(g.degree);
  seen.insert(perm_key(id));
  elems.push_back(id);
  work.push_back(id);
  while (!work.empty()) {
    Perm f = std::move(work.back());
    work.pop_back();
    for (const Perm& gen : g.generators) {
      for (const Perm& prod : {compose(f, gen), compose(gen, f)}) {
        std::string key = perm_key(prod);
        if (seen.insert(key).second) {
          require(elems.size() < cap, errc::cap_exceeded, "group materialization exceeds cap");
          elems.push_back(prod);
          work.push_back(prod);
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

uint64_t exponent_of(const std::vector<Perm>& elements) {
  uint64_t e = 1;
  for (const Perm& p : elements) e = util::lcm_u64(e, perm_order(p));
  return e;
}

}  // namespace gexp::grp
