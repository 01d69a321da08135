#include "cohom.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "error.hpp"
#include "util.hpp"

namespace gexp::cohom {

GroupTable::GroupTable(uint32_t o, std::vector<uint32_t> t) : order_(o), t_(std::move(t)) {
  validate();
}

void GroupTable::validate() const {
  require(order_ >= 1 && order_ <= 64, errc::invalid, "group order must be between 1 and 64");
  require(t_.size() == size_t(order_) * order_, errc::invalid, "multiplication table size mismatch");
  for (uint32_t v : t_) require(v < order_, errc::invalid, "table entry out of range");
  for (uint32_t g = 0; g < order_; ++g) {
    require(mul(0, g) == g && mul(g, 0) == g, errc::invalid, "element 0 is not an identity");
    std::vector<bool> seen_row(order_, false), seen_col(order_, false);
    for (uint32_t h = 0; h < order_; ++h) {
      seen_row[mul(g, h)] = true;
      seen_col[mul(h, g)] = true;
    }
    for (uint32_t h = 0; h < order_; ++h)
      require(seen_row[h] && seen_col[h], errc::invalid, "table rows and columns must be permutations");
  }
  for (uint32_t a = 0; a < order_; ++a)
    for (uint32_t b = 0; b < order_; ++b)
      for (uint32_t c = 0; c < order_; ++c)
        require(mul(mul(a, b), c) == mul(a, mul(b, c)), errc::invalid,
                "multiplication table is not associative");
}

GroupTable GroupTable::cyclic(uint32_t m) {
  require(m >= 1, errc::invalid, "cyclic group order must be positive");
  std::vector<uint32_t> t(size_t(m) * m);
  for (uint32_t a = 0; a < m; ++a)
    for (uint32_t b = 0; b < m; ++b) t[a * m + b] = (a + b) % m;
  return GroupTable(m, std::move(t));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  uint32_t o = a.order_ * b.order_;
  std::vector<uint32_t> t(size_t(o) * o);
  auto idx = [&](uint32_t x, uint32_t y) { return x * b.order_ + y; };
  for (uint32_t x1 = 0; x1 < a.order_; ++x1)
    for (uint32_t y1 = 0; y1 < b.order_; ++y1)
      for (uint32_t x2 = 0; x2 < a.order_; ++x2)
        for (uint32_t y2 = 0; y2 < b.order_; ++y2)
          t[idx(x1, y1) * o + idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
  return GroupTable(o, std::move(t));
}

GroupTable GroupTable::from_table(std::vector<uint32_t> table) {
  size_t n = 1;
  while (n * n < table.size()) ++n;
  require(n * n == table.size(), errc::invalid, "table length is not a perfect square");
  return GroupTable(static_cast<uint32_t>(n), std::move(table));
}

bool GroupTable::is_abelian() const {
  for (uint32_t a = 0; a < order_; ++a)
    for (uint32_t b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

uint32_t GroupTable::element_order(uint32_t g) const {
  uint32_t x = g, k = 1;
  while (x != 0) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

std::vector<uint32_t> GroupTable::order_multiset() const {
  std::vector<uint32_t> out;
  out.reserve(order_);
  for (uint32_t g = 0; g < order_; ++g) out.push_back(element_order(g));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void factor_chains(uint32_t remaining, uint32_t last, std::vector<uint32_t>& cur,
                   std::vector<std::vector<uint32_t>>& out) {
  if (remaining == 1) {
    out.push_back(cur);
    return;
  }
  for (uint32_t d = 2; d <= remaining; ++d) {
    if (remaining % d != 0) continue;
    if (last != 0 && d % last != 0) continue;
    cur.push_back(d);
    factor_chains(remaining / d, d, cur, out);
    cur.pop_back();
  }
}

std::vector<uint32_t> chain_order_multiset(const std::vector<uint32_t>& chain) {
  std::vector<uint32_t> tup(chain.size(), 0), out;
  while (true) {
    uint32_t ord = 1;
    for (size_t i = 0; i < chain.size(); ++i)
      ord = std::lcm(ord, chain[i] / std::gcd(chain[i], tup[i]));
    out.push_back(ord);
    size_t d = 0;
    while (d < chain.size() && ++tup[d] == chain[d]) tup[d++] = 0;
    if (d == chain.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<uint32_t> abelian_invariant_factors(const GroupTable& g) {
  require(g.is_abelian(), errc::invalid, "invariant factors need an abelian group");
  std::vector<std::vector<uint32_t>> chains;
  std::vector<uint32_t> cur;
  factor_chains(g.order(), 0, cur, chains);
  std::vector<uint32_t> target = g.order_multiset();
  for (const auto& chain : chains)
    if (chain_order_multiset(chain) == target) return chain;
  fail(errc::internal, "no abelian factor chain matches the element orders");
}

CochainComplex periodic_cochain(uint32_t m, unsigned max_degree) {
  require(m >= 1, errc::invalid, "cyclic group order must be positive");
  CochainComplex c;
  c.desc = "cyclic order " + std::to_string(m);
  c.ranks.assign(max_degree + 2, 1);
  c.diff.reserve(max_degree + 1);
  for (unsigned n = 0; n <= max_degree; ++n) {
    SparseZMat d(1, 1);
    if (n % 2 == 1) d.set_row(0, {{0, Int(m)}});
    c.diff.push_back(std::move(d));
  }
  return c;
}

namespace {

std::vector<std::vector<uint8_t>> weak_compositions(unsigned n, size_t parts) {
  std::vector<std::vector<uint8_t>> out;
  std::vector<uint8_t> cur(parts, 0);
  // n distributed over the parts; odometer with a running remainder
  if (parts == 0) {
    if (n == 0) out.push_back(cur);
    return out;
  }
  std::function<void(size_t, unsigned)> rec = [&](size_t pos, unsigned left) {
    if (pos + 1 == parts) {
      cur[pos] = static_cast<uint8_t>(left);
      out.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      cur[pos] = static_cast<uint8_t>(v);
      rec(pos + 1, left - v);
    }
  };
  rec(0, n);
  return out;
}

uint64_t encode_comp(const std::vector<uint8_t>& c) {
  uint64_t k = 0;
  for (uint8_t v : c) k = k * 64 + v;
  return k;
}

}  // namespace

CochainComplex abelian_cochain(const std::vector<uint32_t>& factors, unsigned max_degree,
                               size_t rank_cap) {
  require(!factors.empty(), errc::invalid, "abelian complex needs at least one factor");
  for (uint32_t m : factors)
    require(m >= 1, errc::invalid, "abelian factors must be positive");
  require(max_degree + 1 < 64, errc::invalid, "degree out of range");
  size_t k = factors.size();
  CochainComplex c;
  c.desc = "abelian";
  for (size_t i = 0; i < k; ++i) c.desc += (i ? "x" : " ") + std::to_string(factors[i]);

  std::vector<std::vector<std::vector<uint8_t>>> comps(max_degree + 2);
  std::vector<std::map<uint64_t, uint32_t>> index(max_degree + 2);
  for (unsigned n = 0; n <= max_degree + 1; ++n) {
    comps[n] = weak_compositions(n, k);
    require(comps[n].size() <= rank_cap, errc::cap_exceeded,
            "abelian complex rank exceeds the cap");
    for (uint32_t i = 0; i < comps[n].size(); ++i) index[n][encode_comp(comps[n][i])] = i;
    c.ranks.push_back(comps[n].size());
  }

  for (unsigned n = 0; n <= max_degree; ++n) {
    SparseZMat d(c.ranks[n + 1], c.ranks[n]);
    std::vector<std::vector<std::pair<uint32_t, Int>>> rows(c.ranks[n + 1]);
    for (uint32_t j = 0; j < comps[n].size(); ++j) {
      const auto& comp = comps[n][j];
      // Koszul sign: parity of the degree carried by the factors to the left.
      int sign = 1;
      for (size_t f = 0; f < k; ++f) {
        if (comp[f] % 2 == 1) {
          std::vector<uint8_t> up = comp;
          ++up[f];
          uint32_t i = index[n + 1].at(encode_comp(up));
          rows[i].emplace_back(j, Int(sign) * factors[f]);
          sign = -sign;
        }
      }
    }
    for (uint32_t i = 0; i < rows.size(); ++i) d.set_row(i, std::move(rows[i]));
    c.diff.push_back(std::move(d));
  }
  return c;
}

CochainComplex bar_cochain(const GroupTable& g, unsigned max_degree, size_t size_cap) {
  uint32_t o = g.order();
  require(o >= 1, errc::invalid, "group order must be positive");
  uint64_t b = o - 1;
  CochainComplex c;
  c.desc = "bar order " + std::to_string(o);
  uint64_t r = 1;
  for (unsigned n = 0; n <= max_degree + 1; ++n) {
    c.ranks.push_back(r);
    require(r <= size_cap, errc::cap_exceeded, "bar complex size exceeds the cap");
    r *= b;
  }
  if (b == 0) {
    // trivial group: rank 1 in degree 0, rank 0 above
    for (unsigned n = 1; n < c.ranks.size(); ++n) c.ranks[n] = 0;
    for (unsigned n = 0; n <= max_degree; ++n)
      c.diff.emplace_back(c.ranks[n + 1], c.ranks[n]);
    return c;
  }

  // tuples over non-identity elements 1..o-1, big endian base b with digits
  // shifted down by one
  auto decode = [&](uint64_t idx, unsigned n, std::vector<uint32_t>& tup) {
    tup.resize(n);
    for (unsigned i = n; i-- > 0;) {
      tup[i] = static_cast<uint32_t>(idx % b) + 1;
      idx /= b;
    }
  };
  auto encode = [&](const std::vector<uint32_t>& tup) {
    uint64_t idx = 0;
    for (uint32_t v : tup) idx = idx * b + (v - 1);
    return idx;
  };

  for (unsigned n = 0; n <= max_degree; ++n) {
    SparseZMat d(c.ranks[n + 1], c.ranks[n]);
    std::vector<uint32_t> tup, sub;
    for (uint64_t row = 0; row < c.ranks[n + 1]; ++row) {
      decode(row, n + 1, tup);
      std::vector<std::pair<uint32_t, Int>> entries;
      sub.assign(tup.begin() + 1, tup.end());
      entries.emplace_back(static_cast<uint32_t>(encode(sub)), Int(1));
      int sign = -1;
      for (unsigned i = 0; i + 1 <= n; ++i) {
        uint32_t prod = g.mul(tup[i], tup[i + 1]);
        if (prod != 0) {
          sub.assign(tup.begin(), tup.end());
          sub[i] = prod;
          sub.erase(sub.begin() + i + 1);
          entries.emplace_back(static_cast<uint32_t>(encode(sub)), Int(sign));
        }
        sign = -sign;
      }
      sub.assign(tup.begin(), tup.end() - 1);
      entries.emplace_back(static_cast<uint32_t>(encode(sub)), Int(sign));
      d.set_row(row, std::move(entries));
    }
    c.diff.push_back(std::move(d));
  }
  return c;
}

bool complex_is_valid(const CochainComplex& c) {
  if (c.ranks.size() != c.diff.size() + 1) return false;
  for (size_t n = 0; n < c.diff.size(); ++n) {
    if (c.diff[n].rows() != c.ranks[n + 1] || c.diff[n].cols() != c.ranks[n]) return false;
    if (n > 0 && !snf::product_is_zero(c.diff[n], c.diff[n - 1])) return false;
  }
  return true;
}

CohomologyReport cohomology(const CochainComplex& c, size_t dense_entry_cap) {
  require(c.ranks.size() >= 2 && c.diff.size() + 1 == c.ranks.size(), errc::invalid,
          "complex must carry one differential past the last reported degree");
  unsigned N = static_cast<unsigned>(c.ranks.size() - 2);
  CohomologyReport rep;
  rep.desc = c.desc;
  rep.max_degree = N;

  // Smith forms of the incoming differentials, rank only for the last one.
  std::vector<snf::SnfResult> forms(N);
  for (unsigned n = 0; n < N; ++n)
    forms[n] = snf::smith_normal_form(c.diff[n].to_dense(dense_entry_cap));
  std::vector<size_t> rk(N + 1);
  for (unsigned n = 0; n < N; ++n) rk[n] = forms[n].rank;
  rk[N] = snf::zrank(c.diff[N]);

  for (unsigned n = 0; n <= N; ++n) {
    DegreeCohomology d;
    size_t image = n == 0 ? 0 : rk[n - 1];
    require(c.ranks[n] >= rk[n] + image, errc::internal, "rank bookkeeping broke");
    d.free_rank = c.ranks[n] - rk[n] - image;
    if (n > 0) d.divisors = snf::nontrivial_divisors(forms[n - 1]);
    for (const Int& v : d.divisors) d.exponent = boost::multiprecision::lcm(d.exponent, v);
    if (n > 0) rep.exponent_lcm = boost::multiprecision::lcm(rep.exponent_lcm, d.exponent);
    rep.degrees.push_back(std::move(d));
  }
  return rep;
}

}  // namespace gexp::cohom
