#include "fpla.hpp"

#include <algorithm>
#include <sstream>

namespace gexp::fpla {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(uint32_t p) : p_(p), inv_(p, 0) {
  for (uint32_t a = 1; a < p; ++a) {
    for (uint32_t b = 1; b < p; ++b) {
      if (a * b % p == 1) {
        inv_[a] = static_cast<uint8_t>(b);
        break;
      }
    }
  }
}

PrimeField PrimeField::make(uint32_t p) {
  require(p % 2 == 1 && p >= 3, errc::invalid, "odd prime required");
  require(p <= 251, errc::invalid, "field characteristic must lie in [3, 251]");
  require(is_prime(p), errc::invalid, "field characteristic must be prime");
  return PrimeField(p);
}

FpVec vec_add(const PrimeField& f, const FpVec& a, const FpVec& b) {
  require(a.size() == b.size(), errc::invalid, "vector dimension mismatch");
  FpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

FpVec vec_sub(const PrimeField& f, const FpVec& a, const FpVec& b) {
  require(a.size() == b.size(), errc::invalid, "vector dimension mismatch");
  FpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

FpVec vec_scale(const PrimeField& f, uint8_t c, const FpVec& a) {
  FpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

bool vec_is_zero(const FpVec& a) {
  return std::all_of(a.begin(), a.end(), [](uint8_t d) { return d == 0; });
}

FpMat FpMat::from_rows(const std::vector<FpVec>& rows_in) {
  FpMat m(rows_in.size(), rows_in.empty() ? 0 : rows_in[0].size());
  for (size_t r = 0; r < rows_in.size(); ++r) {
    require(rows_in[r].size() == m.cols, errc::invalid, "ragged row set");
    for (size_t c = 0; c < m.cols; ++c) m.at(r, c) = rows_in[r][c];
  }
  return m;
}

size_t rref(const PrimeField& f, FpMat& m) {
  size_t rank = 0;
  for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    size_t piv = rank;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
    uint8_t s = f.inv(m.at(rank, col));
    for (size_t c = 0; c < m.cols; ++c) m.at(rank, c) = f.mul(s, m.at(rank, c));
    for (size_t r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      uint8_t k = m.at(r, col);
      for (size_t c = 0; c < m.cols; ++c) m.at(r, c) = f.sub(m.at(r, c), f.mul(k, m.at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

Subspace Subspace::zero(const PrimeField& f, size_t ambient) {
  return Subspace(f, ambient, FpMat(0, ambient));
}

Subspace Subspace::full(const PrimeField& f, size_t ambient) {
  FpMat id(ambient, ambient);
  for (size_t i = 0; i < ambient; ++i) id.at(i, i) = 1;
  return Subspace(f, ambient, std::move(id));
}

Subspace Subspace::from_spanning(const PrimeField& f, size_t ambient,
                                 const std::vector<FpVec>& vecs) {
  for (const auto& v : vecs)
    require(v.size() == ambient, errc::invalid, "spanning vector dimension mismatch");
  FpMat m = FpMat::from_rows(vecs);
  m.cols = ambient;
  if (vecs.empty()) m = FpMat(0, ambient);
  size_t rank = rref(f, m);
  FpMat basis(rank, ambient);
  std::copy(m.a.begin(), m.a.begin() + rank * ambient, basis.a.begin());
  return Subspace(f, ambient, std::move(basis));
}

bool Subspace::contains(const FpVec& v) const {
  require(v.size() == ambient_, errc::invalid, "vector dimension mismatch");
  FpVec rem = v;
  for (size_t r = 0; r < basis_.rows; ++r) {
    size_t pc = 0;
    while (pc < ambient_ && basis_.at(r, pc) == 0) ++pc;
    if (pc == ambient_) continue;
    uint8_t c = rem[pc];
    if (c == 0) continue;
    for (size_t j = 0; j < ambient_; ++j) rem[j] = f_.sub(rem[j], f_.mul(c, basis_.at(r, j)));
  }
  return vec_is_zero(rem);
}

std::vector<FpVec> Subspace::elements() const {
  std::vector<FpVec> out;
  size_t k = dim();
  uint64_t total = 1;
  for (size_t i = 0; i < k; ++i) total *= f_.p();
  out.reserve(total);
  std::vector<uint8_t> coef(k, 0);
  for (uint64_t it = 0; it < total; ++it) {
    FpVec v(ambient_, 0);
    for (size_t r = 0; r < k; ++r)
      if (coef[r])
        for (size_t j = 0; j < ambient_; ++j)
          v[j] = f_.add(v[j], f_.mul(coef[r], basis_.at(r, j)));
    out.push_back(std::move(v));
    for (size_t r = 0; r < k; ++r) {
      if (++coef[r] < f_.p()) break;
      coef[r] = 0;
    }
  }
  return out;
}

bool Subspace::operator<(const Subspace& o) const {
  if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
  if (basis_.rows != o.basis_.rows) return basis_.rows < o.basis_.rows;
  return basis_.a < o.basis_.a;
}

std::string Subspace::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "span{";
  for (size_t r = 0; r < basis_.rows; ++r) {
    if (r) os << ", ";
    FpVec v = basis_.row(r);
    os << (names.empty() ? vec_to_string(v) : vec_to_combo(v, names));
  }
  os << "}";
  return os.str();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require(a.field() == b.field(), errc::invalid, "field mismatch");
  require(a.ambient() == b.ambient(), errc::invalid, "ambient dimension mismatch");
  const PrimeField& f = a.field();
  size_t n = a.ambient();
  // Zassenhaus block trick: rows [u|u] for u in A, [v|0] for v in B; after
  // elimination the rows with zero left half carry a basis of the
  // intersection in their right half.
  std::vector<FpVec> rows;
  for (size_t r = 0; r < a.dim(); ++r) {
    FpVec u = a.basis().row(r);
    FpVec w(2 * n, 0);
    std::copy(u.begin(), u.end(), w.begin());
    std::copy(u.begin(), u.end(), w.begin() + n);
    rows.push_back(std::move(w));
  }
  for (size_t r = 0; r < b.dim(); ++r) {
    FpVec v = b.basis().row(r);
    FpVec w(2 * n, 0);
    std::copy(v.begin(), v.end(), w.begin());
    rows.push_back(std::move(w));
  }
  FpMat m = FpMat::from_rows(rows);
  if (rows.empty()) m = FpMat(0, 2 * n);
  size_t rank = rref(f, m);
  std::vector<FpVec> inter;
  for (size_t r = 0; r < rank; ++r) {
    bool left_zero = true;
    for (size_t c = 0; c < n; ++c)
      if (m.at(r, c) != 0) {
        left_zero = false;
        break;
      }
    if (left_zero) {
      FpVec right(n);
      for (size_t c = 0; c < n; ++c) right[c] = m.at(r, n + c);
      inter.push_back(std::move(right));
    }
  }
  return Subspace::from_spanning(f, n, inter);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require(a.field() == b.field(), errc::invalid, "field mismatch");
  require(a.ambient() == b.ambient(), errc::invalid, "ambient dimension mismatch");
  std::vector<FpVec> rows;
  for (size_t r = 0; r < a.dim(); ++r) rows.push_back(a.basis().row(r));
  for (size_t r = 0; r < b.dim(); ++r) rows.push_back(b.basis().row(r));
  return Subspace::from_spanning(a.field(), a.ambient(), rows);
}

uint64_t subspace_count(const PrimeField& f, size_t n, size_t k) {
  if (k > n) return 0;
  // Gaussian binomial via the Pascal-style recurrence G(n,k) = G(n-1,k-1) + p^k G(n-1,k).
  std::vector<std::vector<unsigned __int128>> g(n + 1, std::vector<unsigned __int128>(k + 1, 0));
  for (size_t i = 0; i <= n; ++i) g[i][0] = 1;
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= k && j <= i; ++j) {
      unsigned __int128 pk = 1;
      for (size_t t = 0; t < j; ++t) pk *= f.p();
      g[i][j] = g[i - 1][j - 1] + pk * g[i - 1][j];
      require(g[i][j] < (static_cast<unsigned __int128>(1) << 63), errc::cap_exceeded,
              "subspace count overflows");
    }
  }
  return static_cast<uint64_t>(g[n][k]);
}

std::vector<Subspace> enumerate_subspaces(const PrimeField& f, size_t n, size_t k, uint64_t cap) {
  require(n <= 16, errc::invalid, "ambient dimension too large");
  if (k > n) return {};
  uint64_t count = subspace_count(f, n, k);
  require(count <= cap, errc::cap_exceeded, "subspace enumeration exceeds cap");
  std::vector<Subspace> out;
  out.reserve(count);
  if (k == 0) {
    out.push_back(Subspace::zero(f, n));
    return out;
  }
  // Pivot columns in lexicographic order; for each pattern fill the free
  // positions (right of the row's pivot, off the other pivot columns) with
  // every digit assignment.
  std::vector<size_t> piv(k);
  for (size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_piv(n, false);
    for (size_t c : piv) is_piv[c] = true;
    std::vector<std::pair<size_t, size_t>> free_pos;
    for (size_t r = 0; r < k; ++r)
      for (size_t c = piv[r] + 1; c < n; ++c)
        if (!is_piv[c]) free_pos.emplace_back(r, c);
    std::vector<uint8_t> digits(free_pos.size(), 0);
    while (true) {
      FpMat basis(k, n);
      for (size_t r = 0; r < k; ++r) basis.at(r, piv[r]) = 1;
      for (size_t i = 0; i < free_pos.size(); ++i)
        basis.at(free_pos[i].first, free_pos[i].second) = digits[i];
      out.push_back(Subspace(f, n, std::move(basis)));
      size_t d = 0;
      while (d < digits.size() && ++digits[d] == f.p()) digits[d++] = 0;
      if (d == digits.size()) break;
    }
    // next pivot combination
    size_t i = k;
    while (i > 0) {
      --i;
      if (piv[i] + (k - i) < n) {
        ++piv[i];
        for (size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        break;
      }
      if (i == 0) {
        require(out.size() == count, errc::internal, "subspace enumeration miscount");
        return out;
      }
    }
  }
}

std::string vec_to_string(const FpVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << static_cast<int>(v[i]);
  }
  os << ")";
  return os.str();
}

std::string vec_to_combo(const FpVec& v, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) os << " + ";
    if (v[i] != 1) os << static_cast<int>(v[i]);
    os << (i < names.size() ? names[i] : "e" + std::to_string(i));
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace gexp::fpla
