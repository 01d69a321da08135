#include "snf.hpp"

#include <algorithm>
#include <boost/integer/extended_euclidean.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>

namespace gexp::snf {

using boost::multiprecision::abs;

ZMat::ZMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

ZMat ZMat::identity(size_t n) {
  ZMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMat ZMat::from_rows(const std::vector<std::vector<Int>>& rows) {
  size_t r = rows.size();
  size_t c = r ? rows[0].size() : 0;
  ZMat m(r, c);
  for (size_t i = 0; i < r; ++i) {
    require(rows[i].size() == c, errc::invalid, "ragged matrix rows");
    for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

ZMat matmul(const ZMat& A, const ZMat& B) {
  require(A.cols() == B.rows(), errc::internal, "matmul shape mismatch");
  ZMat C(A.rows(), B.cols());
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t k = 0; k < A.cols(); ++k) {
      const Int& a = A.at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < B.cols(); ++j) {
        const Int& b = B.at(k, j);
        if (b != 0) C.at(i, j) += a * b;
      }
    }
  return C;
}

size_t SparseZMat::nnz() const {
  size_t n = 0;
  for (const auto& r : row_) n += r.size();
  return n;
}

void SparseZMat::set_row(size_t i, std::vector<std::pair<uint32_t, Int>> entries) {
  require(i < rows_, errc::internal, "sparse row index out of range");
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<uint32_t, Int>> clean;
  for (auto& e : entries) {
    require(e.first < cols_, errc::internal, "sparse column index out of range");
    if (!clean.empty() && clean.back().first == e.first)
      clean.back().second += e.second;
    else
      clean.push_back(std::move(e));
    if (!clean.empty() && clean.back().second == 0) clean.pop_back();
  }
  row_[i] = std::move(clean);
}

ZMat SparseZMat::to_dense(size_t entry_cap) const {
  require(rows_ == 0 || cols_ == 0 || rows_ <= entry_cap / cols_, errc::cap_exceeded,
          "dense matrix would exceed the entry cap");
  ZMat m(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (const auto& [j, v] : row_[i]) m.at(i, j) = v;
  return m;
}

bool product_is_zero(const SparseZMat& A, const SparseZMat& B) {
  require(A.cols() == B.rows(), errc::internal, "matmul shape mismatch");
  for (size_t i = 0; i < A.rows(); ++i) {
    std::map<uint32_t, Int> acc;
    for (const auto& [k, a] : A.row(i))
      for (const auto& [j, b] : B.row(k)) acc[j] += a * b;
    for (const auto& [j, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

namespace {

using Rat = boost::multiprecision::cpp_rational;
using QRow = std::vector<std::pair<uint32_t, Rat>>;

// dst -= coeff * src, both sorted by column.
QRow row_axpy(const QRow& dst, const QRow& src, const Rat& coeff) {
  QRow out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -coeff * src[j].second);
      ++j;
    } else {
      Rat v = dst[i].second - coeff * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace

size_t zrank(const SparseZMat& A) {
  std::vector<QRow> rows;
  for (size_t i = 0; i < A.rows(); ++i) {
    if (A.row(i).empty()) continue;
    QRow r;
    r.reserve(A.row(i).size());
    for (const auto& [j, v] : A.row(i)) r.emplace_back(j, Rat(v));
    rows.push_back(std::move(r));
  }
  size_t rank = 0;
  while (!rows.empty()) {
    size_t best = 0;
    for (size_t i = 1; i < rows.size(); ++i)
      if (rows[i].size() < rows[best].size()) best = i;
    QRow pivot = std::move(rows[best]);
    rows.erase(rows.begin() + static_cast<ptrdiff_t>(best));
    ++rank;
    uint32_t pc = pivot[0].first;
    const Rat& pv = pivot[0].second;
    std::vector<QRow> next;
    next.reserve(rows.size());
    for (auto& r : rows) {
      auto it = std::lower_bound(r.begin(), r.end(), pc, [](const auto& e, uint32_t c) {
        return e.first < c;
      });
      if (it == r.end() || it->first != pc) {
        next.push_back(std::move(r));
        continue;
      }
      QRow reduced = row_axpy(r, pivot, it->second / pv);
      if (!reduced.empty()) next.push_back(std::move(reduced));
    }
    rows = std::move(next);
  }
  return rank;
}

SnfResult smith_normal_form(ZMat A, bool want_uv) {
  const size_t m = A.rows(), n = A.cols();
  const ZMat orig = want_uv ? A : ZMat();
  SnfResult res;
  res.have_uv = want_uv;
  if (want_uv) {
    res.U = ZMat::identity(m);
    res.V = ZMat::identity(n);
  }

  auto swap_rows = [&](size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < n; ++k) std::swap(A.at(i, k), A.at(j, k));
    if (want_uv)
      for (size_t k = 0; k < m; ++k) std::swap(res.U.at(i, k), res.U.at(j, k));
  };
  auto swap_cols = [&](size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < m; ++k) std::swap(A.at(k, i), A.at(k, j));
    if (want_uv)
      for (size_t k = 0; k < n; ++k) std::swap(res.V.at(k, i), res.V.at(k, j));
  };
  // row dst -= q * row src
  auto row_op = [&](size_t dst, size_t src, const Int& q) {
    for (size_t k = 0; k < n; ++k) A.at(dst, k) -= q * A.at(src, k);
    if (want_uv)
      for (size_t k = 0; k < m; ++k) res.U.at(dst, k) -= q * res.U.at(src, k);
  };
  auto col_op = [&](size_t dst, size_t src, const Int& q) {
    for (size_t k = 0; k < m; ++k) A.at(k, dst) -= q * A.at(k, src);
    if (want_uv)
      for (size_t k = 0; k < n; ++k) res.V.at(k, dst) -= q * res.V.at(k, src);
  };
  // (row a, row b) <- (x*row a + y*row b, u*row b - v*row a), with x*u + y*v = 1
  auto row_mix = [&](size_t a, size_t b, const Int& x, const Int& y, const Int& u,
                     const Int& v) {
    for (size_t k = 0; k < n; ++k) {
      Int ra = x * A.at(a, k) + y * A.at(b, k);
      Int rb = u * A.at(b, k) - v * A.at(a, k);
      A.at(a, k) = std::move(ra);
      A.at(b, k) = std::move(rb);
    }
    if (want_uv)
      for (size_t k = 0; k < m; ++k) {
        Int ra = x * res.U.at(a, k) + y * res.U.at(b, k);
        Int rb = u * res.U.at(b, k) - v * res.U.at(a, k);
        res.U.at(a, k) = std::move(ra);
        res.U.at(b, k) = std::move(rb);
      }
  };
  auto col_mix = [&](size_t a, size_t b, const Int& x, const Int& y, const Int& u,
                     const Int& v) {
    for (size_t k = 0; k < m; ++k) {
      Int ca = x * A.at(k, a) + y * A.at(k, b);
      Int cb = u * A.at(k, b) - v * A.at(k, a);
      A.at(k, a) = std::move(ca);
      A.at(k, b) = std::move(cb);
    }
    if (want_uv)
      for (size_t k = 0; k < n; ++k) {
        Int ca = x * res.V.at(k, a) + y * res.V.at(k, b);
        Int cb = u * res.V.at(k, b) - v * res.V.at(k, a);
        res.V.at(k, a) = std::move(ca);
        res.V.at(k, b) = std::move(cb);
      }
  };
  // g = x*d + y*e with g = gcd(d, e) > 0; d, e nonzero
  auto bezout = [](const Int& d, const Int& e) {
    auto r = boost::integer::extended_euclidean(Int(abs(d)), Int(abs(e)));
    if (d < 0) r.x = -r.x;
    if (e < 0) r.y = -r.y;
    return r;
  };

  size_t t = 0;
  while (t < m && t < n) {
    size_t pi = t, pj = t;
    bool found = false;
    Int best;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j) {
        const Int& v = A.at(i, j);
        if (v == 0) continue;
        Int a = abs(v);
        if (!found || a < best) {
          found = true;
          best = std::move(a);
          pi = i, pj = j;
        }
      }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    // Each non-exact clearing replaces the pivot with a proper divisor, so the
    // pivot magnitude at least halves; a pass with only exact quotients leaves
    // nothing dirty and the loop exits.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (A.at(i, t) == 0) continue;
        Int e = A.at(i, t), d = A.at(t, t);
        if (e % d == 0) {
          row_op(i, t, e / d);
        } else {
          auto bz = bezout(d, e);
          row_mix(t, i, bz.x, bz.y, d / bz.gcd, e / bz.gcd);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (A.at(t, j) == 0) continue;
        Int e = A.at(t, j), d = A.at(t, t);
        if (e % d == 0) {
          col_op(j, t, e / d);
        } else {
          auto bz = bezout(d, e);
          col_mix(t, j, bz.x, bz.y, d / bz.gcd, e / bz.gcd);
          clean = false;
        }
      }
    }

    bool divides_rest = true;
    for (size_t i = t + 1; i < m && divides_rest; ++i)
      for (size_t j = t + 1; j < n; ++j)
        if (A.at(i, j) % A.at(t, t) != 0) {
          // fold the offending row into the pivot row and redo this step
          row_op(t, i, Int(-1));
          divides_rest = false;
          break;
        }
    if (!divides_rest) continue;

    if (A.at(t, t) < 0) {
      for (size_t k = 0; k < n; ++k) A.at(t, k) = -A.at(t, k);
      if (want_uv)
        for (size_t k = 0; k < m; ++k) res.U.at(t, k) = -res.U.at(t, k);
    }
    ++t;
  }

  res.rank = t;
  res.diag.reserve(t);
  for (size_t i = 0; i < t; ++i) res.diag.push_back(A.at(i, i));
  for (size_t i = 1; i < res.diag.size(); ++i)
    require(res.diag[i] % res.diag[i - 1] == 0, errc::internal,
            "Smith diagonal lost the divisibility chain");

  if (want_uv) {
    ZMat D(m, n);
    for (size_t i = 0; i < t; ++i) D.at(i, i) = res.diag[i];
    require(matmul(matmul(res.U, orig), res.V) == D, errc::internal,
            "Smith decomposition failed to recompose");
  }
  return res;
}

std::vector<Int> nontrivial_divisors(const SnfResult& s) {
  std::vector<Int> out;
  for (const Int& d : s.diag)
    if (d > 1) out.push_back(d);
  return out;
}

Int det_bareiss(ZMat A) {
  require(A.rows() == A.cols(), errc::invalid, "determinant of a non-square matrix");
  size_t n = A.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (A.at(k, k) == 0) {
      size_t s = k + 1;
      while (s < n && A.at(s, k) == 0) ++s;
      if (s == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(s, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        A.at(i, j) = (A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j)) / prev;
    prev = A.at(k, k);
  }
  return sign < 0 ? Int(-A.at(n - 1, n - 1)) : A.at(n - 1, n - 1);
}

}  // namespace gexp::snf
