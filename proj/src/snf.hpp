#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "error.hpp"

namespace gexp::snf {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row major.
class ZMat {
 public:
  ZMat() = default;
  ZMat(size_t rows, size_t cols);
  static ZMat identity(size_t n);
  static ZMat from_rows(const std::vector<std::vector<Int>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const ZMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

ZMat matmul(const ZMat& A, const ZMat& B);

// Sparse integer matrix: each row holds (col, value) pairs sorted by column,
// values nonzero.
class SparseZMat {
 public:
  SparseZMat() = default;
  SparseZMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), row_(rows) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const std::vector<std::pair<uint32_t, Int>>& row(size_t i) const { return row_[i]; }
  size_t nnz() const;

  // Appends entries of one row given as an accumulation map; drops zeros and
  // keeps columns sorted.  Rows must be set in order exactly once.
  void set_row(size_t i, std::vector<std::pair<uint32_t, Int>> entries);

  ZMat to_dense(size_t entry_cap) const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<std::pair<uint32_t, Int>>> row_;
};

// True when A*B is the zero matrix.
bool product_is_zero(const SparseZMat& A, const SparseZMat& B);

// Rank over the rationals, sparse elimination.
size_t zrank(const SparseZMat& A);

struct SnfResult {
  std::vector<Int> diag;  // nonzero diagonal of the Smith form, divisibility chain
  size_t rank = 0;        // == diag.size()
  bool have_uv = false;
  ZMat U, V;              // when tracked: U * A * V == diag(d1..dr, 0...)
};

// Smith normal form of a dense integer matrix.  With want_uv the unimodular
// transforms are tracked and the decomposition is re-multiplied and checked
// before returning.
SnfResult smith_normal_form(ZMat A, bool want_uv = false);

// Diagonal entries larger than 1.
std::vector<Int> nontrivial_divisors(const SnfResult& s);

// Fraction-free determinant, for cross checks against the Smith form.
Int det_bareiss(ZMat A);

}  // namespace gexp::snf
