#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace gexp::fpla {

bool is_prime(uint32_t n);

// Prime field F_p for an odd prime p <= 251; residues fit a byte.
class PrimeField {
 public:
  static PrimeField make(uint32_t p);

  uint32_t p() const { return p_; }
  uint8_t reduce(long long x) const {
    long long r = x % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<uint8_t>(r);
  }
  uint8_t add(uint8_t a, uint8_t b) const {
    uint32_t s = static_cast<uint32_t>(a) + b;
    return static_cast<uint8_t>(s >= p_ ? s - p_ : s);
  }
  uint8_t sub(uint8_t a, uint8_t b) const {
    int32_t s = static_cast<int32_t>(a) - b;
    return static_cast<uint8_t>(s < 0 ? s + static_cast<int32_t>(p_) : s);
  }
  uint8_t mul(uint8_t a, uint8_t b) const {
    return static_cast<uint8_t>(static_cast<uint32_t>(a) * b % p_);
  }
  uint8_t neg(uint8_t a) const { return a == 0 ? 0 : static_cast<uint8_t>(p_ - a); }
  uint8_t inv(uint8_t a) const {
    require(a != 0, errc::invalid, "inverse of zero in F_p");
    return inv_[a];
  }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  explicit PrimeField(uint32_t p);
  uint32_t p_;
  std::vector<uint8_t> inv_;
};

// Digit vector over F_p; the field travels alongside in the enclosing object
// or as an explicit argument.
using FpVec = std::vector<uint8_t>;

FpVec vec_add(const PrimeField& f, const FpVec& a, const FpVec& b);
FpVec vec_sub(const PrimeField& f, const FpVec& a, const FpVec& b);
FpVec vec_scale(const PrimeField& f, uint8_t c, const FpVec& a);
bool vec_is_zero(const FpVec& a);

// Dense row-major matrix over F_p.
struct FpMat {
  size_t rows = 0, cols = 0;
  std::vector<uint8_t> a;

  FpMat() = default;
  FpMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
  uint8_t& at(size_t r, size_t c) { return a[r * cols + c]; }
  uint8_t at(size_t r, size_t c) const { return a[r * cols + c]; }
  FpVec row(size_t r) const { return FpVec(a.begin() + r * cols, a.begin() + (r + 1) * cols); }
  static FpMat from_rows(const std::vector<FpVec>& rows_in);
  bool operator==(const FpMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Gauss-Jordan to reduced row echelon form, in place; returns the rank.
size_t rref(const PrimeField& f, FpMat& m);

// Linear subspace of F_p^n held in canonical RREF form, so two values are
// equal as sets precisely when their representations are equal.
class Subspace {
 public:
  static Subspace zero(const PrimeField& f, size_t ambient);
  static Subspace full(const PrimeField& f, size_t ambient);
  static Subspace from_spanning(const PrimeField& f, size_t ambient, const std::vector<FpVec>& vecs);

  const PrimeField& field() const { return f_; }
  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.rows; }
  const FpMat& basis() const { return basis_; }
  bool contains(const FpVec& v) const;
  // All p^dim member vectors, in lexicographic coefficient order.
  std::vector<FpVec> elements() const;
  std::string to_string(const std::vector<std::string>& names = {}) const;

  bool operator==(const Subspace& o) const {
    return f_ == o.f_ && ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const;  // total order for deterministic sorting

 private:
  Subspace(const PrimeField& f, size_t ambient, FpMat rref_basis)
      : f_(f), ambient_(ambient), basis_(std::move(rref_basis)) {}
  friend std::vector<Subspace> enumerate_subspaces(const PrimeField&, size_t, size_t, uint64_t);

  PrimeField f_;
  size_t ambient_;
  FpMat basis_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Number of k-dimensional subspaces of F_p^n (Gaussian binomial).
uint64_t subspace_count(const PrimeField& f, size_t n, size_t k);

// All k-dimensional subspaces of F_p^n, one RREF basis per pivot-column
// pattern and free-entry assignment, so the list is duplicate-free by
// construction. Deterministic order; errors out when the count exceeds cap.
std::vector<Subspace> enumerate_subspaces(const PrimeField& f, size_t n, size_t k, uint64_t cap);

std::string vec_to_string(const FpVec& v);
std::string vec_to_combo(const FpVec& v, const std::vector<std::string>& names);

}  // namespace gexp::fpla
