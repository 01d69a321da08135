#pragma once

#include <string>
#include <vector>

#include "fpla.hpp"

namespace gexp::bracket {

struct AlgebraChecks {
  bool alternating = false;  // c[i][i] = 0 and c[j][i] = -c[i][j]
  bool jacobi = false;       // reported, not required by the group construction
};

// Finite-dimensional algebra over F_p given by a structure-constant table:
// [e_i, e_j] = sum_t table[i][j][t] e_t. Entries are stored reduced mod p.
class BracketAlgebra {
 public:
  static BracketAlgebra zero(const fpla::PrimeField& f, uint32_t dim);
  static BracketAlgebra zero(const fpla::PrimeField& f, uint32_t dim,
                             std::vector<std::string> names);
  // Basis (h, x+, x-) with [h,x+] = 2x+, [h,x-] = -2x-, [x+,x-] = h.
  static BracketAlgebra sl2(const fpla::PrimeField& f);

  // Sets [e_i, e_j] = v and [e_j, e_i] = -v; signed entries are reduced mod p.
  void set_bracket_pair(uint32_t i, uint32_t j, const std::vector<long long>& v);
  // Sets only [e_i, e_j]; lets tests build tables that fail validation.
  void set_bracket_raw(uint32_t i, uint32_t j, const std::vector<long long>& v);

  const fpla::PrimeField& field() const { return f_; }
  uint32_t dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }

  fpla::FpVec bracket_basis(uint32_t i, uint32_t j) const;
  // Bilinear extension of the table.
  fpla::FpVec bracket(const fpla::FpVec& u, const fpla::FpVec& v) const;

  AlgebraChecks validate() const;

  // Basis-pair condition; sufficient by bilinearity once the table is alternating.
  bool is_subalgebra(const fpla::Subspace& s) const;
  std::vector<fpla::Subspace> subalgebras_of_dim(uint32_t k, uint64_t cap) const;

 private:
  BracketAlgebra(const fpla::PrimeField& f, uint32_t dim, std::vector<std::string> names);
  uint8_t tab(uint32_t i, uint32_t j, uint32_t t) const { return table_[(i * dim_ + j) * dim_ + t]; }

  fpla::PrimeField f_;
  uint32_t dim_;
  std::vector<std::string> names_;
  std::vector<uint8_t> table_;
};

// Intersection of a nonempty list of subspaces of a common ambient space.
fpla::Subspace common_intersection(const std::vector<fpla::Subspace>& spaces);

}  // namespace gexp::bracket
