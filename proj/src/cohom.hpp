#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snf.hpp"

namespace gexp::cohom {

using snf::Int;
using snf::SparseZMat;

// Multiplication table of a small finite group.  Element 0 is the identity;
// construction validates the full group axioms.
class GroupTable {
 public:
  static GroupTable cyclic(uint32_t m);
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
  // table is row major, order*order entries.
  static GroupTable from_table(std::vector<uint32_t> table);

  uint32_t order() const { return order_; }
  uint32_t mul(uint32_t a, uint32_t b) const { return t_[a * order_ + b]; }
  bool is_abelian() const;
  uint32_t element_order(uint32_t g) const;
  std::vector<uint32_t> order_multiset() const;

 private:
  GroupTable(uint32_t o, std::vector<uint32_t> t);
  void validate() const;

  uint32_t order_;
  std::vector<uint32_t> t_;
};

// Invariant factors d1 | d2 | ... | dk of an abelian group, recovered by
// matching element-order multisets across all candidate factor chains.
// Returns an empty list for the trivial group.
std::vector<uint32_t> abelian_invariant_factors(const GroupTable& g);

// A cochain complex of free abelian groups in degrees 0..top, stored as the
// ranks plus the differentials.  diff[n] maps degree n to degree n+1 and has
// ranks[n+1] rows and ranks[n] columns.
struct CochainComplex {
  std::string desc;
  std::vector<size_t> ranks;
  std::vector<SparseZMat> diff;
};

// Rank one in every degree, differentials alternating 0 and m.  Computes the
// integral cohomology of a cyclic group of order m through max_degree.
CochainComplex periodic_cochain(uint32_t m, unsigned max_degree);

// Tensor product of periodic complexes, one per invariant factor.  Computes
// the integral cohomology of the corresponding abelian group.
CochainComplex abelian_cochain(const std::vector<uint32_t>& factors, unsigned max_degree,
                               size_t rank_cap);

// Normalized inhomogeneous cochains on an arbitrary small group with integer
// coefficients and trivial action.  Degree n has rank (order-1)^n.
CochainComplex bar_cochain(const GroupTable& g, unsigned max_degree, size_t size_cap);

// Checks that consecutive differentials compose to zero.
bool complex_is_valid(const CochainComplex& c);

struct DegreeCohomology {
  size_t free_rank = 0;
  std::vector<Int> divisors;  // torsion coefficients, each dividing the next
  Int exponent = 1;           // lcm of the divisors
};

struct CohomologyReport {
  std::string desc;
  unsigned max_degree = 0;
  std::vector<DegreeCohomology> degrees;  // indexed by degree, 0..max_degree
  Int exponent_lcm = 1;                   // lcm over degrees 1..max_degree
};

// Cohomology of the complex in degrees 0..max_degree, where max_degree is
// ranks.size() - 2.  Torsion comes from the Smith form of each incoming
// differential, free ranks from kernel minus image dimensions.
CohomologyReport cohomology(const CochainComplex& c, size_t dense_entry_cap);

}  // namespace gexp::cohom
