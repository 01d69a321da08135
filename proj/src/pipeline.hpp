#pragma once

#include <cstdint>
#include <string>

#include "report.hpp"

namespace gexp::pipeline {

// A single --cap value replaces every built-in work bound; 0 keeps defaults.
struct Caps {
  uint64_t enumeration = 1'000'000;    // subgroup closures, subspace lists, perm groups
  uint64_t abelian_rank = 10'000;      // tensor complex rank per degree
  uint64_t bar_size = 100'000;         // bar complex rank at the top degree
  uint64_t coset_degree = 10'000;      // permutation degree
  uint64_t dense_entries = 4'000'000;  // dense matrices handed to the Smith form
};

Caps make_caps(uint64_t cap);

struct VerifyOptions {
  uint32_t p = 3;
  uint64_t cap = 0;
  uint64_t seed = 0x00c0ffee5eedULL;
  unsigned threads = 1;
};

// The full verification pipeline: builds G from sl2 over F_p and checks the
// construction laws, the subgroup lattice facts, the witness family, the
// coset embedding and the wreath Sylow exponent, then assembles the verdict.
// p = 7 runs the construction-law subset only; 3 and 5 run everything.
report::Report verify_counterexample(const VerifyOptions& opt);

// group_spec: cyclic:M | abelian:D1,D2,... | table:FILE
report::Rendered run_cohomology(const std::string& group_spec, unsigned max_degree,
                                uint64_t cap);

// algebra_spec: sl2 | zero:N | FILE (structure-constant format); p applies to
// the two built-ins, a file carries its own.
report::Rendered run_group_info(const std::string& algebra_spec, uint32_t p,
                                unsigned threads, uint64_t cap);

// dim = -1 summarizes every dimension; otherwise lists that dimension.
report::Rendered run_subalgebras(const std::string& algebra_spec, uint32_t p, int dim,
                                 uint64_t cap);

report::Rendered run_snf(const std::string& matrix_path, uint64_t cap);

}  // namespace gexp::pipeline
