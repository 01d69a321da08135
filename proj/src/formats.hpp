#pragma once

#include <string>
#include <vector>

#include "bracket.hpp"
#include "cohom.hpp"
#include "snf.hpp"

namespace gexp::formats {

// Structure-constant file:
//   p <odd prime>
//   dim <n>
//   names <n identifiers>            (optional)
//   bracket <i> <j> -> <c0> ... <c(n-1)>
// one directive per line, '#' starts a comment, pairs not listed are zero,
// entries may be negative and are reduced mod p, only i < j pairs allowed.
bracket::BracketAlgebra parse_algebra_text(const std::string& text);

// Group table file: the order n followed by n*n products row major, with
// element 0 the identity.  '#' starts a comment.
cohom::GroupTable parse_group_table(const std::string& text);

// Integer matrix file: rows cols, then the entries row major, decimal with
// optional sign.  '#' starts a comment.
snf::ZMat parse_matrix_text(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace gexp::formats
