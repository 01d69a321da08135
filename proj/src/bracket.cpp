#include "bracket.hpp"

namespace gexp::bracket {

BracketAlgebra::BracketAlgebra(const fpla::PrimeField& f, uint32_t dim,
                               std::vector<std::string> names)
    : f_(f), dim_(dim), names_(std::move(names)),
      table_(static_cast<size_t>(dim) * dim * dim, 0) {
  require(dim >= 1 && dim <= 16, errc::invalid, "algebra dimension out of range");
  require(names_.size() == dim, errc::invalid, "need one label per basis element");
}

BracketAlgebra BracketAlgebra::zero(const fpla::PrimeField& f, uint32_t dim) {
  std::vector<std::string> names;
  for (uint32_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
  return BracketAlgebra(f, dim, std::move(names));
}

BracketAlgebra BracketAlgebra::zero(const fpla::PrimeField& f, uint32_t dim,
                                    std::vector<std::string> names) {
  return BracketAlgebra(f, dim, std::move(names));
}

BracketAlgebra BracketAlgebra::sl2(const fpla::PrimeField& f) {
  BracketAlgebra b(f, 3, {"h", "x+", "x-"});
  b.set_bracket_pair(0, 1, {0, 2, 0});
  b.set_bracket_pair(0, 2, {0, 0, -2});
  b.set_bracket_pair(1, 2, {1, 0, 0});
  return b;
}

void BracketAlgebra::set_bracket_pair(uint32_t i, uint32_t j, const std::vector<long long>& v) {
  require(i != j, errc::invalid, "diagonal brackets are fixed at zero");
  set_bracket_raw(i, j, v);
  std::vector<long long> nv(v.size());
  for (size_t t = 0; t < v.size(); ++t) nv[t] = -v[t];
  set_bracket_raw(j, i, nv);
}

void BracketAlgebra::set_bracket_raw(uint32_t i, uint32_t j, const std::vector<long long>& v) {
  require(i < dim_ && j < dim_, errc::invalid, "basis index out of range");
  require(v.size() == dim_, errc::invalid, "structure row dimension mismatch");
  for (uint32_t t = 0; t < dim_; ++t) table_[(i * dim_ + j) * dim_ + t] = f_.reduce(v[t]);
}

fpla::FpVec BracketAlgebra::bracket_basis(uint32_t i, uint32_t j) const {
  require(i < dim_ && j < dim_, errc::invalid, "basis index out of range");
  fpla::FpVec r(dim_);
  for (uint32_t t = 0; t < dim_; ++t) r[t] = tab(i, j, t);
  return r;
}

fpla::FpVec BracketAlgebra::bracket(const fpla::FpVec& u, const fpla::FpVec& v) const {
  require(u.size() == dim_ && v.size() == dim_, errc::invalid, "vector dimension mismatch");
  fpla::FpVec r(dim_, 0);
  for (uint32_t i = 0; i < dim_; ++i) {
    if (u[i] == 0) continue;
    for (uint32_t j = 0; j < dim_; ++j) {
      if (v[j] == 0) continue;
      uint8_t c = f_.mul(u[i], v[j]);
      for (uint32_t t = 0; t < dim_; ++t)
        r[t] = f_.add(r[t], f_.mul(c, tab(i, j, t)));
    }
  }
  return r;
}

AlgebraChecks BracketAlgebra::validate() const {
  AlgebraChecks out;
  out.alternating = true;
  for (uint32_t i = 0; i < dim_ && out.alternating; ++i)
    for (uint32_t t = 0; t < dim_; ++t)
      if (tab(i, i, t) != 0) {
        out.alternating = false;
        break;
      }
  for (uint32_t i = 0; i < dim_ && out.alternating; ++i)
    for (uint32_t j = 0; j < dim_ && out.alternating; ++j)
      for (uint32_t t = 0; t < dim_; ++t)
        if (tab(j, i, t) != f_.neg(tab(i, j, t))) {
          out.alternating = false;
          break;
        }
  out.jacobi = true;
  for (uint32_t i = 0; i < dim_ && out.jacobi; ++i)
    for (uint32_t j = 0; j < dim_ && out.jacobi; ++j)
      for (uint32_t k = 0; k < dim_; ++k) {
        // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
        fpla::FpVec ei(dim_, 0), ej(dim_, 0), ek(dim_, 0);
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        fpla::FpVec acc = bracket(ei, bracket_basis(j, k));
        acc = fpla::vec_add(f_, acc, bracket(ej, bracket_basis(k, i)));
        acc = fpla::vec_add(f_, acc, bracket(ek, bracket_basis(i, j)));
        if (!fpla::vec_is_zero(acc)) {
          out.jacobi = false;
          break;
        }
      }
  return out;
}

bool BracketAlgebra::is_subalgebra(const fpla::Subspace& s) const {
  require(s.ambient() == dim_, errc::invalid, "subspace ambient dimension mismatch");
  require(s.field() == f_, errc::invalid, "field mismatch");
  for (size_t i = 0; i < s.dim(); ++i)
    for (size_t j = 0; j < s.dim(); ++j) {
      fpla::FpVec br = bracket(s.basis().row(i), s.basis().row(j));
      if (!s.contains(br)) return false;
    }
  return true;
}

std::vector<fpla::Subspace> BracketAlgebra::subalgebras_of_dim(uint32_t k, uint64_t cap) const {
  std::vector<fpla::Subspace> out;
  for (const auto& s : fpla::enumerate_subspaces(f_, dim_, k, cap))
    if (is_subalgebra(s)) out.push_back(s);
  return out;
}

fpla::Subspace common_intersection(const std::vector<fpla::Subspace>& spaces) {
  require(!spaces.empty(), errc::invalid, "common_intersection needs at least one subspace");
  fpla::Subspace acc = spaces[0];
  for (size_t i = 1; i < spaces.size(); ++i) acc = fpla::intersect(acc, spaces[i]);
  return acc;
}

}  // namespace gexp::bracket
