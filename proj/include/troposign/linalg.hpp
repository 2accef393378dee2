#pragma once

#include <cstddef>
#include <vector>

#include "troposign/matrix.hpp"

namespace troposign {

using IndexSet = std::vector<std::size_t>;  // 0-based, ascending

TropNum dot_trop(const TropVec& x, const TropVec& y);
// ⟨x⁺,a⟩ ⊖ ⟨x⁻,a⟩; x must be signed.
SignedTrop dot_signed(const SignedVec& x, const TropVec& a);
SignedTrop frobenius(const SignedMat& x, const SignedMat& y);
TropNum frobenius(const TropMat& x, const TropMat& y);

IndexSet support(const TropVec& z);
TropVec restrict_to(const TropVec& z, const IndexSet& idx);
TropVec restrict_complement(const TropVec& z, const IndexSet& idx);

bool is_signed_vec(const SignedVec& x);
bool is_signed_mat(const SignedMat& a);
TropVec positive_part(const SignedVec& x);
TropVec negative_part(const SignedVec& x);
// x⁺ ⊖ x⁻; entries where both parts are finite come out balanced.
SignedVec combine_parts(const TropVec& plus, const TropVec& minus);
SignedVec embed_positive(const TropVec& x);
SignedMat embed_positive(const TropMat& x);

template <class T>
bool is_symmetric(const Matrix<T>& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (!(a(i, j) == a(j, i))) return false;
  return true;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

SignedMat identity_signed(std::size_t n);
SignedMat multiply(const SignedMat& a, const SignedMat& b);
TropMat multiply(const TropMat& a, const TropMat& b);
SignedVec multiply(const SignedMat& a, const SignedVec& x);
SignedMat oplus(const SignedMat& a, const SignedMat& b);
SignedTrop quadratic_form(const SignedMat& a, const SignedVec& x);

// Signed permutation expansion; O(n·n!), limited to n ≤ 8.
SignedTrop det_signed(const SignedMat& a);
SignedMat minor_matrix(const SignedMat& a, std::size_t row, std::size_t col);
SignedMat comatrix(const SignedMat& a);
// I ⊕ C ⊕ … ⊕ C^{n−1}
SignedMat kleene_star(const SignedMat& c);

inline constexpr std::size_t kMaxDetDimension = 8;

}  // namespace troposign
