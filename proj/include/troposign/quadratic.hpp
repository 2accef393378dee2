#pragma once

#include <optional>

#include "troposign/linalg.hpp"

namespace troposign {

struct QuadProblem {
  SignedMat a;
  SignedVec b;
};

struct QuadSolution {
  SignedTrop value;  // ⊖ bᵀ diag(A)⁻¹ b
  SignedVec xbar;    // ⊖ diag(A)⁻¹ b
  SignedTrop det;
  SignedVec com_t_b;                // (com A)ᵀ b
  std::optional<SignedVec> xstar;   // ⊖ (det A)⁻¹ (com A)ᵀ b when generic
};

// Minimizes xᵀAx ⊕ bᵀx over signed x for A positive definite.
QuadSolution solve_quadratic(const QuadProblem& p);

struct CopositiveQp {
  SignedTrop value;                  // Zero or Bot
  std::optional<SignedVec> witness;  // x ⪰ 𝟘 with xᵀAx signed negative
  SignedTrop witness_value;
};

CopositiveQp copositive_qp_value(const SignedMat& a);

}  // namespace troposign
