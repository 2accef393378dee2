#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "troposign/linalg.hpp"

namespace troposign {

// A failed inequality at (i, j). i == j marks a diagonal condition.
struct ConeViolation {
  enum class Kind { symmetry, diagonal, offdiagonal };
  Kind kind;
  std::size_t i;
  std::size_t j;
  std::string inequality;  // human-readable form of the failed condition
  SignedTrop lhs;
  SignedTrop rhs;
};

// Y with Y ⊙ Yᵀ = X.
struct GramFactor {
  TropMat y;
};

// X_ij = ⟨Yⁱ, Yʲ⟩ with every Yⁱ in PSD_k(𝕋).
struct CpsdFactor {
  std::vector<TropMat> blocks;
};

// Every 2×2 condition was checked and holds.
struct InequalitiesHold {
  std::size_t checked;
};

using Certificate = std::variant<ConeViolation, GramFactor, CpsdFactor, InequalitiesHold>;

struct ConeVerdict {
  bool member;
  Certificate certificate;
};

const char* kind_name(ConeViolation::Kind k);

ConeVerdict is_psd_signed(const SignedMat& a);
ConeVerdict is_pd_signed(const SignedMat& a);
ConeVerdict is_psd_trop(const TropMat& a);
ConeVerdict is_cp(const TropMat& x);
ConeVerdict is_cpsd(const TropMat& x);
ConeVerdict is_copositive(const SignedMat& a);

// n(n+1)/2 columns: singletons {i} first, then pairs {i,j} with i < j in
// lexicographic order.
TropMat cp_factorize(const TropMat& x);

enum class Cone { psd_trop, psd_signed, pd_signed, cp, cpsd, copositive };

const char* cone_name(Cone c);
Cone parse_cone(const std::string& name);  // "psd", "psd-signed", "pd", "cp", "cpsd", "copositive"

// Dispatch on a signed matrix; the tropical cones need Pos/Zero entries.
ConeVerdict check_cone(Cone cone, const SignedMat& a);
// Reads a Pos/Zero matrix as a tropical one.
TropMat as_trop(const SignedMat& a);

// Re-evaluates a violation against the matrix; true when it is a genuine failure.
bool violation_holds(Cone cone, const SignedMat& a, const ConeViolation& v);

}  // namespace troposign
