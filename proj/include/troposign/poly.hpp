#pragma once

#include <optional>
#include <string>
#include <vector>

#include "troposign/scalar.hpp"

namespace troposign {

// f = ⊕ₖ aₖ xᵏ with signed coefficients and a nonzero leading coefficient.
class SignedPoly {
 public:
  // Coefficients a₀..aₙ in increasing degree.
  explicit SignedPoly(std::vector<SignedTrop> coefficients);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const SignedTrop& coeff(std::size_t k) const { return coeffs_.at(k); }
  const std::vector<SignedTrop>& coefficients() const { return coeffs_; }
  const SignedTrop& leading() const { return coeffs_.back(); }

 private:
  std::vector<SignedTrop> coeffs_;
};

SignedTrop eval_poly(const SignedPoly& f, const SignedTrop& x);
// |f|(m) = maxₖ |aₖ| + k·m
TropNum eval_modulus(const SignedPoly& f, const TropNum& m);
// Moduli where at least two monomials of |f| attain the maximum, ascending.
std::vector<Rational> tie_points(const SignedPoly& f);
// Degrees whose monomials attain the maximum of |f| at |x|.
std::vector<std::size_t> dominant_degrees(const SignedPoly& f, const SignedTrop& x);
// Signed x with f(x) ∇ 𝟘, ascending in ⪯.
std::vector<SignedTrop> poly_roots(const SignedPoly& f);

enum class Attainment { attained_at, one_sided_limit_at, unbounded, at_zero };
enum class Side { left, right };

struct OptResult {
  SignedTrop value;  // Bot when unbounded
  Attainment attainment;
  std::optional<SignedTrop> point;  // the root α for one-sided limits
  std::optional<Side> side;

  // "unbounded", "attained at 𝟘", "limit at ⊖0", …
  std::string describe() const;
};

const char* attainment_name(Attainment a);
const char* side_name(Side s);

OptResult minimize_poly(const SignedPoly& f);

}  // namespace troposign
