#include "troposign/quadratic.hpp"

#include "troposign/cones.hpp"

namespace troposign {

QuadSolution solve_quadratic(const QuadProblem& p) {
  const SignedMat& a = p.a;
  if (!is_signed_vec(p.b)) throw Error("solve_quadratic: b must be signed");
  if (!a.is_square() || a.rows() != p.b.size()) throw Error("solve_quadratic: dimension mismatch");
  if (!is_pd_signed(a).member) throw Error("solve_quadratic: A is not positive definite");
  const std::size_t n = a.rows();

  QuadSolution s;
  SignedTrop acc;
  s.xbar.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const SignedTrop inv = inverse(a(i, i));
    acc = oplus(acc, otimes(otimes(p.b[i], p.b[i]), inv));
    s.xbar[i] = ominus(otimes(inv, p.b[i]));
  }
  s.value = ominus(acc);

  s.det = det_signed(a);
  if (n == 1) {
    s.com_t_b = p.b;  // the 1×1 comatrix is not defined; (com A)ᵀ b reduces to b
  } else {
    s.com_t_b = multiply(transpose(comatrix(a)), p.b);
  }
  bool generic = is_signed(s.det) && !s.det.is_zero() && is_signed_vec(s.com_t_b);
  if (generic) {
    const SignedTrop scale = ominus(inverse(s.det));
    SignedVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = otimes(scale, s.com_t_b[i]);
    s.xstar = std::move(x);
  }
  return s;
}

CopositiveQp copositive_qp_value(const SignedMat& a) {
  const ConeVerdict v = is_copositive(a);
  if (v.member) return {SignedTrop::zero(), std::nullopt, SignedTrop::zero()};
  const auto& bad = std::get<ConeViolation>(v.certificate);
  const std::size_t n = a.rows();
  SignedVec x(n);
  if (bad.kind == ConeViolation::Kind::diagonal) {
    x[bad.i] = SignedTrop::one();
  } else {
    // Make the negative cross term x_i A_ij x_j dominate both diagonal terms.
    const std::size_t i = bad.i, j = bad.j;
    const Rational m = a(i, j).magnitude();
    const TropNum di = modulus(a(i, i)), dj = modulus(a(j, j));
    Rational xi = 0, xj = 0;
    if (di.is_finite() && dj.is_finite()) {
      xi = -di.value() / 2;
      xj = -dj.value() / 2;
    } else if (di.is_finite()) {
      xi = -di.value() / 2;
      xj = xi + di.value() - m + 1;
    } else if (dj.is_finite()) {
      xj = -dj.value() / 2;
      xi = xj + dj.value() - m + 1;
    }
    x[i] = SignedTrop::pos(xi);
    x[j] = SignedTrop::pos(xj);
  }
  SignedTrop value = quadratic_form(a, x);
  if (value.sign() != Sign::negative) throw Error("copositivity witness failed verification");
  return {SignedTrop::bot(), std::move(x), value};
}

}  // namespace troposign
