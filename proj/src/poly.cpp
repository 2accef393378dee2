#include "troposign/poly.hpp"

#include <algorithm>

namespace troposign {

SignedPoly::SignedPoly(std::vector<SignedTrop> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw Error("polynomial needs at least one coefficient");
  for (const auto& c : coeffs_)
    if (!is_signed(c)) throw Error("polynomial coefficients must be signed, got " + to_string(c));
  if (coeffs_.back().is_zero()) throw Error("leading coefficient must be nonzero");
}

SignedTrop eval_poly(const SignedPoly& f, const SignedTrop& x) {
  if (!is_signed(x)) throw Error("eval_poly: argument must be signed, got " + to_string(x));
  SignedTrop acc;
  SignedTrop xk = SignedTrop::one();
  for (std::size_t k = 0; k <= f.degree(); ++k) {
    acc = oplus(acc, otimes(f.coeff(k), xk));
    xk = otimes(xk, x);
  }
  return acc;
}

TropNum eval_modulus(const SignedPoly& f, const TropNum& m) {
  TropNum acc;
  for (std::size_t k = 0; k <= f.degree(); ++k) {
    TropNum term = modulus(f.coeff(k));
    if (term.is_neg_inf()) continue;
    if (k > 0) term = otimes(term, m.is_neg_inf() ? m : TropNum(Rational(m.value() * static_cast<long>(k))));
    acc = oplus(acc, term);
  }
  return acc;
}

std::vector<Rational> tie_points(const SignedPoly& f) {
  std::vector<std::size_t> live;
  for (std::size_t k = 0; k <= f.degree(); ++k)
    if (!f.coeff(k).is_zero()) live.push_back(k);
  std::vector<Rational> ties;
  for (std::size_t a = 0; a < live.size(); ++a)
    for (std::size_t b = a + 1; b < live.size(); ++b) {
      const std::size_t k = live[a], l = live[b];
      Rational m = (f.coeff(k).magnitude() - f.coeff(l).magnitude()) / static_cast<long>(l - k);
      const TropNum top = eval_modulus(f, TropNum(m));
      const Rational at_k = f.coeff(k).magnitude() + m * static_cast<long>(k);
      if (top.value() == at_k) ties.push_back(m);
    }
  std::sort(ties.begin(), ties.end());
  ties.erase(std::unique(ties.begin(), ties.end()), ties.end());
  return ties;
}

std::vector<std::size_t> dominant_degrees(const SignedPoly& f, const SignedTrop& x) {
  const TropNum m = modulus(x);
  const TropNum top = eval_modulus(f, m);
  std::vector<std::size_t> out;
  if (top.is_neg_inf()) return out;
  for (std::size_t k = 0; k <= f.degree(); ++k) {
    if (f.coeff(k).is_zero()) continue;
    if (modulus(otimes(f.coeff(k), power(x, static_cast<unsigned>(k)))) == top) out.push_back(k);
  }
  return out;
}

std::vector<SignedTrop> poly_roots(const SignedPoly& f) {
  const SignedTrop zero;
  std::vector<SignedTrop> roots;
  if (f.coeff(0).is_zero()) roots.push_back(zero);
  for (const Rational& m : tie_points(f)) {
    for (SignedTrop x : {SignedTrop::pos(m), SignedTrop::neg(m)})
      if (balances(eval_poly(f, x), zero)) roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end(), [](const SignedTrop& a, const SignedTrop& b) { return lt(a, b); });
  return roots;
}

const char* attainment_name(Attainment a) {
  switch (a) {
    case Attainment::attained_at: return "attained_at";
    case Attainment::one_sided_limit_at: return "one_sided_limit_at";
    case Attainment::unbounded: return "unbounded";
    case Attainment::at_zero: return "at_zero";
  }
  return "?";
}

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

std::string OptResult::describe() const {
  switch (attainment) {
    case Attainment::unbounded: return "unbounded";
    case Attainment::at_zero: return "attained at 𝟘";
    case Attainment::attained_at: return "attained at " + to_string(*point);
    case Attainment::one_sided_limit_at: return "limit at " + to_string(*point);
  }
  return "?";
}

OptResult minimize_poly(const SignedPoly& f) {
  const std::size_t n = f.degree();
  if (n == 0) return {f.coeff(0), Attainment::at_zero, std::nullopt, std::nullopt};
  if (n % 2 == 1 || f.leading().sign() == Sign::negative) {
    return {SignedTrop::bot(), Attainment::unbounded, std::nullopt, std::nullopt};
  }
  // Between consecutive tie points a single monomial dominates, so the sign
  // of f is constant there for each sign of x. The infimum is the limit at
  // the upper end of the highest interval on which f can be negative.
  const auto ties = tie_points(f);
  for (std::size_t k = ties.size(); k-- > 0;) {
    const Rational upper = ties[k];
    const Rational inside = k == 0 ? Rational(upper - 1) : Rational((ties[k - 1] + upper) / 2);
    for (Sign s : {Sign::positive, Sign::negative}) {
      const SignedTrop x = s == Sign::positive ? SignedTrop::pos(inside) : SignedTrop::neg(inside);
      if (eval_poly(f, x).sign() != Sign::negative) continue;
      const SignedTrop alpha = s == Sign::positive ? SignedTrop::pos(upper) : SignedTrop::neg(upper);
      return {SignedTrop::neg(eval_modulus(f, TropNum(upper))), Attainment::one_sided_limit_at, alpha,
              s == Sign::positive ? Side::left : Side::right};
    }
  }
  return {f.coeff(0), Attainment::at_zero, std::nullopt, std::nullopt};
}

}  // namespace troposign
