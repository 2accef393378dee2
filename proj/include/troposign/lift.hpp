#pragma once

#include <optional>
#include <string>
#include <vector>

#include "troposign/polar.hpp"

namespace troposign {

// Evaluation of monomial lifts x ↦ sign(x)·c·t^{|x|} at a fixed rational t > 1.
// t^e is exact when the denominator of e divides the root degree of t, the
// largest q for which t is a perfect q-th power (q = 6 for t = 10⁶).
class RationalLift {
 public:
  explicit RationalLift(Rational t = Rational(1000000), long max_denominator = 4);

  const Rational& t() const { return t_; }
  long root_degree() const { return root_degree_; }
  long max_denominator() const { return max_denominator_; }
  // Exact t^e; throws Error("irrational magnitude …") when t^e is not rational.
  Rational power(const Rational& e) const;
  bool supports(const Rational& e) const;
  // The same lift at t².
  RationalLift squared() const;
  // ln t
  double log_t() const { return log_t_; }

 private:
  Rational t_;
  long max_denominator_;
  long root_degree_ = 1;
  Rational root_;  // t^{1/q}
  double log_t_;
};

// Zero ↦ 0; throws for balanced, ⊤, ⊥ and for c ≤ 0.
Rational lift_scalar(const SignedTrop& x, const RationalLift& l, const Rational& c = Rational(1));
Rational lift_trop(const TropNum& x, const RationalLift& l, const Rational& c = Rational(1));
RatMat lift_matrix(const SignedMat& a, const RationalLift& l);

struct SvalEstimate {
  Sign sign = Sign::zero;  // zero, positive or negative
  TropNum exponent;        // log_t|v| rounded to a multiple of 1/max_denominator
  double raw = 0;          // unrounded log_t|v| (−inf for v = 0)
  bool exact = false;      // |v| = t^exponent exactly

  SignedTrop to_signed() const;
};

SvalEstimate sval_extract(const Rational& v, const RationalLift& l);

// True when lo·t^e ≤ |v| ≤ hi·t^e with the sign of x, or v = 0 for x = 𝟘.
// Certifies sval(v) = x for a lift whose leading coefficient lies in [lo, hi].
bool sval_bracket(const Rational& v, const SignedTrop& x, const RationalLift& l, const Rational& lo,
                  const Rational& hi);

Rational det_exact(const RatMat& a);
// Every principal minor is ≥ 0; n ≤ 10.
bool is_psd_exact(const RatMat& a);

struct LiftedPsd {
  RatMat matrix;
  Rational t;      // the t actually used
  bool retried;    // the certificate failed at the configured t
};

// 𝐜_ij = ε_ij b_ij t^{|A_ij|} with b_ii = n−1 (1 when n = 1) and b_ij = 1,
// certified PSD through principal minors, retrying once at t².
LiftedPsd lift_psd(const SignedMat& a, const RationalLift& l);

struct Counterexample {
  std::string check;
  std::string description;
};

struct VerifyReport {
  std::string status = "consistent";  // or "counterexample"
  std::size_t checked = 0;
  std::vector<Counterexample> counterexamples;
  bool retried = false;
  std::vector<std::string> notes;

  void fail(std::string check, std::string description);
};

// Sampled check of sval(𝐀°) = (val 𝐀)° for the monomial lift 𝐀 of A.
VerifyReport verify_polar_commutation(const FinitePointSet& a, const RationalLift& l, std::size_t samples,
                                      Rng& rng);

// Sampled check that CP, PSD∩NN and their duals lift with the same (signed)
// valuation; n ≤ 4.
VerifyReport verify_collapse(std::size_t n, const RationalLift& l, std::size_t samples, Rng& rng);

}  // namespace troposign
