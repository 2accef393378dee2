#include "doctest.h"

#include "support/oracles.hpp"
#include "troposign/cones.hpp"
#include "troposign/lift.hpp"
#include "troposign/quadratic.hpp"

using namespace troposign;

namespace {

SignedTrop P(const Rational& m) { return SignedTrop::pos(m); }
SignedTrop N(const Rational& m) { return SignedTrop::neg(m); }
const SignedTrop Z = SignedTrop::zero();

SignedMat M(std::vector<std::vector<SignedTrop>> rows) { return SignedMat::from_rows(rows); }

SignedMat remark_matrix() { return M({{P(0), N(-1)}, {N(-1), P(0)}}); }

SignedMat random_pd(Rng& rng, std::size_t n) {
  const Grid g{Rational(-3), Rational(3), Rational(1, 2), 25};
  while (true) {
    SignedMat a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = P(random_grid_value(rng, g));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = random_signed(rng, g);
    if (is_pd_signed(a).member) return a;
  }
}

SignedMat diagonal_of(const SignedMat& a) {
  SignedMat d(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) d(i, i) = a(i, i);
  return d;
}

SignedTrop objective(const QuadProblem& p, const SignedVec& x) {
  SignedTrop lin;
  for (std::size_t i = 0; i < x.size(); ++i) lin = lin + p.b[i] * x[i];
  return quadratic_form(p.a, x) + lin;
}

}  // namespace

TEST_CASE("remark instance") {
  for (const Rational theta : {Rational(0), Rational(1, 2), Rational(2), Rational(3, 2)}) {
    const QuadSolution s = solve_quadratic({remark_matrix(), {P(0), P(theta)}});
    CHECK(s.xbar == SignedVec{N(0), N(theta)});
    REQUIRE(s.xstar);
    const Rational x1 = std::max(Rational(0), Rational(theta - 1)), x2 = std::max(theta, Rational(-1));
    CHECK(*s.xstar == SignedVec{N(x1), N(x2)});
    CHECK((*s.xstar == s.xbar) == (theta <= 1));
    CHECK(s.value == N(std::max(Rational(0), Rational(2 * theta))));
    CHECK(s.det == P(0));
  }
}

TEST_CASE("remark instance against the lifted optimum") {
  const RationalLift l;
  for (const Rational theta : {Rational(0), Rational(1, 2), Rational(2)}) {
    const QuadSolution s = solve_quadratic({remark_matrix(), {P(0), P(theta)}});
    const RatMat a = lift_matrix(remark_matrix(), l);
    const Rational b1 = 1, b2 = l.power(theta);
    // A⁻¹ for a symmetric 2×2 matrix.
    const Rational det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const Rational y1 = (a(1, 1) * b1 - a(0, 1) * b2) / det, y2 = (a(0, 0) * b2 - a(1, 0) * b1) / det;
    const Rational opt = -(b1 * y1 + b2 * y2) / 4;
    const SvalEstimate e = sval_extract(opt, l);
    CHECK(e.sign == s.value.sign());
    CHECK(abs(Rational(e.exponent.value() - s.value.magnitude())) <= Rational(1, 100));
    CHECK(sval_bracket(opt, s.value, l, Rational(1, 8), Rational(1)));
    CHECK(sval_bracket(-y1, (*s.xstar)[0], l, Rational(1, 2), Rational(2)));
    CHECK(sval_bracket(-y2, (*s.xstar)[1], l, Rational(1, 2), Rational(2)));
  }
}

TEST_CASE("trivial instance and errors") {
  const QuadSolution s = solve_quadratic({identity_signed(2), {Z, Z}});
  CHECK(s.value == Z);
  CHECK(s.xbar == SignedVec{Z, Z});
  const QuadSolution one = solve_quadratic({M({{P(2)}}), {N(3)}});
  CHECK(one.value == N(4));
  CHECK(one.xbar == SignedVec{P(1)});
  CHECK(*one.xstar == one.xbar);
  CHECK_THROWS_AS(solve_quadratic({M({{P(0), P(0)}, {P(0), P(0)}}), {Z, Z}}), Error);
  CHECK_THROWS_AS(solve_quadratic({identity_signed(2), {Z}}), Error);
}

TEST_CASE("quadratic form of a PD matrix is diagonal") {
  Rng rng(61);
  const Grid g;
  for (int s = 0; s < 1000; ++s) {
    const std::size_t n = 1 + rng.index(4);
    const SignedMat a = random_pd(rng, n);
    const SignedVec x = random_signed_vec(rng, n, g);
    CHECK(quadratic_form(a, x) == quadratic_form(diagonal_of(a), x));
  }
}

TEST_CASE("value is approached from above along the perturbed xbar") {
  Rng rng(62);
  const Grid g;
  for (int s = 0; s < 300; ++s) {
    const std::size_t n = 1 + rng.index(4);
    const QuadProblem p{random_pd(rng, n), random_signed_vec(rng, n, g)};
    const QuadSolution sol = solve_quadratic(p);
    // Entrywise recomputation of ⊖ bᵀ diag(A)⁻¹ b.
    SignedTrop direct;
    for (std::size_t i = 0; i < n; ++i)
      if (!p.b[i].is_zero()) direct = direct + P(2 * p.b[i].magnitude() - p.a(i, i).magnitude());
    CHECK(sol.value == -direct);

    SignedTrop prev = SignedTrop::top();
    for (long k = 1; k <= 8; ++k) {
      const Rational eps(1, k);
      SignedVec x = sol.xbar;
      for (auto& xi : x) xi = xi * P(-eps);
      const SignedTrop v = objective(p, x);
      CHECK(is_signed(v));
      CHECK(leq(sol.value, v));
      CHECK(leq(v, prev));
      if (!sol.value.is_zero()) CHECK(v.magnitude() >= sol.value.magnitude() - eps);
      prev = v;
    }
  }
}

TEST_CASE("value is a lower bound on random signed points") {
  Rng rng(63);
  const Grid g;
  for (int s = 0; s < 300; ++s) {
    const std::size_t n = 1 + rng.index(3);
    const QuadProblem p{random_pd(rng, n), random_signed_vec(rng, n, g)};
    const QuadSolution sol = solve_quadratic(p);
    for (int k = 0; k < 50; ++k) {
      const SignedTrop v = objective(p, random_signed_vec(rng, n, g));
      if (is_signed(v)) CHECK(leq(sol.value, v));
    }
  }
}

TEST_CASE("generic solutions follow the comatrix formula") {
  Rng rng(64);
  const Grid g;
  for (int s = 0; s < 300; ++s) {
    const std::size_t n = 2 + rng.index(3);
    const QuadProblem p{random_pd(rng, n), random_signed_vec(rng, n, g)};
    const QuadSolution sol = solve_quadratic(p);
    SignedTrop diag_product = SignedTrop::one();
    for (std::size_t i = 0; i < n; ++i) diag_product = diag_product * p.a(i, i);
    CHECK(sol.det == diag_product);
    if (sol.xstar) {
      for (std::size_t i = 0; i < n; ++i) CHECK((*sol.xstar)[i] == -(inverse(sol.det) * sol.com_t_b[i]));
    }
  }
}

TEST_CASE("copositive QP value") {
  CHECK(copositive_qp_value(M({{P(0), P(5)}, {P(5), P(0)}})).value == Z);
  const CopositiveQp bad = copositive_qp_value(M({{P(0), N(5)}, {N(5), P(0)}}));
  CHECK(bad.value == SignedTrop::bot());
  REQUIRE(bad.witness);
  CHECK(bad.witness_value.sign() == Sign::negative);
  CHECK(copositive_qp_value(M({{N(3)}})).value == SignedTrop::bot());

  std::vector<SignedTrop> vals{Z};
  for (long m = -2; m <= 2; ++m) {
    vals.push_back(P(m));
    vals.push_back(N(m));
  }
  auto check = [](const SignedMat& a) {
    const CopositiveQp q = copositive_qp_value(a);
    CHECK((q.value == Z) == is_copositive(a).member);
    if (q.value == Z) return;
    REQUIRE(q.witness);
    for (const auto& x : *q.witness) CHECK(is_nonnegative(x));
    CHECK(quadratic_form(a, *q.witness) == q.witness_value);
    CHECK(q.witness_value.sign() == Sign::negative);
  };
  for (const auto& a11 : vals)
    for (const auto& a12 : vals)
      for (const auto& a22 : vals) check(M({{a11, a12}, {a12, a22}}));
  Rng rng(65);
  for (int s = 0; s < 500; ++s) {
    SignedMat a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) a(i, j) = a(j, i) = vals[rng.index(vals.size())];
    check(a);
  }
}
