#include "doctest.h"

#include "support/oracles.hpp"
#include "troposign/cones.hpp"
#include "troposign/linalg.hpp"
#include "troposign/random.hpp"

using namespace troposign;

namespace {

SignedTrop P(long m) { return SignedTrop::pos(m); }
SignedTrop N(long m) { return SignedTrop::neg(m); }
const SignedTrop Z = SignedTrop::zero();
const TropNum NI = TropNum::neg_inf();

SignedMat M(std::vector<std::vector<SignedTrop>> rows) { return SignedMat::from_rows(rows); }

// Zero diagonal, off-diagonal magnitudes strictly below the unit.
SignedMat random_contraction(Rng& rng, std::size_t n) {
  const Grid g{Rational(-3), Rational(-1, 2), Rational(1, 2), 20};
  SignedMat c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) c(i, j) = random_signed(rng, g);
  return c;
}

// Leibniz expansion evaluated in pair arithmetic.
oracle::Pair det_oracle(const SignedMat& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  oracle::Pair acc;
  do {
    oracle::Pair term{Rational(0), std::nullopt};
    for (std::size_t i = 0; i < n; ++i) term = oracle::pmul(term, oracle::pair_of(a(i, perm[i])));
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    acc = oracle::padd(acc, inversions % 2 ? oracle::pneg(term) : term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace

TEST_CASE("scalar products") {
  CHECK(dot_trop({TropNum(0), TropNum(0)}, {TropNum(2), TropNum(3)}) == TropNum(3));
  CHECK(dot_trop({NI, NI}, {TropNum(4), TropNum(5)}).is_neg_inf());
  CHECK(dot_trop({TropNum(1), NI}, {NI, TropNum(5)}).is_neg_inf());
  CHECK(dot_signed({P(0), N(0)}, {TropNum(0), TropNum(0)}) == SignedTrop::bal(0));
  CHECK(dot_signed({P(1), N(0)}, {TropNum(0), TropNum(0)}) == P(1));
  CHECK(dot_signed({N(2), Z}, {TropNum(0), TropNum(5)}) == N(2));
}

TEST_CASE("frobenius products") {
  CHECK(frobenius(M({{P(0)}}), M({{P(0)}})) == P(0));
  CHECK(frobenius(M({{P(1), P(0)}, {P(0), P(2)}}), M({{P(0), Z}, {Z, P(0)}})) == P(2));
  const TropMat y = TropMat::from_rows({{TropNum(2), TropNum(2)}, {TropNum(2), TropNum(2)}});
  CHECK(frobenius(y, y) == TropNum(4));
}

TEST_CASE("support and restriction") {
  CHECK(support({NI, TropNum(3), TropNum(0)}) == IndexSet{1, 2});
  const TropVec z{TropNum(1), TropNum(2), TropNum(3)};
  CHECK(restrict_to(z, {0, 2}) == TropVec{TropNum(1), NI, TropNum(3)});
  CHECK(restrict_complement(z, {0, 2}) == TropVec{NI, TropNum(2), NI});
}

TEST_CASE("determinant examples") {
  CHECK(det_signed(M({{P(2), P(3)}, {P(3), P(2)}})) == N(6));
  CHECK(det_signed(M({{P(0), P(0)}, {P(0), P(0)}})) == SignedTrop::bal(0));
  CHECK(det_signed(identity_signed(3)) == P(0));
  CHECK_THROWS_AS(det_signed(SignedMat(9, 9)), Error);
}

TEST_CASE("comatrix examples") {
  const SignedTrop a = P(1), b = N(2), c = P(3), d = SignedTrop::pos(Rational(1, 2));
  CHECK(comatrix(M({{a, b}, {c, d}})) == M({{d, -c}, {-b, a}}));
  CHECK(comatrix(M({{P(0), N(-1)}, {N(-1), P(0)}})) == M({{P(0), P(-1)}, {P(-1), P(0)}}));
  CHECK(comatrix(identity_signed(3)) == identity_signed(3));
  CHECK_THROWS_AS(comatrix(M({{P(0)}})), Error);
}

TEST_CASE("kleene star examples") {
  CHECK(kleene_star(SignedMat(3, 3)) == identity_signed(3));
  CHECK(kleene_star(M({{Z, P(-1)}, {P(-1), Z}})) == M({{P(0), P(-1)}, {P(-1), P(0)}}));
}

TEST_CASE("determinant agrees with the pair oracle") {
  Rng rng(21);
  const Grid g{Rational(-2), Rational(2), Rational(1), 20};
  for (int s = 0; s < 400; ++s) {
    const std::size_t n = 1 + rng.index(4);
    SignedMat a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = random_symmetrized(rng, g);
    CHECK(det_signed(a) == oracle::project(det_oracle(a)));
  }
}

TEST_CASE("comatrix of I minus C is the transposed kleene star") {
  Rng rng(22);
  for (int s = 0; s < 300; ++s) {
    const std::size_t n = 2 + rng.index(4);
    const SignedMat c = random_contraction(rng, n);
    SignedMat a = identity_signed(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) a(i, j) = -c(i, j);
    CHECK(transpose(comatrix(a)) == kleene_star(c));
  }
}

TEST_CASE("determinant with two equal rows is balanced or zero") {
  Rng rng(23);
  const Grid g;
  for (int s = 0; s < 500; ++s) {
    const std::size_t n = 2 + rng.index(3);
    SignedMat a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = random_signed(rng, g);
    const std::size_t r = rng.index(n - 1) + 1;
    for (std::size_t j = 0; j < n; ++j) a(r, j) = a(0, j);
    const Sign sg = det_signed(a).sign();
    CHECK((sg == Sign::balanced || sg == Sign::zero));
  }
}

TEST_CASE("signed scalar product matches the half-space reading") {
  Rng rng(24);
  const Grid g;
  for (int s = 0; s < 3000; ++s) {
    const std::size_t n = 1 + rng.index(4);
    const SignedVec x = random_signed_vec(rng, n, g);
    const TropVec a = random_trop_vec(rng, n, g);
    CHECK(geq(dot_signed(x, a), Z) == (dot_trop(positive_part(x), a) >= dot_trop(negative_part(x), a)));
  }
}

TEST_CASE("frobenius of PSD matrices reduces to diagonals") {
  Rng rng(25);
  const Grid g;
  for (int s = 0; s < 500; ++s) {
    const std::size_t n = 1 + rng.index(4);
    auto gram = [&]() {
      TropMat f(n, n + 1);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= n; ++k) f(i, k) = random_trop(rng, g);
      return multiply(f, transpose(f));
    };
    const TropMat p = gram(), q = gram();
    REQUIRE(is_psd_trop(p).member);
    TropVec dp, dq;
    for (std::size_t i = 0; i < n; ++i) {
      dp.push_back(p(i, i));
      dq.push_back(q(i, i));
    }
    CHECK(frobenius(p, q) == dot_trop(dp, dq));
  }
}

TEST_CASE("quadratic form and products") {
  const SignedMat a = M({{P(0), N(-1)}, {N(-1), P(0)}});
  CHECK(quadratic_form(a, {P(1), P(1)}) == P(2));
  CHECK(multiply(a, identity_signed(2)) == a);
  CHECK(multiply(a, SignedVec{P(0), Z}) == SignedVec{P(0), N(-1)});
  CHECK(is_symmetric(a));
  CHECK_FALSE(is_symmetric(M({{P(0), P(1)}, {P(2), P(0)}})));
}
