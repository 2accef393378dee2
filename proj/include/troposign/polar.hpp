#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "troposign/linalg.hpp"
#include "troposign/random.hpp"

namespace troposign {

// An element (x⁺, x⁻) of (𝕋ⁿ)². Signed when the supports are disjoint.
struct SignedPair {
  TropVec plus;
  TropVec minus;

  std::size_t dim() const { return plus.size(); }
  bool is_signed() const;
  friend bool operator==(const SignedPair&, const SignedPair&) = default;
};

SignedPair pair_from_signed(const SignedVec& x);
// Throws unless p is signed.
SignedVec signed_from_pair(const SignedPair& p);
SignedPair zero_pair(std::size_t n);

class FinitePointSet {
 public:
  explicit FinitePointSet(std::vector<TropVec> points);
  std::size_t dim() const { return dim_; }
  const std::vector<TropVec>& points() const { return points_; }
  // The same set with empty-support generators dropped (possibly empty).
  std::vector<TropVec> nonzero_points() const;

 private:
  std::size_t dim_;
  std::vector<TropVec> points_;
};

class FinitePairSet {
 public:
  FinitePairSet(std::size_t dim, std::vector<SignedPair> pairs);
  std::size_t dim() const { return dim_; }
  const std::vector<SignedPair>& pairs() const { return pairs_; }

 private:
  std::size_t dim_;
  std::vector<SignedPair> pairs_;
};

bool polar_contains(const FinitePointSet& a, const SignedVec& x);
bool two_sided_contains(const FinitePointSet& a, const SignedPair& p);
bool one_sided_contains(const FinitePairSet& b, const TropVec& a);

SignedPair vee_map(const SignedPair& f);
SignedPair oplus(const SignedPair& x, const SignedPair& y);
SignedPair scale(const TropNum& lambda, const SignedPair& x);
// (x⁺ ⊕ y⁺_{\i}, x⁻_{\i} ⊕ y⁻), requires x⁻ᵢ = y⁺ᵢ.
SignedPair oplus_i(const SignedPair& x, const SignedPair& y, std::size_t i);
// Cancellation on every index of I = {i : x⁻ᵢ = y⁺ᵢ}.
SignedPair hat_oplus(const SignedPair& x, const SignedPair& y);
SignedPair hat_oplus_vee(const SignedPair& x, const SignedPair& y);

using PairMembership = std::function<bool(const SignedPair&)>;

// Signed part of A^▷.
PairMembership polar_membership(const FinitePointSet& a);
// Pairs of the form λ ⊙ g for a listed generator g.
PairMembership scaling_closure_membership(const FinitePairSet& r);

struct SampleBudget {
  std::size_t samples = 1000;
  Grid grid{};
  // Cap on the pool of closure elements grown during a check.
  std::size_t pool_limit = 256;
};

struct AxiomViolation {
  int axiom = 0;  // 1..4, numbered as (i)..(iv)
  std::vector<SignedPair> inputs;
  SignedPair result;
  std::optional<TropNum> lambda;
  std::optional<std::size_t> index;
};

struct BendReport {
  bool consistent = true;
  std::size_t samples_run = 0;
  // First violation per axiom, ordered by axiom number.
  std::vector<AxiomViolation> violations;
};

// Sampled check of the signed bend cone axioms for the set described by
// `member`, starting from the listed generators and growing a closure pool.
BendReport check_bend_axioms(const PairMembership& member, std::size_t dim,
                             std::span<const SignedPair> generators, const SampleBudget& budget,
                             Rng& rng);
// Literal membership in the listed pairs.
BendReport check_bend_axioms(const FinitePairSet& r, const SampleBudget& budget, Rng& rng);

// Membership in C = R ⊕ Δⁿ for R a signed bend cone: f ∈ C iff f^∨ ∈ R.
class DiagonalSaturation {
 public:
  explicit DiagonalSaturation(PairMembership r) : r_(std::move(r)) {}
  bool contains(const SignedPair& f) const;
  // cᵢ = min(fᵢ⁺, fᵢ⁻), so that f = f^∨ ⊕ (c, c).
  static TropVec diagonal_part(const SignedPair& f);

 private:
  PairMembership r_;
};

DiagonalSaturation saturate_diagonal(const FinitePairSet& r);
DiagonalSaturation saturate_diagonal(PairMembership r);

TropVec project_onto_hull(const FinitePointSet& a, const TropVec& z);
bool hull_contains(const FinitePointSet& a, const TropVec& z);
// A verified separator u ∈ A° with ⟨u, z⟩ ≺ 𝟘, or nullopt when z ∈ hull(A).
std::optional<SignedVec> separate(const FinitePointSet& a, const TropVec& z);

// Rejection sampling of signed vectors in A°.
std::vector<SignedVec> sample_polar_members(const FinitePointSet& a, std::size_t count,
                                            const Grid& grid, Rng& rng,
                                            std::size_t max_attempts = 0);

}  // namespace troposign
