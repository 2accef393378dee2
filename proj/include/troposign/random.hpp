#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "troposign/matrix.hpp"

namespace troposign {

inline constexpr std::uint64_t kDefaultSeed = 20240517;

// Reads TROPOSIGN_SEED when set, else returns the given default.
std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed);

// Deterministic across platforms: only the raw engine output is used, never
// the implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }
  // True with probability num/den.
  bool chance(long num, long den) { return uniform(0, den - 1) < num; }

 private:
  std::mt19937_64 engine_;
};

// Magnitudes lo, lo+step, …, hi.
struct Grid {
  Rational lo{-3};
  Rational hi{3};
  Rational step{1, 2};
  // Probability (in percent) of drawing 𝟘 / −∞ instead of a grid magnitude.
  long zero_percent = 20;

  std::vector<Rational> values() const;
};

Rational random_grid_value(Rng& rng, const Grid& g);
TropNum random_trop(Rng& rng, const Grid& g);
TropVec random_trop_vec(Rng& rng, std::size_t n, const Grid& g);
// Pos or Neg with equal odds, or Zero.
SignedTrop random_signed(Rng& rng, const Grid& g);
SignedVec random_signed_vec(Rng& rng, std::size_t n, const Grid& g);
// Any element of 𝕊 (balanced included).
SignedTrop random_symmetrized(Rng& rng, const Grid& g);
TropMat random_symmetric_trop(Rng& rng, std::size_t n, const Grid& g);
SignedMat random_symmetric_signed(Rng& rng, std::size_t n, const Grid& g);

}  // namespace troposign
