#include "troposign/random.hpp"

#include <cstdlib>
#include <string>

namespace troposign {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("TROPOSIGN_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(env, &used, 10);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    throw Error(std::string("TROPOSIGN_SEED is not a non-negative integer: ") + env);
  }
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw Error("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r = 0;
  do {
    r = engine_();
  } while (r >= limit);
  return lo + static_cast<long>(r % span);
}

std::vector<Rational> Grid::values() const {
  if (step <= 0 || hi < lo) throw Error("invalid sampling grid");
  std::vector<Rational> out;
  for (Rational v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

Rational random_grid_value(Rng& rng, const Grid& g) {
  if (g.step <= 0 || g.hi < g.lo) throw Error("invalid sampling grid");
  Rational steps_q = (g.hi - g.lo) / g.step;
  mpz_class steps = steps_q.get_num() / steps_q.get_den();
  long k = rng.uniform(0, steps.get_si());
  return Rational(g.lo + g.step * k);
}

TropNum random_trop(Rng& rng, const Grid& g) {
  if (rng.chance(g.zero_percent, 100)) return TropNum();
  return TropNum(random_grid_value(rng, g));
}

TropVec random_trop_vec(Rng& rng, std::size_t n, const Grid& g) {
  TropVec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_trop(rng, g));
  return v;
}

SignedTrop random_signed(Rng& rng, const Grid& g) {
  if (rng.chance(g.zero_percent, 100)) return SignedTrop::zero();
  Rational m = random_grid_value(rng, g);
  return rng.chance(1, 2) ? SignedTrop::pos(m) : SignedTrop::neg(m);
}

SignedVec random_signed_vec(Rng& rng, std::size_t n, const Grid& g) {
  SignedVec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_signed(rng, g));
  return v;
}

SignedTrop random_symmetrized(Rng& rng, const Grid& g) {
  if (rng.chance(g.zero_percent, 100)) return SignedTrop::zero();
  Rational m = random_grid_value(rng, g);
  switch (rng.uniform(0, 2)) {
    case 0: return SignedTrop::pos(m);
    case 1: return SignedTrop::neg(m);
    default: return SignedTrop::bal(m);
  }
}

TropMat random_symmetric_trop(Rng& rng, std::size_t n, const Grid& g) {
  TropMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = random_trop(rng, g);
  return m;
}

SignedMat random_symmetric_signed(Rng& rng, std::size_t n, const Grid& g) {
  SignedMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = random_signed(rng, g);
  return m;
}

}  // namespace troposign
