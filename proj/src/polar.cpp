#include "troposign/polar.hpp"

#include <algorithm>

namespace troposign {

namespace {

void require_dim(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                std::to_string(got));
  }
}

void require_pair_shape(const SignedPair& p) {
  if (p.plus.size() != p.minus.size()) throw Error("pair components differ in length");
}

bool all_neg_inf(const TropVec& v) {
  return std::all_of(v.begin(), v.end(), [](const TropNum& x) { return x.is_neg_inf(); });
}

TropVec scale_vec(const TropNum& lambda, const TropVec& v) {
  TropVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(otimes(lambda, x));
  return out;
}

TropVec oplus_vec(const TropVec& a, const TropVec& b) {
  require_dim(a.size(), b.size());
  TropVec out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(oplus(a[i], b[i]));
  return out;
}

}  // namespace

bool SignedPair::is_signed() const {
  require_pair_shape(*this);
  for (std::size_t i = 0; i < plus.size(); ++i)
    if (plus[i].is_finite() && minus[i].is_finite()) return false;
  return true;
}

SignedPair pair_from_signed(const SignedVec& x) {
  if (!is_signed_vec(x)) throw Error("expected a signed vector");
  return {positive_part(x), negative_part(x)};
}

SignedVec signed_from_pair(const SignedPair& p) {
  if (!p.is_signed()) throw Error("pair is not signed");
  return combine_parts(p.plus, p.minus);
}

SignedPair zero_pair(std::size_t n) { return {TropVec(n), TropVec(n)}; }

FinitePointSet::FinitePointSet(std::vector<TropVec> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error("point set must be nonempty");
  dim_ = points_.front().size();
  if (dim_ == 0) throw Error("point dimension must be positive");
  for (const auto& p : points_) require_dim(dim_, p.size());
}

std::vector<TropVec> FinitePointSet::nonzero_points() const {
  std::vector<TropVec> out;
  for (const auto& p : points_)
    if (!all_neg_inf(p)) out.push_back(p);
  return out;
}

FinitePairSet::FinitePairSet(std::size_t dim, std::vector<SignedPair> pairs)
    : dim_(dim), pairs_(std::move(pairs)) {
  for (const auto& p : pairs_) {
    require_pair_shape(p);
    require_dim(dim_, p.dim());
  }
}

bool polar_contains(const FinitePointSet& a, const SignedVec& x) {
  require_dim(a.dim(), x.size());
  const SignedTrop zero;
  for (const auto& p : a.points())
    if (!geq(dot_signed(x, p), zero)) return false;
  return true;
}

bool two_sided_contains(const FinitePointSet& a, const SignedPair& p) {
  require_pair_shape(p);
  require_dim(a.dim(), p.dim());
  for (const auto& pt : a.points())
    if (dot_trop(p.plus, pt) < dot_trop(p.minus, pt)) return false;
  return true;
}

bool one_sided_contains(const FinitePairSet& b, const TropVec& a) {
  require_dim(b.dim(), a.size());
  for (const auto& p : b.pairs())
    if (dot_trop(p.plus, a) < dot_trop(p.minus, a)) return false;
  return true;
}

SignedPair vee_map(const SignedPair& f) {
  require_pair_shape(f);
  SignedPair out = zero_pair(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) {
    if (f.minus[i] > f.plus[i]) {
      out.minus[i] = f.minus[i];
    } else {
      out.plus[i] = f.plus[i];
    }
  }
  return out;
}

SignedPair oplus(const SignedPair& x, const SignedPair& y) {
  require_pair_shape(x);
  require_pair_shape(y);
  return {oplus_vec(x.plus, y.plus), oplus_vec(x.minus, y.minus)};
}

SignedPair scale(const TropNum& lambda, const SignedPair& x) {
  return {scale_vec(lambda, x.plus), scale_vec(lambda, x.minus)};
}

SignedPair oplus_i(const SignedPair& x, const SignedPair& y, std::size_t i) {
  require_pair_shape(x);
  require_pair_shape(y);
  require_dim(x.dim(), y.dim());
  if (i >= x.dim()) throw Error("cancellation index out of range");
  if (!(x.minus[i] == y.plus[i])) throw Error("cancellation index mismatch");
  return {oplus_vec(x.plus, restrict_complement(y.plus, {i})),
          oplus_vec(restrict_complement(x.minus, {i}), y.minus)};
}

SignedPair hat_oplus(const SignedPair& x, const SignedPair& y) {
  require_pair_shape(x);
  require_pair_shape(y);
  require_dim(x.dim(), y.dim());
  IndexSet ties;
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (x.minus[i] == y.plus[i]) ties.push_back(i);
  return {oplus_vec(x.plus, restrict_complement(y.plus, ties)),
          oplus_vec(restrict_complement(x.minus, ties), y.minus)};
}

SignedPair hat_oplus_vee(const SignedPair& x, const SignedPair& y) {
  return vee_map(hat_oplus(x, y));
}

PairMembership polar_membership(const FinitePointSet& a) {
  return [a](const SignedPair& p) { return p.is_signed() && two_sided_contains(a, p); };
}

PairMembership scaling_closure_membership(const FinitePairSet& r) {
  return [r](const SignedPair& p) {
    require_pair_shape(p);
    require_dim(r.dim(), p.dim());
    const bool p_zero = all_neg_inf(p.plus) && all_neg_inf(p.minus);
    for (const auto& g : r.pairs()) {
      if (p_zero) return true;
      // λ is determined by the first finite coordinate of g.
      std::optional<TropNum> lambda;
      for (std::size_t i = 0; i < g.dim() && !lambda; ++i) {
        if (g.plus[i].is_finite()) {
          if (p.plus[i].is_neg_inf()) break;
          lambda = TropNum(Rational(p.plus[i].value() - g.plus[i].value()));
        } else if (g.minus[i].is_finite()) {
          if (p.minus[i].is_neg_inf()) break;
          lambda = TropNum(Rational(p.minus[i].value() - g.minus[i].value()));
        }
      }
      if (lambda && scale(*lambda, g) == p) return true;
    }
    return false;
  };
}

BendReport check_bend_axioms(const PairMembership& member, std::size_t dim,
                             std::span<const SignedPair> generators, const SampleBudget& budget,
                             Rng& rng) {
  std::vector<SignedPair> pool;
  for (const auto& g : generators) {
    require_pair_shape(g);
    require_dim(dim, g.dim());
    if (!g.is_signed()) throw Error("check_bend_axioms: unsigned entry");
    pool.push_back(g);
  }

  BendReport report;
  std::vector<bool> seen(5, false);
  auto record = [&](AxiomViolation v) {
    report.consistent = false;
    if (!seen[v.axiom]) {
      seen[v.axiom] = true;
      report.violations.push_back(std::move(v));
    }
  };
  auto accept = [&](const SignedPair& p) {
    if (pool.size() < budget.pool_limit) pool.push_back(p);
  };

  for (std::size_t s = 0; s < budget.samples; ++s) {
    ++report.samples_run;
    const int axiom = static_cast<int>(s % 4) + 1;
    if (axiom == 1 || pool.empty()) {
      SignedPair p{random_trop_vec(rng, dim, budget.grid), TropVec(dim)};
      if (member(p)) {
        accept(p);
      } else {
        record({1, {}, p, std::nullopt, std::nullopt});
      }
      continue;
    }
    const SignedPair& g = pool[rng.index(pool.size())];
    if (axiom == 2) {
      TropNum lambda = random_trop(rng, budget.grid);
      SignedPair p = scale(lambda, g);
      if (member(p)) {
        accept(p);
      } else {
        record({2, {g}, p, lambda, std::nullopt});
      }
      continue;
    }
    SignedPair h = pool[rng.index(pool.size())];
    if (axiom == 3) {
      SignedPair p = vee_map(oplus(g, h));
      if (member(p)) {
        accept(p);
      } else {
        record({3, {g, h}, p, std::nullopt, std::nullopt});
      }
      continue;
    }
    // Axiom (iv): align h by scaling so that g⁻ᵢ = h⁺ᵢ on a chosen index.
    std::vector<std::size_t> finite_ties, trivial_ties;
    for (std::size_t i = 0; i < dim; ++i) {
      if (g.minus[i].is_finite() && h.plus[i].is_finite()) finite_ties.push_back(i);
      if (g.minus[i] == h.plus[i]) trivial_ties.push_back(i);
    }
    std::size_t i = 0;
    if (!finite_ties.empty()) {
      i = finite_ties[rng.index(finite_ties.size())];
      TropNum lambda(Rational(g.minus[i].value() - h.plus[i].value()));
      SignedPair aligned = scale(lambda, h);
      if (!member(aligned)) {
        record({2, {h}, aligned, lambda, std::nullopt});
        continue;
      }
      h = aligned;
    } else if (!trivial_ties.empty()) {
      i = trivial_ties[rng.index(trivial_ties.size())];
    } else {
      continue;
    }
    SignedPair p = vee_map(oplus_i(g, h, i));
    if (member(p)) {
      accept(p);
    } else {
      record({4, {g, h}, p, std::nullopt, i});
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const AxiomViolation& a, const AxiomViolation& b) { return a.axiom < b.axiom; });
  return report;
}

BendReport check_bend_axioms(const FinitePairSet& r, const SampleBudget& budget, Rng& rng) {
  const auto& pairs = r.pairs();
  return check_bend_axioms(
      [&pairs](const SignedPair& p) { return std::find(pairs.begin(), pairs.end(), p) != pairs.end(); },
      r.dim(), pairs, budget, rng);
}

bool DiagonalSaturation::contains(const SignedPair& f) const {
  SignedPair v = vee_map(f);
  if (all_neg_inf(v.minus)) return true;
  return r_(v);
}

TropVec DiagonalSaturation::diagonal_part(const SignedPair& f) {
  require_pair_shape(f);
  TropVec c;
  c.reserve(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) c.push_back(std::min(f.plus[i], f.minus[i]));
  return c;
}

DiagonalSaturation saturate_diagonal(const FinitePairSet& r) {
  return DiagonalSaturation(scaling_closure_membership(r));
}

DiagonalSaturation saturate_diagonal(PairMembership r) { return DiagonalSaturation(std::move(r)); }

TropVec project_onto_hull(const FinitePointSet& a, const TropVec& z) {
  require_dim(a.dim(), z.size());
  TropVec p(z.size());
  for (const auto& pt : a.points()) {
    std::optional<TropNum> lambda;
    bool skip = true;
    for (std::size_t i = 0; i < pt.size(); ++i) {
      if (pt[i].is_neg_inf()) continue;
      skip = false;
      TropNum r = z[i].is_neg_inf() ? TropNum() : TropNum(Rational(z[i].value() - pt[i].value()));
      if (!lambda || r < *lambda) lambda = r;
    }
    if (skip || lambda->is_neg_inf()) continue;
    p = oplus_vec(p, scale_vec(*lambda, pt));
  }
  return p;
}

bool hull_contains(const FinitePointSet& a, const TropVec& z) { return project_onto_hull(a, z) == z; }

std::optional<SignedVec> separate(const FinitePointSet& a, const TropVec& z) {
  const TropVec p = project_onto_hull(a, z);
  if (p == z) return std::nullopt;
  const std::size_t n = z.size();

  SignedVec u(n);
  std::vector<std::size_t> free_coords;  // j ∈ J with Pⱼ = zⱼ = −∞
  for (std::size_t j = 0; j < n; ++j) {
    const bool in_j = p[j] == z[j];
    if (p[j].is_finite()) {
      Rational m = -p[j].value();
      u[j] = in_j ? SignedTrop::pos(m) : SignedTrop::neg(m);
    } else if (in_j) {
      free_coords.push_back(j);
    } else {
      u[j] = SignedTrop::neg(Rational(1 - z[j].value()));
    }
  }
  if (!free_coords.empty()) {
    // Generators with λ_a = −∞ are not controlled by P; a large positive
    // weight on the coordinates where z vanishes keeps them on the right side.
    const TropVec u_minus = negative_part(u);
    Rational k = 0;
    for (const auto& pt : a.points()) {
      TropNum best;
      for (std::size_t j : free_coords) best = oplus(best, pt[j]);
      if (best.is_neg_inf()) continue;
      TropNum rhs = dot_trop(u_minus, pt);
      if (rhs.is_finite() && rhs.value() - best.value() > k) k = rhs.value() - best.value();
    }
    for (std::size_t j : free_coords) u[j] = SignedTrop::pos(k);
  }
  if (!polar_contains(a, u) || !lt(dot_signed(u, z), SignedTrop::zero())) {
    throw Error("separator verification failed");
  }
  return u;
}

std::vector<SignedVec> sample_polar_members(const FinitePointSet& a, std::size_t count,
                                            const Grid& grid, Rng& rng, std::size_t max_attempts) {
  if (max_attempts == 0) max_attempts = 500 * (count + 1);
  std::vector<SignedVec> out;
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < count; ++attempt) {
    SignedVec x = random_signed_vec(rng, a.dim(), grid);
    if (polar_contains(a, x)) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace troposign
