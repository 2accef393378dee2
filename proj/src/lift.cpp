#include "troposign/lift.hpp"

#include <cmath>
#include <sstream>

#include "troposign/cones.hpp"

namespace troposign {

namespace {

constexpr long kMaxRootDegree = 64;
constexpr long kMaxPowerExponent = 100000;

template <class T>
std::string matrix_string(const Matrix<T>& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

template <class V>
std::string vector_string(const V& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  os << ")";
  return os.str();
}

bool exact_root(const mpz_class& x, long q, mpz_class& root) {
  return mpz_root(root.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(q)) != 0;
}

Rational dot(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

RatMat multiply_transpose(const RatMat& y) {
  RatMat out(y.rows(), y.rows());
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.rows(); ++j) {
      Rational s = 0;
      for (std::size_t c = 0; c < y.cols(); ++c) s += y(i, c) * y(j, c);
      out(i, j) = s;
    }
  return out;
}

}  // namespace

RationalLift::RationalLift(Rational t, long max_denominator)
    : t_(std::move(t)), max_denominator_(max_denominator) {
  t_.canonicalize();
  if (t_ <= 1) throw Error("lift parameter t must exceed 1, got " + to_string(t_));
  if (max_denominator_ < 1) throw Error("max_denominator must be positive");
  root_ = t_;
  for (long q = kMaxRootDegree; q >= 2; --q) {
    mpz_class rn, rd;
    if (exact_root(t_.get_num(), q, rn) && exact_root(t_.get_den(), q, rd)) {
      root_degree_ = q;
      root_ = Rational(rn, rd);
      break;
    }
  }
  log_t_ = log_abs(t_);
}

bool RationalLift::supports(const Rational& e) const {
  Rational c = e;
  c.canonicalize();
  return c.get_den().fits_slong_p() && root_degree_ % c.get_den().get_si() == 0;
}

Rational RationalLift::power(const Rational& e) const {
  if (!supports(e)) {
    throw Error("irrational magnitude: t^" + to_string(e) + " is not rational for t = " + to_string(t_));
  }
  Rational c = e;
  c.canonicalize();
  const mpz_class k = c.get_num() * (root_degree_ / c.get_den().get_si());
  if (!k.fits_slong_p() || std::labs(k.get_si()) > kMaxPowerExponent) {
    throw Error("exponent " + to_string(e) + " too large for exact lifting");
  }
  const long kk = k.get_si();
  mpz_class num, den;
  const auto ex = static_cast<unsigned long>(std::labs(kk));
  mpz_pow_ui(num.get_mpz_t(), root_.get_num().get_mpz_t(), ex);
  mpz_pow_ui(den.get_mpz_t(), root_.get_den().get_mpz_t(), ex);
  Rational out = kk >= 0 ? Rational(num, den) : Rational(den, num);
  out.canonicalize();
  return out;
}

RationalLift RationalLift::squared() const { return RationalLift(t_ * t_, max_denominator_); }

Rational lift_scalar(const SignedTrop& x, const RationalLift& l, const Rational& c) {
  if (c <= 0) throw Error("lift coefficient must be positive");
  switch (x.sign()) {
    case Sign::zero: return Rational(0);
    case Sign::positive: return c * l.power(x.magnitude());
    case Sign::negative: return -(c * l.power(x.magnitude()));
    default: throw Error("cannot lift non-signed value " + to_string(x));
  }
}

Rational lift_trop(const TropNum& x, const RationalLift& l, const Rational& c) {
  return lift_scalar(SignedTrop::pos(x), l, c);
}

RatMat lift_matrix(const SignedMat& a, const RationalLift& l) {
  RatMat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = lift_scalar(a(i, j), l);
  return out;
}

SignedTrop SvalEstimate::to_signed() const {
  switch (sign) {
    case Sign::positive: return SignedTrop::pos(exponent);
    case Sign::negative: return SignedTrop::neg(exponent);
    default: return SignedTrop::zero();
  }
}

SvalEstimate sval_extract(const Rational& v, const RationalLift& l) {
  SvalEstimate s;
  if (v == 0) {
    s.raw = -INFINITY;
    s.exact = true;
    return s;
  }
  s.sign = v > 0 ? Sign::positive : Sign::negative;
  s.raw = log_abs(v) / l.log_t();
  const long d = l.max_denominator();
  Rational e(static_cast<long>(std::llround(s.raw * static_cast<double>(d))), d);
  e.canonicalize();
  s.exponent = e;
  s.exact = l.supports(e) && l.power(e) == abs(v);
  return s;
}

bool sval_bracket(const Rational& v, const SignedTrop& x, const RationalLift& l, const Rational& lo,
                  const Rational& hi) {
  if (x.is_zero()) return v == 0;
  if (!is_signed(x) || v == 0) return false;
  if ((v > 0) != (x.sign() == Sign::positive)) return false;
  const Rational m = l.power(x.magnitude());
  const Rational av = abs(v);
  return lo * m <= av && av <= hi * m;
}

Rational det_exact(const RatMat& a) {
  if (!a.is_square()) throw Error("det_exact: matrix must be square");
  RatMat m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

bool is_psd_exact(const RatMat& a) {
  if (!a.is_square()) throw Error("is_psd_exact: matrix must be square");
  const std::size_t n = a.rows();
  if (n > 10) throw Error("is_psd_exact: dimension above 10");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a(i, j) != a(j, i)) return false;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1U << i)) idx.push_back(i);
    RatMat sub(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = a(idx[r], idx[c]);
    if (det_exact(sub) < 0) return false;
  }
  return true;
}

namespace {

RatMat lift_psd_at(const SignedMat& a, const RationalLift& l) {
  const std::size_t n = a.rows();
  const Rational b_diag(n > 1 ? static_cast<long>(n - 1) : 1L);
  RatMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = lift_scalar(a(i, j), l, i == j ? b_diag : Rational(1));
  return out;
}

}  // namespace

LiftedPsd lift_psd(const SignedMat& a, const RationalLift& l) {
  if (!is_psd_signed(a).member) throw Error("lift_psd: matrix is not in PSD_n(S)");
  RatMat m = lift_psd_at(a, l);
  if (is_psd_exact(m)) return {std::move(m), l.t(), false};
  const RationalLift l2 = l.squared();
  RatMat m2 = lift_psd_at(a, l2);
  if (is_psd_exact(m2)) return {std::move(m2), l2.t(), true};
  throw Error("lift_psd: PSD certificate failed at t = " + to_string(l.t()) + " and at t^2");
}

void VerifyReport::fail(std::string check, std::string description) {
  status = "counterexample";
  counterexamples.push_back({std::move(check), std::move(description)});
}

VerifyReport verify_polar_commutation(const FinitePointSet& a, const RationalLift& l, std::size_t samples,
                                      Rng& rng) {
  VerifyReport report;
  const std::size_t n = a.dim();
  const std::vector<TropVec> gens = a.nonzero_points();
  std::vector<std::vector<Rational>> lifted;
  for (const auto& g : gens) {
    std::vector<Rational> v;
    for (const auto& e : g) v.push_back(lift_trop(e, l));
    lifted.push_back(std::move(v));
  }
  const bool halves = l.supports(Rational(1, 2));
  const Rational step = halves ? Rational(1, 2) : Rational(1);
  const Grid grid{Rational(-3), Rational(3), step, 20};
  const std::vector<Rational> coeffs = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};

  // (⊆): classical members z of the polar of cone(𝐀) have sval(z) ∈ A°.
  std::size_t accepted = 0;
  for (std::size_t attempt = 0; attempt < 50 * samples && accepted < samples; ++attempt) {
    std::vector<Rational> z(n);
    SignedVec expected(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.chance(1, 5)) continue;
      const Rational e = random_grid_value(rng, grid);
      const bool positive = rng.chance(2, 3);
      expected[i] = positive ? SignedTrop::pos(e) : SignedTrop::neg(e);
      z[i] = lift_scalar(expected[i], l, coeffs[rng.index(coeffs.size())]);
    }
    bool member = true;
    for (const auto& g : lifted)
      if (dot(z, g) < 0) member = false;
    if (!member) continue;
    ++accepted;
    std::vector<Rational> comb(n, Rational(0));
    for (const auto& g : lifted) {
      const Rational lambda(static_cast<long>(rng.uniform(0, 4)), 2);
      for (std::size_t i = 0; i < n; ++i) comb[i] += lambda * g[i];
    }
    if (dot(z, comb) < 0) {
      report.fail("subset", "nonnegative combination violates z = " + vector_string(z));
      continue;
    }
    SignedVec s(n);
    for (std::size_t i = 0; i < n; ++i) {
      // The coefficient range certifies the leading term, hence sval(z_i).
      if (!sval_bracket(z[i], expected[i], l, coeffs.front(), coeffs.back())) {
        report.fail("subset", "sval of monomial lift " + to_string(z[i]) + " differs from " +
                                  to_string(expected[i]));
      }
      s[i] = expected[i];
    }
    if (!polar_contains(a, s)) {
      report.fail("subset", "classical polar member z = " + vector_string(z) + " has sval " +
                                vector_string(s) + " outside the tropical polar");
    }
  }
  report.checked += accepted;
  if (accepted < samples) {
    report.notes.push_back("subset direction: " + std::to_string(accepted) + " of " + std::to_string(samples) +
                           " samples accepted by rejection sampling");
  }

  // (⊇): interior perturbations of x ∈ A° lift into the classical polar.
  const auto xs = sample_polar_members(a, samples, grid, rng);
  for (const auto& x : xs) {
    SignedVec z(n);
    for (std::size_t i = 0; i < n; ++i) {
      switch (x[i].sign()) {
        case Sign::positive: z[i] = SignedTrop::pos(Rational(x[i].magnitude() + step)); break;
        case Sign::negative: z[i] = x[i]; break;
        default: z[i] = SignedTrop::pos(grid.lo); break;
      }
    }
    if (!polar_contains(a, z)) {
      report.fail("superset", "perturbation " + vector_string(z) + " of " + vector_string(x) +
                                  " left the tropical polar");
      continue;
    }
    std::vector<Rational> lz(n);
    for (std::size_t i = 0; i < n; ++i) lz[i] = lift_scalar(z[i], l);
    for (std::size_t g = 0; g < lifted.size(); ++g) {
      const Rational ip = dot(lz, lifted[g]);
      if (ip < 0) {
        report.fail("superset", "lift of " + vector_string(z) + " has inner product " + to_string(ip) +
                                    " with lifted generator " + vector_string(gens[g]));
      }
    }
  }
  report.checked += xs.size();
  if (xs.size() < samples) {
    report.notes.push_back("superset direction: " + std::to_string(xs.size()) + " of " +
                           std::to_string(samples) + " polar members sampled");
  }
  return report;
}

namespace {

void check_primal(const TropMat& x, const RationalLift& l, VerifyReport& report) {
  const std::size_t n = x.rows();
  const std::string tag = matrix_string(x);
  if (!is_cp(x).member || !is_cpsd(x).member || !is_psd_trop(x).member) {
    report.fail("primal", "cone tests disagree on " + tag);
    return;
  }
  const TropMat y = cp_factorize(x);
  if (!(multiply(y, transpose(y)) == x)) report.fail("primal", "Y Y^T differs from X = " + tag);

  RatMat ly(y.rows(), y.cols());
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t c = 0; c < y.cols(); ++c) ly(i, c) = lift_trop(y(i, c), l);
  const RatMat cp_lift = multiply_transpose(ly);
  const Rational cols(static_cast<long>(y.cols()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!sval_bracket(cp_lift(i, j), SignedTrop::pos(x(i, j)), l, Rational(1), cols)) {
        report.fail("primal", "val of the CP lift differs from X = " + tag + " at (" + std::to_string(i + 1) +
                                  "," + std::to_string(j + 1) + ")");
      }

  const LiftedPsd psd = lift_psd(embed_positive(x), l);
  if (psd.retried) report.retried = true;
  const RationalLift lp(psd.t, l.max_denominator());
  const Rational b(n > 1 ? static_cast<long>(n - 1) : 1L);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (psd.matrix(i, j) < 0) report.fail("primal", "PSD lift of " + tag + " has a negative entry");
      if (!sval_bracket(psd.matrix(i, j), SignedTrop::pos(x(i, j)), lp, Rational(1), b)) {
        report.fail("primal", "val of the PSD lift differs from X = " + tag);
      }
    }
}

void check_dual(const SignedMat& m, const RationalLift& l, VerifyReport& report) {
  const std::size_t n = m.rows();
  const std::string tag = matrix_string(m);
  bool has_negative = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j).sign() == Sign::negative) has_negative = true;

  RatMat lifted(n, n);
  Rational diag_hi(1);
  if (!has_negative) {
    lifted = lift_matrix(m, l);
  } else {
    SignedMat p(n, n), nn(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || m(i, j).sign() == Sign::negative) {
          p(i, j) = m(i, j);
        } else {
          nn(i, j) = m(i, j);
        }
      }
    if (!is_psd_signed(p).member) {
      report.fail("dual", "PSD part of copositive " + tag + " is not in PSD_n(S)");
      return;
    }
    const LiftedPsd lp = lift_psd(p, l);
    if (lp.retried) {
      report.retried = true;
      report.fail("dual", "PSD part of " + tag + " needed t^2; entries are no longer comparable");
      return;
    }
    const RatMat ln = lift_matrix(nn, l);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) lifted(i, j) = lp.matrix(i, j) + ln(i, j);
    diag_hi = Rational(n > 1 ? static_cast<long>(n - 1) : 1L);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!sval_bracket(lifted(i, j), m(i, j), l, Rational(1), i == j ? diag_hi : Rational(1))) {
        report.fail("dual", "sval of the PSD+NN lift differs from M = " + tag);
        return;
      }
    }
  if (!is_copositive(m).member) report.fail("dual", "sval " + tag + " is not copositive");
}

// [[2,3],[3,2]]: copositive, outside sval(PSD), determinant ⊖6.
void check_remark_matrix(const RationalLift& l, VerifyReport& report) {
  const SignedMat m = SignedMat::from_rows({{SignedTrop::pos(2), SignedTrop::pos(3)},
                                            {SignedTrop::pos(3), SignedTrop::pos(2)}});
  if (!is_copositive(m).member) report.fail("remark", "[[2,3],[3,2]] should be copositive");
  if (is_psd_signed(m).member) report.fail("remark", "[[2,3],[3,2]] should not be in PSD_2(S)");
  if (!(det_signed(m) == SignedTrop::neg(3 + 3))) {
    report.fail("remark", "det of [[2,3],[3,2]] is " + to_string(det_signed(m)) + ", expected ⊖6");
  }
  const RatMat nn = lift_matrix(m, l);
  if (is_psd_exact(nn)) report.fail("remark", "NN lift of [[2,3],[3,2]] should not be PSD");
  check_dual(m, l, report);
  report.notes.push_back("[[2,3],[3,2]]: copositive, not in sval(PSD), det = " + to_string(det_signed(m)));
  ++report.checked;
}

}  // namespace

VerifyReport verify_collapse(std::size_t n, const RationalLift& l, std::size_t samples, Rng& rng) {
  if (n < 1 || n > 4) throw Error("verify_collapse: n must lie in 1..4");
  VerifyReport report;
  RationalLift lw = l;
  if (!lw.supports(Rational(1, 2))) {
    lw = l.squared();
    report.retried = true;
    report.notes.push_back("t has no exact square root; using t^2 = " + to_string(lw.t()));
  }
  const Grid grid{Rational(-3), Rational(3), Rational(1), 15};

  for (std::size_t s = 0; s < samples; ++s) {
    TropMat x(n, n);
    if (s == 0 && n == 2) {
      x = TropMat::from_rows({{TropNum(2), TropNum(2)}, {TropNum(2), TropNum(2)}});
    } else {
      TropMat y(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y(i, j) = random_trop(rng, grid);
      x = multiply(y, transpose(y));
    }
    check_primal(x, lw, report);
    ++report.checked;
  }

  check_remark_matrix(lw, report);
  std::size_t dual = 0;
  for (std::size_t attempt = 0; attempt < 1000 * samples && dual < samples; ++attempt) {
    SignedMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = rng.chance(1, 10) ? SignedTrop::zero() : SignedTrop::pos(random_grid_value(rng, grid));
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = random_signed(rng, grid);
        m(j, i) = m(i, j);
      }
    }
    if (!is_copositive(m).member) continue;
    check_dual(m, lw, report);
    ++dual;
    ++report.checked;
  }
  if (dual < samples) {
    report.notes.push_back("dual direction: " + std::to_string(dual) + " of " + std::to_string(samples) +
                           " copositive samples drawn");
  }
  return report;
}

}  // namespace troposign
