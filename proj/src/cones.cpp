#include "troposign/cones.hpp"

#include <algorithm>
#include <type_traits>

namespace troposign {

namespace {

using Kind = ConeViolation::Kind;

void require_square_signed(const SignedMat& a, const char* what) {
  if (!a.is_square()) throw Error(std::string(what) + ": matrix must be square");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_signed(a(i, j))) {
        throw Error(std::string(what) + ": entry (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ") is not signed: " + to_string(a(i, j)));
      }
}

template <class T>
std::optional<ConeViolation> asymmetry(const Matrix<T>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (!(a(i, j) == a(j, i))) {
        SignedTrop l, r;
        if constexpr (std::is_same_v<T, SignedTrop>) {
          l = a(i, j);
          r = a(j, i);
        } else {
          l = SignedTrop::pos(a(i, j));
          r = SignedTrop::pos(a(j, i));
        }
        return ConeViolation{Kind::symmetry, i, j, "A_ij = A_ji", l, r};
      }
  return std::nullopt;
}

ConeVerdict rejected(ConeViolation v) { return {false, std::move(v)}; }

SignedTrop negative_entry_part(const SignedTrop& a) {
  return a.sign() == Sign::negative ? SignedTrop::pos(a.magnitude()) : SignedTrop::zero();
}

bool trop_inequality(const TropNum& off, const TropNum& d1, const TropNum& d2) {
  // 2·A_ij ≤ A_ii + A_jj with 2·(−∞) ≤ anything.
  if (off.is_neg_inf()) return true;
  if (d1.is_neg_inf() || d2.is_neg_inf()) return false;
  return 2 * off.value() <= d1.value() + d2.value();
}

// The signed-arithmetic conditions shared by PSD, PD and copositive checks,
// evaluated at one index pair. Returns the violation if the condition fails.
std::optional<ConeViolation> signed_condition(Cone cone, const SignedMat& a, std::size_t i,
                                              std::size_t j) {
  const SignedTrop zero;
  if (i == j) {
    const SignedTrop& d = a(i, i);
    if (cone == Cone::pd_signed) {
      if (!gt(d, zero)) return ConeViolation{Kind::diagonal, i, i, "A_ii ≻ 𝟘", d, zero};
    } else if (!geq(d, zero)) {
      return ConeViolation{Kind::diagonal, i, i, "A_ii ⪰ 𝟘", d, zero};
    }
    return std::nullopt;
  }
  SignedTrop rhs = otimes(a(i, i), a(j, j));
  if (cone == Cone::copositive) {
    SignedTrop np = negative_entry_part(a(i, j));
    SignedTrop lhs = otimes(np, np);
    if (!leq(lhs, rhs)) return ConeViolation{Kind::offdiagonal, i, j, "(A_ij⁻)² ⪯ A_ii A_jj", lhs, rhs};
    return std::nullopt;
  }
  SignedTrop lhs = otimes(a(i, j), a(i, j));
  if (cone == Cone::pd_signed) {
    if (!lt(lhs, rhs)) return ConeViolation{Kind::offdiagonal, i, j, "A_ij² ≺ A_ii A_jj", lhs, rhs};
  } else if (!leq(lhs, rhs)) {
    return ConeViolation{Kind::offdiagonal, i, j, "A_ij² ⪯ A_ii A_jj", lhs, rhs};
  }
  return std::nullopt;
}

ConeVerdict signed_cone(Cone cone, const SignedMat& a, const char* what) {
  require_square_signed(a, what);
  if (auto v = asymmetry(a)) {
    if (cone == Cone::copositive) throw Error(std::string(what) + ": matrix must be symmetric");
    return rejected(*v);
  }
  const std::size_t n = a.rows();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < n; ++i, ++checked)
    if (auto v = signed_condition(cone, a, i, i)) return rejected(*v);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++checked)
      if (auto v = signed_condition(cone, a, i, j)) return rejected(*v);
  return {true, InequalitiesHold{checked}};
}

}  // namespace

const char* kind_name(ConeViolation::Kind k) {
  switch (k) {
    case Kind::symmetry: return "symmetry";
    case Kind::diagonal: return "diagonal";
    case Kind::offdiagonal: return "offdiagonal";
  }
  return "?";
}

ConeVerdict is_psd_signed(const SignedMat& a) { return signed_cone(Cone::psd_signed, a, "is_psd_signed"); }

ConeVerdict is_pd_signed(const SignedMat& a) { return signed_cone(Cone::pd_signed, a, "is_pd_signed"); }

ConeVerdict is_copositive(const SignedMat& a) { return signed_cone(Cone::copositive, a, "is_copositive"); }

ConeVerdict is_psd_trop(const TropMat& a) {
  if (!a.is_square()) throw Error("is_psd_trop: matrix must be square");
  if (auto v = asymmetry(a)) return rejected(*v);
  const std::size_t n = a.rows();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++checked)
      if (!trop_inequality(a(i, j), a(i, i), a(j, j))) {
        return rejected({Kind::offdiagonal, i, j, "2 A_ij ≤ A_ii + A_jj",
                         SignedTrop::pos(otimes(a(i, j), a(i, j))),
                         SignedTrop::pos(otimes(a(i, i), a(j, j)))});
      }
  return {true, InequalitiesHold{checked}};
}

ConeVerdict is_cp(const TropMat& x) {
  if (!is_symmetric(x)) throw Error("is_cp: matrix must be square and symmetric");
  const std::size_t n = x.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      TropNum lhs = otimes(x(i, j), x(i, j));
      TropNum rhs = otimes(x(i, i), x(j, j));
      if (lhs > rhs) {
        return rejected({Kind::offdiagonal, std::min(i, j), std::max(i, j), "M_ij² ≤ M_ii M_jj",
                         SignedTrop::pos(lhs), SignedTrop::pos(rhs)});
      }
    }
  return {true, GramFactor{cp_factorize(x)}};
}

ConeVerdict is_cpsd(const TropMat& x) {
  if (!is_symmetric(x)) throw Error("is_cpsd: matrix must be square and symmetric");
  // Decided through the signed PSD conditions on the positive embedding; the
  // witness is built from the Gram factor.
  ConeVerdict psd = is_psd_signed(embed_positive(x));
  if (!psd.member) return psd;
  TropMat y = cp_factorize(x);
  const std::size_t k = y.cols();
  CpsdFactor f;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    TropMat block(k, k);
    for (std::size_t c = 0; c < k; ++c) block(c, c) = y(i, c);
    f.blocks.push_back(std::move(block));
  }
  return {true, std::move(f)};
}

TropMat cp_factorize(const TropMat& x) {
  if (!is_symmetric(x)) throw Error("cp_factorize: matrix must be square and symmetric");
  const std::size_t n = x.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!trop_inequality(x(i, j), x(i, i), x(j, j))) {
        throw Error("cp_factorize: matrix is not completely positive");
      }
  TropMat y(n, n * (n + 1) / 2);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i) y(i, col++) = half(x(i, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++col) {
      if (x(i, j).is_finite()) {
        // x(j, j) is finite here because the inequality holds.
        y(i, col) = TropNum(Rational(x(i, j).value() - x(j, j).value() / 2));
      }
      y(j, col) = half(x(j, j));
    }
  return y;
}

const char* cone_name(Cone c) {
  switch (c) {
    case Cone::psd_trop: return "psd";
    case Cone::psd_signed: return "psd-signed";
    case Cone::pd_signed: return "pd";
    case Cone::cp: return "cp";
    case Cone::cpsd: return "cpsd";
    case Cone::copositive: return "copositive";
  }
  return "?";
}

Cone parse_cone(const std::string& name) {
  for (Cone c : {Cone::psd_trop, Cone::psd_signed, Cone::pd_signed, Cone::cp, Cone::cpsd,
                 Cone::copositive})
    if (name == cone_name(c)) return c;
  throw Error("unknown cone '" + name + "'");
}

TropMat as_trop(const SignedMat& a) {
  TropMat t(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const SignedTrop& v = a(i, j);
      if (!is_nonnegative(v)) throw Error("tropical cone input has a non-positive entry: " + to_string(v));
      t(i, j) = modulus(v);
    }
  return t;
}

ConeVerdict check_cone(Cone cone, const SignedMat& a) {
  switch (cone) {
    case Cone::psd_trop: return is_psd_trop(as_trop(a));
    case Cone::psd_signed: return is_psd_signed(a);
    case Cone::pd_signed: return is_pd_signed(a);
    case Cone::cp: return is_cp(as_trop(a));
    case Cone::cpsd: return is_cpsd(as_trop(a));
    case Cone::copositive: return is_copositive(a);
  }
  throw Error("unknown cone");
}

bool violation_holds(Cone cone, const SignedMat& a, const ConeViolation& v) {
  if (v.i >= a.rows() || v.j >= a.cols()) return false;
  if (v.kind == Kind::symmetry) return !(a(v.i, v.j) == a(v.j, v.i));
  switch (cone) {
    case Cone::psd_trop:
    case Cone::cp:
    case Cone::cpsd: {
      TropMat t = as_trop(a);
      return !trop_inequality(t(v.i, v.j), t(v.i, v.i), t(v.j, v.j));
    }
    default: {
      auto again = signed_condition(cone, a, v.i, v.j);
      return again.has_value() && again->lhs == v.lhs && again->rhs == v.rhs;
    }
  }
}

}  // namespace troposign
