#pragma once

// Independent reference implementations used as test oracles. They work on
// raw pairs and scaled integers and share no decision logic with the library.

#include <algorithm>
#include <climits>
#include <optional>
#include <vector>

#include "troposign/scalar.hpp"
#include "troposign/matrix.hpp"

namespace oracle {

using troposign::Rational;
using troposign::Sign;
using troposign::SignedTrop;

// A max-plus number; nullopt is −∞.
using Ext = std::optional<Rational>;

inline Ext emax(const Ext& a, const Ext& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? b : a;
}

inline Ext eadd(const Ext& a, const Ext& b) {
  if (!a || !b) return std::nullopt;
  return Ext(Rational(*a + *b));
}

inline bool ele(const Ext& a, const Ext& b) {
  if (!a) return true;
  if (!b) return false;
  return *a <= *b;
}

struct Pair {
  Ext plus;
  Ext minus;
};

inline Pair pair_of(const SignedTrop& x) {
  switch (x.sign()) {
    case Sign::positive: return {x.magnitude(), std::nullopt};
    case Sign::negative: return {std::nullopt, x.magnitude()};
    case Sign::balanced: return {x.magnitude(), x.magnitude()};
    default: return {std::nullopt, std::nullopt};
  }
}

inline Pair padd(const Pair& a, const Pair& b) { return {emax(a.plus, b.plus), emax(a.minus, b.minus)}; }

inline Pair pmul(const Pair& a, const Pair& b) {
  return {emax(eadd(a.plus, b.plus), eadd(a.minus, b.minus)), emax(eadd(a.plus, b.minus), eadd(a.minus, b.plus))};
}

inline Pair pneg(const Pair& a) { return {a.minus, a.plus}; }

// a ⪯ b  ⟺  a⁺ ⊕ b⁻ ≤ a⁻ ⊕ b⁺
inline bool pleq(const Pair& a, const Pair& b) { return ele(emax(a.plus, b.minus), emax(a.minus, b.plus)); }

// a ∇ b  ⟺  a⁺ ⊕ b⁻ = a⁻ ⊕ b⁺
inline bool pbal(const Pair& a, const Pair& b) {
  const Ext l = emax(a.plus, b.minus), r = emax(a.minus, b.plus);
  return ele(l, r) && ele(r, l);
}

// Class of a pair under the balance-refined equivalence.
inline SignedTrop project(const Pair& p) {
  if (!p.plus && !p.minus) return SignedTrop::zero();
  if (!p.minus || (p.plus && *p.plus > *p.minus)) return SignedTrop::pos(*p.plus);
  if (!p.plus || *p.minus > *p.plus) return SignedTrop::neg(*p.minus);
  return SignedTrop::bal(*p.plus);
}

// Table 1 (∇ and ⪯ as in the table headers), keyed by the classes of a and b.
// Magnitudes are finite; each cell is the condition stated in the table.
enum class Cls { pos, neg, bal };

inline bool table1_balance(Cls a, Cls b, const Rational& ma, const Rational& mb) {
  switch (a) {
    case Cls::pos: return b == Cls::pos ? ma == mb : b == Cls::neg ? false : ma <= mb;
    case Cls::neg: return b == Cls::pos ? false : b == Cls::neg ? ma == mb : ma <= mb;
    case Cls::bal: return b == Cls::bal ? true : ma >= mb;
  }
  return false;
}

inline bool table1_leq(Cls a, Cls b, const Rational& ma, const Rational& mb) {
  switch (a) {
    case Cls::pos: return b == Cls::pos ? ma <= mb : b == Cls::neg ? false : ma <= mb;
    case Cls::neg: return b == Cls::pos ? true : b == Cls::neg ? ma >= mb : true;
    case Cls::bal: return b == Cls::neg ? ma >= mb : true;
  }
  return false;
}

inline SignedTrop make(Cls c, const Rational& m) {
  return c == Cls::pos ? SignedTrop::pos(m) : c == Cls::neg ? SignedTrop::neg(m) : SignedTrop::bal(m);
}

// Brute-force quadratic form check on a grid, in integer units of 1/2.
// A value is (plus, minus) with LONG_MIN for −∞.
constexpr long kNegInf = LONG_MIN;

struct IntVal {
  long plus = kNegInf;
  long minus = kNegInf;
};

inline long half_units(const Rational& m) {
  const Rational s = m * 2;
  if (s.get_den() != 1) throw troposign::Error("oracle: magnitude is not a multiple of 1/2");
  return s.get_num().get_si();
}

inline IntVal int_of(const SignedTrop& x) {
  switch (x.sign()) {
    case Sign::positive: return {half_units(x.magnitude()), kNegInf};
    case Sign::negative: return {kNegInf, half_units(x.magnitude())};
    case Sign::balanced: return {half_units(x.magnitude()), half_units(x.magnitude())};
    default: return {};
  }
}

inline long iadd3(long a, long b, long c) {
  if (a == kNegInf || b == kNegInf || c == kNegInf) return kNegInf;
  return a + b + c;
}

// Signed grid: 𝟘 and ±m for m ∈ {−3, −5/2, …, 3}; nonneg_only keeps 𝟘 and +m.
inline std::vector<IntVal> test_grid(bool nonneg_only) {
  std::vector<IntVal> g{IntVal{}};
  for (long h = -6; h <= 6; ++h) {
    g.push_back({h, kNegInf});
    if (!nonneg_only) g.push_back({kNegInf, h});
  }
  return g;
}

// True when xᵀAx ⪰ 𝟘 for every x on the grid.
inline bool quadratic_form_nonneg_on_grid(const troposign::SignedMat& a, bool nonneg_only) {
  const std::size_t n = a.rows();
  std::vector<IntVal> ai(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ai[i * n + j] = int_of(a(i, j));
  const std::vector<IntVal> grid = test_grid(nonneg_only);
  std::vector<std::size_t> idx(n, 0);
  std::vector<IntVal> x(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) x[i] = grid[idx[i]];
    long pos = kNegInf, neg = kNegInf;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const IntVal& c = ai[i * n + j];
        // Sign products: (+,+,+), (−,+,−), … over the three factors.
        const long xs[2] = {x[i].plus, x[i].minus};
        const long ys[2] = {x[j].plus, x[j].minus};
        const long cs[2] = {c.plus, c.minus};
        for (int si = 0; si < 2; ++si)
          for (int sj = 0; sj < 2; ++sj)
            for (int sc = 0; sc < 2; ++sc) {
              const long v = iadd3(xs[si], ys[sj], cs[sc]);
              if (v == kNegInf) continue;
              if ((si + sj + sc) % 2 == 0) {
                pos = std::max(pos, v);
              } else {
                neg = std::max(neg, v);
              }
            }
      }
    if (neg != kNegInf && neg > pos) return false;
    std::size_t k = 0;
    while (k < n && ++idx[k] == grid.size()) idx[k++] = 0;
    if (k == n) return true;
  }
}

}  // namespace oracle
