#include "troposign/scalar.hpp"

#include <ostream>

namespace troposign {

const Rational& TropNum::value() const {
  if (!finite_) throw Error("value of −∞ requested");
  return value_;
}

bool operator==(const TropNum& a, const TropNum& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const TropNum& a, const TropNum& b) {
  if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

TropNum oplus(const TropNum& a, const TropNum& b) { return a < b ? b : a; }

TropNum otimes(const TropNum& a, const TropNum& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return TropNum::neg_inf();
  return TropNum(Rational(a.value() + b.value()));
}

TropNum half(const TropNum& a) {
  if (a.is_neg_inf()) return a;
  return TropNum(Rational(a.value() / 2));
}

std::string to_string(const TropNum& a) {
  return a.is_neg_inf() ? std::string("-inf") : to_string(a.value());
}

std::ostream& operator<<(std::ostream& os, const TropNum& a) { return os << to_string(a); }

const char* sign_name(Sign s) {
  switch (s) {
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
    case Sign::negative: return "negative";
    case Sign::balanced: return "balanced";
    case Sign::top: return "top";
    case Sign::bot: return "bot";
  }
  return "?";
}

SignedTrop SignedTrop::pos(const TropNum& m) {
  return m.is_neg_inf() ? zero() : pos(m.value());
}

SignedTrop SignedTrop::neg(const TropNum& m) {
  return m.is_neg_inf() ? zero() : neg(m.value());
}

SignedTrop SignedTrop::from_pair(const PairRep& p) {
  if (p.plus > p.minus) return pos(p.plus.value());
  if (p.minus > p.plus) return neg(p.minus.value());
  if (p.plus.is_neg_inf()) return zero();
  return bal(p.plus.value());
}

const Rational& SignedTrop::magnitude() const {
  if (!has_magnitude()) throw Error(std::string("magnitude of ") + sign_name(sign_) + " element");
  return mag_;
}

bool operator==(const SignedTrop& a, const SignedTrop& b) {
  if (a.sign_ != b.sign_) return false;
  return !a.has_magnitude() || a.mag_ == b.mag_;
}

PairRep to_pair(const SignedTrop& a) {
  switch (a.sign()) {
    case Sign::zero: return {TropNum(), TropNum()};
    case Sign::positive: return {TropNum(a.magnitude()), TropNum()};
    case Sign::negative: return {TropNum(), TropNum(a.magnitude())};
    case Sign::balanced: return {TropNum(a.magnitude()), TropNum(a.magnitude())};
    default: throw Error("pair representative undefined on extended elements");
  }
}

SignedTrop oplus(const SignedTrop& a, const SignedTrop& b) {
  if (a.sign() == Sign::top || b.sign() == Sign::top) return SignedTrop::top();
  if (a.sign() == Sign::bot || b.sign() == Sign::bot) throw Error("⊥ ⊕ x is undefined");
  PairRep p = to_pair(a), q = to_pair(b);
  return SignedTrop::from_pair({oplus(p.plus, q.plus), oplus(p.minus, q.minus)});
}

SignedTrop otimes(const SignedTrop& a, const SignedTrop& b) {
  if (a.is_zero() || b.is_zero()) return SignedTrop::zero();
  if (a.is_extended() || b.is_extended()) {
    if (a.sign() == Sign::balanced || b.sign() == Sign::balanced) {
      throw Error("product of an extended element with a balanced element is undefined");
    }
    // Both factors now carry a sign: ⊤ behaves as positive, ⊥ as negative.
    auto negative = [](const SignedTrop& x) {
      return x.sign() == Sign::negative || x.sign() == Sign::bot;
    };
    return negative(a) != negative(b) ? SignedTrop::bot() : SignedTrop::top();
  }
  PairRep p = to_pair(a), q = to_pair(b);
  return SignedTrop::from_pair({oplus(otimes(p.plus, q.plus), otimes(p.minus, q.minus)),
                                oplus(otimes(p.plus, q.minus), otimes(p.minus, q.plus))});
}

SignedTrop ominus(const SignedTrop& a) {
  switch (a.sign()) {
    case Sign::positive: return SignedTrop::neg(a.magnitude());
    case Sign::negative: return SignedTrop::pos(a.magnitude());
    case Sign::top: return SignedTrop::bot();
    case Sign::bot: return SignedTrop::top();
    default: return a;
  }
}

SignedTrop ominus(const SignedTrop& a, const SignedTrop& b) { return oplus(a, ominus(b)); }

TropNum modulus(const SignedTrop& a) {
  if (a.is_extended()) throw Error("modulus undefined on extended elements");
  return a.is_zero() ? TropNum() : TropNum(a.magnitude());
}

bool leq(const SignedTrop& a, const SignedTrop& b) {
  if (a.sign() == Sign::bot || b.sign() == Sign::top) return true;
  if (a.sign() == Sign::top || b.sign() == Sign::bot) return false;
  PairRep p = to_pair(a), q = to_pair(b);
  return oplus(p.plus, q.minus) <= oplus(p.minus, q.plus);
}

bool lt(const SignedTrop& a, const SignedTrop& b) {
  if (a.sign() == Sign::bot) return b.sign() != Sign::bot;
  if (b.sign() == Sign::top) return a.sign() != Sign::top;
  if (a.sign() == Sign::top || b.sign() == Sign::bot) return false;
  PairRep p = to_pair(a), q = to_pair(b);
  return oplus(p.plus, q.minus) < oplus(p.minus, q.plus);
}

bool balances(const SignedTrop& a, const SignedTrop& b) {
  if (a.is_extended() || b.is_extended()) throw Error("∇ undefined on extended elements");
  PairRep p = to_pair(a), q = to_pair(b);
  return oplus(p.plus, q.minus) == oplus(p.minus, q.plus);
}

bool is_signed(const SignedTrop& a) {
  return a.sign() == Sign::zero || a.sign() == Sign::positive || a.sign() == Sign::negative;
}

bool is_nonnegative(const SignedTrop& a) {
  return a.sign() == Sign::zero || a.sign() == Sign::positive;
}

bool is_nonpositive(const SignedTrop& a) {
  return a.sign() == Sign::zero || a.sign() == Sign::negative;
}

SignedTrop sqrt_pos(const SignedTrop& a) {
  if (a.is_zero()) return a;
  if (a.sign() != Sign::positive) throw Error("sqrt_pos requires a positive element, got " + to_string(a));
  return SignedTrop::pos(Rational(a.magnitude() / 2));
}

SignedTrop inverse(const SignedTrop& a) {
  switch (a.sign()) {
    case Sign::positive: return SignedTrop::pos(Rational(-a.magnitude()));
    case Sign::negative: return SignedTrop::neg(Rational(-a.magnitude()));
    default: throw Error("no multiplicative inverse for " + to_string(a));
  }
}

SignedTrop power(const SignedTrop& a, unsigned k) {
  SignedTrop r = SignedTrop::one();
  for (unsigned i = 0; i < k; ++i) r = otimes(r, a);
  return r;
}

TropNum positive_part(const SignedTrop& a) { return to_pair(a).plus; }
TropNum negative_part(const SignedTrop& a) { return to_pair(a).minus; }

std::string to_string(const SignedTrop& a) {
  switch (a.sign()) {
    case Sign::zero: return "𝟘";
    case Sign::positive: return to_string(a.magnitude());
    case Sign::negative: return "⊖" + to_string(a.magnitude());
    case Sign::balanced: return to_string(a.magnitude()) + "•";
    case Sign::top: return "⊤";
    case Sign::bot: return "⊥";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const SignedTrop& a) { return os << to_string(a); }

}  // namespace troposign
