#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "troposign/rational.hpp"

namespace troposign {

// An element of the max-plus semifield: an exact rational or −∞.
// The default value is −∞, the tropical zero.
class TropNum {
 public:
  TropNum() = default;
  TropNum(Rational v) : finite_(true), value_(std::move(v)) { value_.canonicalize(); }  // NOLINT: implicit by design
  TropNum(long v) : finite_(true), value_(v) {}                  // NOLINT
  TropNum(int v) : finite_(true), value_(v) {}                   // NOLINT

  static TropNum neg_inf() { return TropNum(); }

  bool is_neg_inf() const { return !finite_; }
  bool is_finite() const { return finite_; }
  const Rational& value() const;

  friend bool operator==(const TropNum& a, const TropNum& b);
  friend std::strong_ordering operator<=>(const TropNum& a, const TropNum& b);

 private:
  bool finite_ = false;
  Rational value_;
};

TropNum oplus(const TropNum& a, const TropNum& b);   // max
TropNum otimes(const TropNum& a, const TropNum& b);  // +, −∞ absorbing
// Half of a tropical number (the tropical square root).
TropNum half(const TropNum& a);
std::string to_string(const TropNum& a);
std::ostream& operator<<(std::ostream& os, const TropNum& a);

enum class Sign : std::uint8_t { zero, positive, negative, balanced, top, bot };

const char* sign_name(Sign s);

// A raw pair (a⁺, a⁻) of max-plus numbers.
struct PairRep {
  TropNum plus;
  TropNum minus;
};

// An element of the symmetrized tropical semiring extended by ⊤ and ⊥.
// Values are kept canonical: Zero, Top and Bot carry no magnitude.
class SignedTrop {
 public:
  SignedTrop() = default;  // Zero

  static SignedTrop zero() { return SignedTrop(); }
  static SignedTrop one() { return pos(Rational(0)); }
  static SignedTrop pos(Rational m) { return SignedTrop(Sign::positive, std::move(m)); }
  static SignedTrop neg(Rational m) { return SignedTrop(Sign::negative, std::move(m)); }
  static SignedTrop bal(Rational m) { return SignedTrop(Sign::balanced, std::move(m)); }
  static SignedTrop pos(long m) { return pos(Rational(m)); }
  static SignedTrop neg(long m) { return neg(Rational(m)); }
  static SignedTrop bal(long m) { return bal(Rational(m)); }
  // −∞ maps to Zero.
  static SignedTrop pos(const TropNum& m);
  static SignedTrop neg(const TropNum& m);
  static SignedTrop top() { return SignedTrop(Sign::top, Rational(0)); }
  static SignedTrop bot() { return SignedTrop(Sign::bot, Rational(0)); }

  // Projection of a pair onto its class.
  static SignedTrop from_pair(const PairRep& p);

  Sign sign() const { return sign_; }
  bool has_magnitude() const {
    return sign_ == Sign::positive || sign_ == Sign::negative || sign_ == Sign::balanced;
  }
  // Throws for Zero, Top and Bot.
  const Rational& magnitude() const;

  bool is_zero() const { return sign_ == Sign::zero; }
  bool is_extended() const { return sign_ == Sign::top || sign_ == Sign::bot; }

  friend bool operator==(const SignedTrop& a, const SignedTrop& b);

 private:
  SignedTrop(Sign s, Rational m) : sign_(s), mag_(std::move(m)) { mag_.canonicalize(); }
  Sign sign_ = Sign::zero;
  Rational mag_;
};

// Canonical pair representative; throws on Top/Bot.
PairRep to_pair(const SignedTrop& a);

SignedTrop oplus(const SignedTrop& a, const SignedTrop& b);
SignedTrop otimes(const SignedTrop& a, const SignedTrop& b);
SignedTrop ominus(const SignedTrop& a);  // ⊖a
SignedTrop ominus(const SignedTrop& a, const SignedTrop& b);  // a ⊖ b

inline SignedTrop operator+(const SignedTrop& a, const SignedTrop& b) { return oplus(a, b); }
inline SignedTrop operator*(const SignedTrop& a, const SignedTrop& b) { return otimes(a, b); }
inline SignedTrop operator-(const SignedTrop& a) { return ominus(a); }
inline SignedTrop operator-(const SignedTrop& a, const SignedTrop& b) { return ominus(a, b); }

TropNum modulus(const SignedTrop& a);
bool leq(const SignedTrop& a, const SignedTrop& b);  // a ⪯ b
bool lt(const SignedTrop& a, const SignedTrop& b);   // a ≺ b
inline bool geq(const SignedTrop& a, const SignedTrop& b) { return leq(b, a); }
inline bool gt(const SignedTrop& a, const SignedTrop& b) { return lt(b, a); }
bool balances(const SignedTrop& a, const SignedTrop& b);  // a ∇ b

inline Sign sign_class(const SignedTrop& a) { return a.sign(); }
bool is_signed(const SignedTrop& a);
// Zero counts as both positive and negative.
bool is_nonnegative(const SignedTrop& a);
bool is_nonpositive(const SignedTrop& a);

SignedTrop sqrt_pos(const SignedTrop& a);
// Multiplicative inverse of a nonzero signed element.
SignedTrop inverse(const SignedTrop& a);
SignedTrop power(const SignedTrop& a, unsigned k);

// Components of the canonical pair: x⁺ and x⁻.
TropNum positive_part(const SignedTrop& a);
TropNum negative_part(const SignedTrop& a);

// "𝟘", "3", "⊖3", "3•", "⊤", "⊥".
std::string to_string(const SignedTrop& a);
std::ostream& operator<<(std::ostream& os, const SignedTrop& a);

}  // namespace troposign
