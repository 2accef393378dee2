#include "troposign/rational.hpp"

#include <cctype>
#include <cmath>

namespace troposign {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

double log_abs_z(const mpz_class& z) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw Error("empty rational literal");

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  auto slash = body.find('/');
  if (slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    result = Rational(mpz_class(std::string(num), 10), d);
  } else {
    long exponent = 0;
    auto epos = body.find_first_of("eE");
    std::string_view mantissa = body;
    if (epos != std::string_view::npos) {
      std::string_view etext = body.substr(epos + 1);
      bool eneg = false;
      if (!etext.empty() && (etext.front() == '-' || etext.front() == '+')) {
        eneg = etext.front() == '-';
        etext.remove_prefix(1);
      }
      if (!all_digits(etext) || etext.size() > 6) {
        throw Error("malformed exponent in '" + std::string(text) + "'");
      }
      exponent = std::stol(std::string(etext));
      if (eneg) exponent = -exponent;
      mantissa = body.substr(0, epos);
    }
    auto dot = mantissa.find('.');
    std::string digits;
    long frac_len = 0;
    if (dot == std::string_view::npos) {
      digits = std::string(mantissa);
    } else {
      auto ip = mantissa.substr(0, dot);
      auto fp = mantissa.substr(dot + 1);
      if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
          (ip.empty() && fp.empty())) {
        throw Error("malformed rational literal '" + std::string(text) + "'");
      }
      digits = std::string(ip) + std::string(fp);
      frac_len = static_cast<long>(fp.size());
    }
    if (!all_digits(digits)) throw Error("malformed rational literal '" + std::string(text) + "'");
    result = Rational(mpz_class(digits, 10)) * pow10(exponent - frac_len);
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

double log_abs(const Rational& q) {
  if (q == 0) throw Error("log of zero");
  return log_abs_z(q.get_num()) - log_abs_z(q.get_den());
}

Rational rational_from_int(long value) { return Rational(value); }

}  // namespace troposign
