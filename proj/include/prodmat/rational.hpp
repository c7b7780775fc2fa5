#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <ostream>
#include <string>

#include "prodmat/errors.hpp"

namespace prodmat {

// Arbitrary-precision rational. Always canonical: gcd(|num|, den) = 1 and
// den > 0, so equality is structural.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n), 1u) {}
  Rational(long num, long den) {
    if (den == 0) throw calc_error(errname::domain_error, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  // Accepts "p", "p/q", optionally signed; U+2212 minus is normalized to '-'.
  explicit Rational(const std::string& text) {
    std::string s = normalize_minus(text);
    try {
      v_ = mpq_class(s, 10);
    } catch (const std::invalid_argument&) {
      throw calc_error(errname::domain_error, "unparsable rational literal: " + text);
    }
    if (v_.get_den() == 0)
      throw calc_error(errname::domain_error, "rational with zero denominator: " + text);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw calc_error(errname::not_invertible, "division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  // "p" when the denominator is 1, else "p/q".
  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

private:
  static std::string normalize_minus(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
      // U+2212 is e2 88 92 in UTF-8
      if (i + 2 < text.size() && (unsigned char)text[i] == 0xe2 &&
          (unsigned char)text[i + 1] == 0x88 && (unsigned char)text[i + 2] == 0x92) {
        s.push_back('-');
        i += 2;
      } else if (!isspace((unsigned char)text[i])) {
        s.push_back(text[i]);
      }
    }
    return s;
  }

  mpq_class v_;
};

inline std::optional<Rational> try_inv(const Rational& a) {
  if (a.is_zero()) return std::nullopt;
  return Rational(1L) / a;
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace prodmat
