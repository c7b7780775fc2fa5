#pragma once

#include <optional>
#include <ostream>

#include "prodmat/multipoly.hpp"

namespace prodmat {

// Fraction field over MultiPoly, without multivariate gcd reduction: pairs
// are kept raw except for zero normalization and a monic (lex-leading)
// denominator. Equality is by cross-multiplication, which is exact over an
// integral domain.
class RatFunc {
public:
  RatFunc() : num_(), den_(1L) {}
  RatFunc(long c) : num_(c), den_(1L) {}
  explicit RatFunc(Rational c) : num_(std::move(c)), den_(1L) {}
  explicit RatFunc(MultiPoly num) : num_(std::move(num)), den_(1L) {}
  RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  static RatFunc var(const std::string& name) { return RatFunc(MultiPoly::var(name)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
  RatFunc operator/(const RatFunc& o) const {
    if (o.is_zero()) throw calc_error(errname::not_invertible, "division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
  }

  bool operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

private:
  void normalize() {
    if (den_.is_zero()) throw calc_error(errname::not_invertible, "zero denominator");
    if (num_.is_zero()) {
      den_ = MultiPoly(1L);
      return;
    }
    // cancel a constant factor: make the lex-leading denominator coefficient 1
    const Rational& lead = den_.terms().rbegin()->second;
    if (lead != Rational(1L)) {
      Rational inv = Rational(1L) / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
    if (den_.is_constant()) {
      den_ = MultiPoly(1L);
      return;
    }
    if (num_ == den_) {
      num_ = MultiPoly(1L);
      den_ = MultiPoly(1L);
    }
  }

  MultiPoly num_, den_;
};

template <>
inline constexpr bool is_field_v<RatFunc> = true;

inline std::optional<RatFunc> try_inv(const RatFunc& a) {
  if (a.is_zero()) return std::nullopt;
  return RatFunc(1L) / a;
}
inline RatFunc exact_div(const RatFunc& a, const RatFunc& b) { return a / b; }

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
  os << "(" << f.num() << ")";
  if (!(f.den() == MultiPoly(1L))) os << "/(" << f.den() << ")";
  return os;
}

}  // namespace prodmat
