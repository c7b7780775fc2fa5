#pragma once

#include <ostream>
#include <vector>

#include "prodmat/errors.hpp"
#include "prodmat/ring.hpp"

namespace prodmat {

// Dense univariate polynomial over a commutative ring. coefficients()[i] is
// the x^i coefficient; the zero polynomial stores no coefficients.
template <Ring R>
class UniPoly {
public:
  UniPoly() = default;
  UniPoly(long c) { if (R(c) != R(0)) c_.push_back(R(c)); }
  explicit UniPoly(R c) { if (c != R(0)) c_.push_back(std::move(c)); }
  explicit UniPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly x_power(int k, R scale = R(1)) {
    if (scale == R(0)) return UniPoly();
    std::vector<R> c(static_cast<size_t>(k) + 1, R(0));
    c.back() = std::move(scale);
    return UniPoly(std::move(c));
  }
  static UniPoly x() { return x_power(1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coefficients() const { return c_; }
  R coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return R(0);
    return c_[static_cast<size_t>(i)];
  }
  bool is_monic() const { return !c_.empty() && c_.back() == R(1); }

  UniPoly operator-() const {
    std::vector<R> c;
    c.reserve(c_.size());
    for (const R& v : c_) c.push_back(-v);
    return UniPoly(std::move(c));
  }
  UniPoly operator+(const UniPoly& o) const {
    std::vector<R> c(std::max(c_.size(), o.c_.size()), R(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] + o.c_[i];
    return UniPoly(std::move(c));
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<R> c(c_.size() + o.c_.size() - 1, R(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
    return UniPoly(std::move(c));
  }
  UniPoly scaled(const R& s) const {
    std::vector<R> c;
    c.reserve(c_.size());
    for (const R& v : c_) c.push_back(v * s);
    return UniPoly(std::move(c));
  }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  // Horner evaluation; T needs mul by R-values and addition (R itself, or a
  // bigger algebra such as UniPoly for substitution).
  template <Ring T>
  T eval(const T& v) const {
    T acc = T(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * v + upcast<T>(c_[i]);
    return acc;
  }

private:
  template <Ring T>
  static T upcast(const R& c) {
    if constexpr (std::same_as<T, R>) return c;
    else return T(c);
  }
  void trim() {
    while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
  }
  std::vector<R> c_;
};

template <Ring R>
R poly_eval(const UniPoly<R>& p, const R& v) {
  return p.template eval<R>(v);
}

template <Ring R>
std::ostream& operator<<(std::ostream& os, const UniPoly<R>& p) {
  if (p.is_zero()) return os << "0";
  for (int i = p.degree(); i >= 0; --i) {
    if (p.coeff(i) == R(0)) continue;
    if (i != p.degree()) os << " + ";
    os << "(" << p.coeff(i) << ")";
    if (i > 0) os << "*x^" << i;
  }
  return os;
}

}  // namespace prodmat
