#pragma once

#include <vector>

#include "prodmat/errors.hpp"
#include "prodmat/ring.hpp"

namespace prodmat {

// Power series in t truncated to a fixed order: coefficients for t^0..t^{N-1}.
// Binary operations demand matching orders.
template <Ring R>
class TruncSeries {
public:
  explicit TruncSeries(int order) : c_(check_order(order), R(0)) {}
  TruncSeries(int order, std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != check_order(order))
      throw calc_error(errname::domain_error, "series coefficient count != order");
  }
  static TruncSeries one(int order) {
    TruncSeries s(order);
    s.c_[0] = R(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()); }
  const std::vector<R>& coefficients() const { return c_; }
  const R& coeff(int i) const { return c_.at(static_cast<size_t>(i)); }
  void set_coeff(int i, R v) { c_.at(static_cast<size_t>(i)) = std::move(v); }

  TruncSeries operator-() const {
    TruncSeries r(order());
    for (int i = 0; i < order(); ++i) r.c_[i] = -c_[i];
    return r;
  }
  TruncSeries operator+(const TruncSeries& o) const {
    require_same_order(o);
    TruncSeries r(order());
    for (int i = 0; i < order(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  TruncSeries operator-(const TruncSeries& o) const { return *this + (-o); }
  TruncSeries operator*(const TruncSeries& o) const {
    require_same_order(o);
    TruncSeries r(order());
    for (int i = 0; i < order(); ++i)
      for (int j = 0; i + j < order(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    return r;
  }
  TruncSeries scaled(const R& s) const {
    TruncSeries r(order());
    for (int i = 0; i < order(); ++i) r.c_[i] = c_[i] * s;
    return r;
  }
  // multiply by t, truncating the top coefficient away
  TruncSeries shifted_up() const {
    TruncSeries r(order());
    for (int i = 1; i < order(); ++i) r.c_[i] = c_[i - 1];
    return r;
  }

  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

private:
  static int check_order(int order) {
    if (order < 1) throw calc_error(errname::domain_error, "series order must be >= 1");
    return order;
  }
  void require_same_order(const TruncSeries& o) const {
    if (order() != o.order())
      throw calc_error(errname::domain_error, "series order mismatch");
  }
  std::vector<R> c_;
};

template <Ring R>
TruncSeries<R> series_mul(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  return a * b;
}

}  // namespace prodmat
