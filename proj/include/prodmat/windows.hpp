#pragma once

#include <optional>
#include <vector>

#include "prodmat/errors.hpp"
#include "prodmat/ring.hpp"

namespace prodmat {

// Top-left N x N window of a unit-lower-Hessenberg matrix. The superdiagonal
// is structural (always 1) and never stored; a declared band d pins entries
// with k < n-d to zero at storage level.
template <Ring R>
class HessWindow {
public:
  explicit HessWindow(int size, std::optional<int> band = std::nullopt)
      : n_(size), band_(band) {
    if (size < 1) throw calc_error(errname::domain_error, "window size must be >= 1");
    if (band && *band < 0) throw calc_error(errname::domain_error, "band must be >= 0");
    rows_.reserve(static_cast<size_t>(size));
    for (int r = 0; r < size; ++r)
      rows_.emplace_back(static_cast<size_t>(r - row_lo(r) + 1), R(0));
  }

  int size() const { return n_; }
  const std::optional<int>& band() const { return band_; }
  int row_lo(int n) const {
    if (band_ && n - *band_ > 0) return n - *band_;
    return 0;
  }

  const R& entry(int n, int k) const {
    check_index(n, k);
    if (k == n + 1) return one();
    if (k > n + 1 || k < row_lo(n)) return zero();
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k - row_lo(n))];
  }

  void set(int n, int k, R v) {
    check_index(n, k);
    if (k > n)
      throw calc_error(errname::domain_error, "cannot assign at or above the superdiagonal");
    if (k < row_lo(n)) {
      if (v != R(0))
        throw calc_error(errname::band_violation, "nonzero entry below the declared band",
                         n);
      return;
    }
    rows_[static_cast<size_t>(n)][static_cast<size_t>(k - row_lo(n))] = std::move(v);
  }

  bool operator==(const HessWindow& o) const {
    if (n_ != o.n_) return false;
    for (int n = 0; n < n_; ++n)
      for (int k = 0; k <= n && k < n_; ++k)
        if (entry(n, k) != o.entry(n, k)) return false;
    return true;
  }
  bool operator!=(const HessWindow& o) const { return !(*this == o); }

private:
  void check_index(int n, int k) const {
    if (n < 0 || n >= n_ || k < 0 || k >= n_)
      throw calc_error(errname::domain_error, "window index out of range");
  }
  static const R& zero() {
    static const R z(0);
    return z;
  }
  static const R& one() {
    static const R o(1);
    return o;
  }

  int n_;
  std::optional<int> band_;
  std::vector<std::vector<R>> rows_;
};

// Unit-lower-triangular window; the diagonal is structural (always 1).
template <Ring R>
class LowTriWindow {
public:
  explicit LowTriWindow(int size) : n_(size) {
    if (size < 1) throw calc_error(errname::domain_error, "window size must be >= 1");
    rows_.reserve(static_cast<size_t>(size));
    for (int r = 0; r < size; ++r) rows_.emplace_back(static_cast<size_t>(r), R(0));
  }

  int size() const { return n_; }

  const R& entry(int n, int k) const {
    check_index(n, k);
    if (k == n) return one();
    if (k > n) return zero();
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
  }

  void set(int n, int k, R v) {
    check_index(n, k);
    if (k > n)
      throw calc_error(errname::domain_error, "cannot assign above the diagonal");
    if (k == n) {
      if (v != R(1))
        throw calc_error(errname::domain_error, "diagonal of a unit triangle must be 1");
      return;
    }
    rows_[static_cast<size_t>(n)][static_cast<size_t>(k)] = std::move(v);
  }

  bool operator==(const LowTriWindow& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool operator!=(const LowTriWindow& o) const { return !(*this == o); }

private:
  void check_index(int n, int k) const {
    if (n < 0 || n >= n_ || k < 0 || k >= n_)
      throw calc_error(errname::domain_error, "window index out of range");
  }
  static const R& zero() {
    static const R z(0);
    return z;
  }
  static const R& one() {
    static const R o(1);
    return o;
  }

  int n_;
  std::vector<std::vector<R>> rows_;
};

template <Ring R>
class DenseWindow {
public:
  explicit DenseWindow(int size)
      : n_(size), e_(static_cast<size_t>(size), std::vector<R>(static_cast<size_t>(size), R(0))) {
    if (size < 1) throw calc_error(errname::domain_error, "window size must be >= 1");
  }
  static DenseWindow identity(int size) {
    DenseWindow w(size);
    for (int i = 0; i < size; ++i) w.at(i, i) = R(1);
    return w;
  }

  int size() const { return n_; }
  R& at(int i, int j) { return e_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)); }
  const R& at(int i, int j) const {
    return e_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
  }

  bool operator==(const DenseWindow& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const DenseWindow& o) const { return !(*this == o); }

private:
  int n_;
  std::vector<std::vector<R>> e_;
};

template <Ring R>
DenseWindow<R> to_dense(const LowTriWindow<R>& a) {
  DenseWindow<R> d(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j <= i; ++j) d.at(i, j) = a.entry(i, j);
  return d;
}

template <Ring R>
DenseWindow<R> to_dense(const HessWindow<R>& h) {
  DenseWindow<R> d(h.size());
  for (int i = 0; i < h.size(); ++i)
    for (int j = 0; j < h.size() && j <= i + 1; ++j) d.at(i, j) = h.entry(i, j);
  return d;
}

template <Ring R>
DenseWindow<R> dense_mul(const DenseWindow<R>& a, const DenseWindow<R>& b) {
  if (a.size() != b.size())
    throw calc_error(errname::domain_error, "window size mismatch in product");
  DenseWindow<R> r(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int t = 0; t < a.size(); ++t) {
      if (a.at(i, t) == R(0)) continue;
      for (int j = 0; j < a.size(); ++j) r.at(i, j) = r.at(i, j) + a.at(i, t) * b.at(t, j);
    }
  return r;
}

template <Ring R>
DenseWindow<R> dense_transpose(const DenseWindow<R>& a) {
  DenseWindow<R> r(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

template <Ring R>
LowTriWindow<R> lowtri_mul(const LowTriWindow<R>& a, const LowTriWindow<R>& b) {
  if (a.size() != b.size())
    throw calc_error(errname::domain_error, "window size mismatch in product");
  LowTriWindow<R> r(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < i; ++j) {
      R acc(0);
      for (int t = j; t <= i; ++t) acc = acc + a.entry(i, t) * b.entry(t, j);
      r.set(i, j, std::move(acc));
    }
  return r;
}

// B (unit lower) times a dense window.
template <Ring R>
DenseWindow<R> mul_lowtri_dense(const LowTriWindow<R>& b, const DenseWindow<R>& g) {
  if (b.size() != g.size())
    throw calc_error(errname::domain_error, "window size mismatch in product");
  DenseWindow<R> r(g.size());
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) {
      R acc(0);
      for (int t = 0; t <= i; ++t) acc = acc + b.entry(i, t) * g.at(t, j);
      r.at(i, j) = std::move(acc);
    }
  return r;
}

}  // namespace prodmat
