#pragma once

#include <vector>

#include "prodmat/unipoly.hpp"
#include "prodmat/windows.hpp"

namespace prodmat {

template <Ring R>
HessWindow<R> shift_window(int size) {
  return HessWindow<R>(size, 0);  // band 0 with zero diagonal: only the superdiagonal survives
}

// Forward substitution: rows of the inverse from the identity B * X = I.
template <Ring R>
LowTriWindow<R> invert_unit_lower(const LowTriWindow<R>& b) {
  const int n = b.size();
  LowTriWindow<R> x(n);
  for (int i = 0; i < n; ++i)
    for (int j = i - 1; j >= 0; --j) {
      R acc(0);
      for (int t = j; t < i; ++t) acc = acc + b.entry(i, t) * x.entry(t, j);
      x.set(i, j, -acc);
    }
  return x;
}

// B Delta B^{-1} for unit-lower-triangular B of size N; valid rows 0..N-2, so
// the result window has size N-1. The product is unit-lower-Hessenberg by
// the index ranges alone: entry (n, n+1) collapses to b_nn * c_{n+1,n+1} = 1.
template <Ring R>
HessWindow<R> conjugate_shift(const LowTriWindow<R>& b) {
  const int n = b.size();
  if (n < 2)
    throw calc_error(errname::window_too_small,
                     "need a window of size >= 2 to produce one production row");
  LowTriWindow<R> c = invert_unit_lower(b);
  HessWindow<R> pi(n - 1);
  for (int row = 0; row < n - 1; ++row)
    for (int k = 0; k <= row; ++k) {
      R acc(0);
      for (int t = std::max(k, 1); t <= row + 1; ++t)
        acc = acc + b.entry(row, t - 1) * c.entry(t, k);
      pi.set(row, k, std::move(acc));
    }
  return pi;
}

// (Pi^l)_{nk} by repeated row-vector application. Row i of the window feeds
// columns up to i+1, so n + l <= size keeps every step inside the window.
template <Ring R>
R hess_power_entry(const HessWindow<R>& pi, int l, int n, int k) {
  const int size = pi.size();
  if (n < 0 || k < 0 || l < 0 || n >= size || k > size)
    throw calc_error(errname::domain_error, "power entry index out of range");
  if (n + l > size)
    throw calc_error(errname::window_too_small,
                     "window too small: need n + power <= size");
  std::vector<R> v(static_cast<size_t>(size) + 1, R(0));
  v[static_cast<size_t>(n)] = R(1);
  int hi = n;
  for (int step = 0; step < l; ++step) {
    std::vector<R> w(v.size(), R(0));
    for (int j = 0; j <= std::min(hi + 1, size); ++j) {
      R acc = (j >= 1) ? v[static_cast<size_t>(j - 1)] : R(0);  // structural superdiagonal
      if (j < size) {
        int top = std::min(hi, size - 1);
        int lo = j;
        for (int i = lo; i <= top; ++i) {
          if (i - j > 0 && pi.band() && i - j > *pi.band()) break;
          if (v[static_cast<size_t>(i)] == R(0)) continue;
          acc = acc + v[static_cast<size_t>(i)] * pi.entry(i, j);
        }
      }
      w[static_cast<size_t>(j)] = std::move(acc);
    }
    v = std::move(w);
    hi = std::min(hi + 1, size);
  }
  if (k >= static_cast<int>(v.size())) return R(0);
  return v[static_cast<size_t>(k)];
}

// Leading-minor recurrence for lower-Hessenberg entry functions h(i, j),
// defined for j <= i+1:
//   D_n = sum_j (-1)^(n-1-j) h(n-1, j) * (prod_{i=j}^{n-2} h(i, i+1)) * D_j.
template <Ring S, class EntryFn>
std::vector<S> hessenberg_minor_seq(EntryFn&& h, int upto) {
  std::vector<S> delta;
  delta.reserve(static_cast<size_t>(upto) + 1);
  delta.push_back(S(1));
  for (int n = 1; n <= upto; ++n) {
    S acc(0);
    S superprod(1);
    for (int j = n - 1; j >= 0; --j) {
      S term = h(n - 1, j) * superprod * delta[static_cast<size_t>(j)];
      if ((n - 1 - j) % 2 == 1)
        acc = acc - term;
      else
        acc = acc + term;
      if (j > 0) superprod = superprod * h(j - 1, j);
    }
    delta.push_back(std::move(acc));
  }
  return delta;
}

template <Ring R>
std::vector<R> leading_minors(const HessWindow<R>& pi, int upto) {
  if (upto < 0 || upto > pi.size())
    throw calc_error(errname::domain_error, "minor count out of range");
  return hessenberg_minor_seq<R>(
      [&pi](int i, int j) { return pi.entry(i, j); }, upto);
}

namespace detail {

// Determinant of the leading k x k block, with row pivoting below the pivot
// (sign tracked). Field version: ordinary elimination.
template <Ring R>
R det_field_leading(DenseWindow<R> m, int k) {
  bool negate = false;
  R det(1);
  for (int c = 0; c < k; ++c) {
    int piv = -1;
    for (int r = c; r < k; ++r)
      if (m.at(r, c) != R(0)) {
        piv = r;
        break;
      }
    if (piv < 0) return R(0);
    if (piv != c) {
      for (int j = c; j < k; ++j) std::swap(m.at(c, j), m.at(piv, j));
      negate = !negate;
    }
    det = det * m.at(c, c);
    R inv = *try_inv(m.at(c, c));
    for (int r = c + 1; r < k; ++r) {
      if (m.at(r, c) == R(0)) continue;
      R f = m.at(r, c) * inv;
      for (int j = c; j < k; ++j) m.at(r, j) = m.at(r, j) - f * m.at(c, j);
    }
  }
  return negate ? -det : det;
}

// Fraction-free elimination over an integral domain; divisions by the
// previous pivot are exact.
template <Ring R>
R det_bareiss_leading(DenseWindow<R> m, int k) {
  if (k == 0) return R(1);
  bool negate = false;
  R prev(1);
  for (int c = 0; c + 1 < k; ++c) {
    int piv = -1;
    for (int r = c; r < k; ++r)
      if (m.at(r, c) != R(0)) {
        piv = r;
        break;
      }
    if (piv < 0) return R(0);
    if (piv != c) {
      for (int j = c; j < k; ++j) std::swap(m.at(c, j), m.at(piv, j));
      negate = !negate;
    }
    for (int r = c + 1; r < k; ++r) {
      for (int j = c + 1; j < k; ++j)
        m.at(r, j) = exact_div(m.at(c, c) * m.at(r, j) - m.at(r, c) * m.at(c, j), prev);
      m.at(r, c) = R(0);
    }
    prev = m.at(c, c);
  }
  R det = m.at(k - 1, k - 1);
  return negate ? -det : det;
}

}  // namespace detail

template <Ring R>
R dense_det_leading(const DenseWindow<R>& m, int k) {
  if (k < 0 || k > m.size())
    throw calc_error(errname::domain_error, "minor size out of range");
  if constexpr (is_field_v<R>)
    return detail::det_field_leading(m, k);
  else
    return detail::det_bareiss_leading(m, k);
}

template <Ring R>
R dense_det(const DenseWindow<R>& m) {
  return dense_det_leading(m, m.size());
}

template <Ring R>
std::vector<R> leading_minors(const DenseWindow<R>& m, int upto) {
  if (upto < 0 || upto > m.size())
    throw calc_error(errname::domain_error, "minor count out of range");
  std::vector<R> out;
  out.reserve(static_cast<size_t>(upto) + 1);
  for (int k = 0; k <= upto; ++k) out.push_back(dense_det_leading(m, k));
  return out;
}

// Monic polynomial sequence stored through its unit-lower-triangular
// coefficient matrix: row n holds the x^0..x^n coefficients of P_n.
template <Ring R>
class MonicPolySeq {
public:
  explicit MonicPolySeq(LowTriWindow<R> coeffs) : b_(std::move(coeffs)) {}

  int size() const { return b_.size(); }
  const LowTriWindow<R>& coeff_matrix() const { return b_; }
  UniPoly<R> poly(int n) const {
    std::vector<R> c;
    c.reserve(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) c.push_back(b_.entry(n, j));
    return UniPoly<R>(std::move(c));
  }
  bool operator==(const MonicPolySeq& o) const { return b_ == o.b_; }
  bool operator!=(const MonicPolySeq& o) const { return !(*this == o); }

private:
  LowTriWindow<R> b_;
};

// P_0..P_N with P_n = det(xI - Pi_n), via the minor recurrence over the
// polynomial ring. Needs N window rows (row N-1 feeds P_N).
template <Ring R>
MonicPolySeq<R> charpoly_seq(const HessWindow<R>& pi, int N) {
  if (N < 0 || N > pi.size())
    throw calc_error(errname::window_too_small, "need N production rows for P_0..P_N");
  using P = UniPoly<R>;
  auto entry = [&pi](int i, int j) -> P {
    if (j == i + 1) return P(R(-1));
    if (j == i) return P(std::vector<R>{-pi.entry(i, i), R(1)});
    return P(-pi.entry(i, j));
  };
  std::vector<P> polys = hessenberg_minor_seq<P>(entry, N);
  LowTriWindow<R> b(N + 1);
  for (int n = 0; n <= N; ++n)
    for (int j = 0; j < n; ++j) b.set(n, j, polys[static_cast<size_t>(n)].coeff(j));
  return MonicPolySeq<R>(b);
}

}  // namespace prodmat
