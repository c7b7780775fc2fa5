#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "prodmat/cfrac.hpp"
#include "prodmat/hessenberg.hpp"
#include "prodmat/production.hpp"
#include "prodmat/unipoly.hpp"

namespace prodmat {

// P_0..P_{N-1} generated by the production window through
// P_{n+1} = (x - pi_nn) P_n - sum_{k<n} pi_nk P_k, realized as the inverse of
// the output matrix (the two are identical; the characteristic-polynomial
// route is kept separate for cross-checking).
template <Ring R>
MonicPolySeq<R> polyseq_from_production(const HessWindow<R>& pi, int N) {
  return MonicPolySeq<R>(invert_unit_lower(output_matrix(pi, N)));
}

// Moment matrix of the dual sequence: column k lists L_k(x^n). For a monic
// sequence with coefficient matrix B the duals are the rows of B^{-1}.
template <Ring R>
LowTriWindow<R> dual_functionals(const MonicPolySeq<R>& p) {
  return invert_unit_lower(p.coeff_matrix());
}

template <Ring R>
R apply_functional(const LowTriWindow<R>& a, int k, const UniPoly<R>& p) {
  if (k < 0 || k >= a.size())
    throw calc_error(errname::domain_error, "functional index out of range", k);
  if (p.degree() >= a.size())
    throw calc_error(errname::domain_error, "polynomial degree exceeds the moment window");
  R acc(0);
  for (int i = 0; i <= p.degree(); ++i) acc = acc + p.coeff(i) * a.entry(i, k);
  return acc;
}

// L_k(x^l P_m P_n), computed two independent ways and cross-checked:
//   (a) sum_j b_mj (Pi^{j+l})_{nk}
//   (b) sum_{i,j} b_mi b_nj a_{i+j+l,k}  (shifted-Hankel sandwich)
template <Ring R>
R expectation(const HessWindow<R>& pi, int k, int l, int m, int n) {
  if (k < 0 || l < 0 || m < 0 || n < 0)
    throw calc_error(errname::domain_error, "indices must be nonnegative");
  const int reach = n + m + l;
  if (pi.size() < reach)
    throw calc_error(errname::window_too_small, "need production rows 0..n+m+l-1");
  const LowTriWindow<R> a = output_matrix(pi, reach + 1);
  const LowTriWindow<R> b = invert_unit_lower(a);
  R via_power(0);
  for (int j = 0; j <= m; ++j) {
    if (k > n + j + l) continue;  // walk cannot climb that far
    const R& w = b.entry(m, j);
    if (w == R(0)) continue;
    via_power = via_power + w * hess_power_entry(pi, j + l, n, k);
  }
  R via_hankel(0);
  for (int i = 0; i <= m; ++i) {
    if (b.entry(m, i) == R(0)) continue;
    for (int j = 0; j <= n; ++j) {
      if (k > i + j + l) continue;
      via_hankel = via_hankel + b.entry(m, i) * b.entry(n, j) * a.entry(i + j + l, k);
    }
  }
  if (via_power != via_hankel)
    throw calc_error(errname::consistency_failure,
                     "expectation routes disagree; arithmetic fault");
  return via_power;
}

namespace detail {

template <Ring R>
void require_tridiagonal(const HessWindow<R>& pi) {
  for (int i = 2; i < pi.size(); ++i)
    for (int j = pi.row_lo(i); j < i - 1; ++j)
      if (pi.entry(i, j) != R(0))
        throw calc_error(errname::domain_error, "production window is not tridiagonal", i);
}

}  // namespace detail

// h_k^{-1} h_n (q(Pi) P_k(Pi))_{mn} for tridiagonal Pi, where h_e is the
// product of the first e subdiagonal entries. Indices k > n are rejected:
// the normalized formula is only established for k <= n.
template <Ring R>
R tridiag_expectation(const HessWindow<R>& pi, const UniPoly<R>& q, int k, int m, int n) {
  if (k < 0 || m < 0 || n < 0)
    throw calc_error(errname::domain_error, "indices must be nonnegative");
  if (k > n) throw calc_error(errname::domain_error, "functional index k must satisfy k <= n", k);
  detail::require_tridiagonal(pi);
  const int dq = std::max(q.degree(), 0);
  const int need = std::max({m + dq + k, n + 1, m + 1});
  if (pi.size() < need)
    throw calc_error(errname::window_too_small, "window too small for the requested entry");
  R h_k(1), h_n(1);
  for (int e = 1; e <= n; ++e) {
    const R& sub = pi.entry(e, e - 1);
    if (e <= k) h_k = h_k * sub;
    h_n = h_n * sub;
  }
  auto inv = try_inv(h_k);
  if (!inv)
    throw calc_error(errname::not_invertible, "normalizing constant not invertible", k);
  const UniPoly<R> s = q * polyseq_from_production(pi, k + 1).poly(k);
  R acc(0);
  for (int e = 0; e <= s.degree(); ++e) {
    if (s.coeff(e) == R(0)) continue;
    acc = acc + s.coeff(e) * hess_power_entry(pi, e, m, n);
  }
  return *inv * h_n * acc;
}

// Dense window with entry (i, j) = l_{i+j+shift}.
template <Ring R>
DenseWindow<R> hankel_window(const std::vector<R>& l, int N, int shift) {
  if (N < 1) throw calc_error(errname::domain_error, "window size must be >= 1");
  if (shift < 0) throw calc_error(errname::domain_error, "shift must be >= 0");
  if (static_cast<long>(l.size()) < 2L * N - 1 + shift)
    throw calc_error(errname::insufficient_coefficients,
                     "moment sequence shorter than the window needs", 2L * N - 1 + shift);
  DenseWindow<R> h(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) h.at(i, j) = l[static_cast<size_t>(i + j + shift)];
  return h;
}

template <Ring R>
struct LUFactors {
  LowTriWindow<R> lower;
  DenseWindow<R> upper;
};

// Elimination without pivoting. The pivot at step k must be invertible in
// the coefficient ring; a failure at step k means the leading (k+1)-minor is
// not invertible, and that index is reported.
template <Ring R>
LUFactors<R> lu_factorize(const DenseWindow<R>& g) {
  const int N = g.size();
  LowTriWindow<R> lower(N);
  DenseWindow<R> upper = g;
  for (int k = 0; k + 1 < N; ++k) {
    auto inv = try_inv(upper.at(k, k));
    if (!inv) throw calc_error(errname::singular_minor, "pivot not invertible", k + 1);
    for (int r = k + 1; r < N; ++r) {
      if (upper.at(r, k) == R(0)) continue;
      R f = upper.at(r, k) * (*inv);
      for (int c = k + 1; c < N; ++c) upper.at(r, c) = upper.at(r, c) - f * upper.at(k, c);
      upper.at(r, k) = R(0);
      lower.set(r, k, std::move(f));
    }
  }
  return {std::move(lower), std::move(upper)};
}

// Monic sequence orthogonal to the functional sequence whose moment matrix
// is gamma: B is the inverse of the unit-lower factor of gamma = L U.
template <Ring R>
MonicPolySeq<R> orthopolys_from_gamma(const DenseWindow<R>& gamma, int N) {
  if (N < 1 || N > gamma.size())
    throw calc_error(errname::domain_error, "window size out of range");
  DenseWindow<R> lead(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) lead.at(i, j) = gamma.at(i, j);
  LUFactors<R> lu = lu_factorize(lead);
  return MonicPolySeq<R>(invert_unit_lower(lu.lower));
}

// True when every functional in the window annihilates every later
// polynomial: (B Gamma)_{nk} = 0 for k < n.
template <Ring R>
bool check_orthogonality(const MonicPolySeq<R>& p, const DenseWindow<R>& gamma) {
  const int N = std::min(p.size(), gamma.size());
  const LowTriWindow<R>& b = p.coeff_matrix();
  for (int n = 1; n < N; ++n)
    for (int k = 0; k < n; ++k) {
      R acc(0);
      for (int t = 0; t <= n; ++t) acc = acc + b.entry(n, t) * gamma.at(t, k);
      if (acc != R(0)) return false;
    }
  return true;
}

// Verifies H_N = J diag(1, beta_1, beta_1 beta_2, ...) J^T exactly, where J
// is the output matrix of the tridiagonal window and H_N the Hankel window
// of its moments. Closed walks of length <= 2N-2 never touch coefficients
// beyond gamma_{N-2} / beta_{N-1}, so zero padding is inert.
template <Ring R>
bool hankel_ldlt_check(const std::vector<R>& gamma, const std::vector<R>& beta, int N) {
  if (N < 1) throw calc_error(errname::domain_error, "window size must be >= 1");
  if (N == 1) return true;  // H_1 = [1] = J D J^T trivially
  if (static_cast<int>(gamma.size()) < N - 1 || static_cast<int>(beta.size()) < N - 1)
    throw calc_error(errname::insufficient_coefficients,
                     "need gamma_0..gamma_{N-2} and beta_1..beta_{N-1}", N - 1);
  const int W = 2 * N - 2;
  JFraction<R> padded;
  padded.gamma.assign(gamma.begin(), gamma.begin() + (N - 1));
  padded.gamma.resize(static_cast<size_t>(W), R(0));
  padded.beta.assign(beta.begin(), beta.begin() + (N - 1));
  padded.beta.resize(static_cast<size_t>(W - 1), R(0));
  const std::vector<R> moments = moments_from_production(jfrac_production(padded, W), 2 * N - 1);
  const DenseWindow<R> h = hankel_window(moments, N, 0);

  JFraction<R> jf;
  jf.gamma.assign(gamma.begin(), gamma.begin() + (N - 1));
  jf.beta.assign(beta.begin(), beta.begin() + (N - 2));
  const DenseWindow<R> j = to_dense(output_matrix(jfrac_production(jf, N - 1), N));
  DenseWindow<R> d(N);
  d.at(0, 0) = R(1);
  for (int i = 1; i < N; ++i) d.at(i, i) = d.at(i - 1, i - 1) * beta[static_cast<size_t>(i - 1)];
  return h == dense_mul(dense_mul(j, d), dense_transpose(j));
}

// Expansion of a normalized moment sequence into tridiagonal coefficients:
// LU-factor the Hankel window, conjugate the unit-lower factor, read off the
// diagonal and subdiagonal. A singular minor triggers one retry truncated at
// the failing index; if the truncated expansion padded with zeros reproduces
// every supplied moment (finitely supported functional), it is returned with
// the degenerate flag and a trailing zero beta, otherwise the sequence has no
// expansion window of the requested size and the failing index is reported.
template <Ring R>
JFraction<R> moments_to_jfrac(const std::vector<R>& l, int N) {
  if (N < 2) throw calc_error(errname::domain_error, "window size must be >= 2");
  if (static_cast<long>(l.size()) < 2L * N - 1)
    throw calc_error(errname::insufficient_coefficients, "need moments l_0..l_{2N-2}",
                     2L * N - 1);
  if (l[0] != R(1))
    throw calc_error(errname::domain_error, "moment sequence must be normalized to l_0 = 1");

  auto extract = [&l](int M) -> JFraction<R> {
    LUFactors<R> lu = lu_factorize(hankel_window(l, M, 0));
    const HessWindow<R> pi = production_from_output(lu.lower);
    for (int i = 2; i < pi.size(); ++i)
      for (int j = 0; j < i - 1; ++j)
        if (pi.entry(i, j) != R(0))
          throw calc_error(errname::consistency_failure,
                           "Hankel conjugation produced a non-tridiagonal window", i);
    JFraction<R> jf;
    for (int n = 0; n < pi.size(); ++n) {
      jf.gamma.push_back(pi.entry(n, n));
      if (n >= 1) jf.beta.push_back(pi.entry(n, n - 1));
    }
    return jf;
  };

  try {
    return extract(N);
  } catch (const calc_error& e) {
    if (e.name() != errname::singular_minor) throw;
    const int M = static_cast<int>(*e.index());
    JFraction<R> jf = extract(M);  // minors 1..M-1 invertible, cannot fail
    jf.beta.push_back(R(0));
    jf.degenerate = true;
    // the truncated expansion must account for every supplied moment
    const int W = std::max(1, static_cast<int>(l.size()) - 1);
    JFraction<R> padded = jf;
    padded.gamma.resize(static_cast<size_t>(W), R(0));
    padded.beta.resize(static_cast<size_t>(W - 1), R(0));
    const std::vector<R> back =
        moments_from_production(jfrac_production(padded, W), static_cast<int>(l.size()));
    if (back != l)
      throw calc_error(errname::not_normal, "Hankel minor not invertible", M);
    return jf;
  }
}

}  // namespace prodmat
