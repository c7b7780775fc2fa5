#pragma once

#include <utility>
#include <vector>

#include "prodmat/production.hpp"
#include "prodmat/series.hpp"

namespace prodmat {

// Coefficients of a tridiagonal expansion: gamma[n] sits on the diagonal,
// beta[n-1] carries beta_n on the subdiagonal. A trailing zero beta produced
// by expanding a finitely supported moment sequence marks the expansion as
// degenerate (unique only up to that point).
template <Ring R>
struct JFraction {
  std::vector<R> gamma;
  std::vector<R> beta;
  bool degenerate = false;

  bool operator==(const JFraction& o) const {
    return gamma == o.gamma && beta == o.beta && degenerate == o.degenerate;
  }
};

// Branched coefficients alpha_m, alpha_{m+1}, ...; alpha[0] holds alpha_m.
template <Ring R>
struct SFraction {
  int m = 1;
  std::vector<R> alpha;

  SFraction() = default;
  SFraction(int m_, std::vector<R> alpha_) : m(m_), alpha(std::move(alpha_)) {
    if (m < 1) throw calc_error(errname::domain_error, "branch order must be >= 1");
  }

  // alpha_i with indices below m fixed at zero
  const R& at(long i) const {
    if (i < m) return zero();
    const size_t pos = static_cast<size_t>(i - m);
    if (pos >= alpha.size())
      throw calc_error(errname::insufficient_coefficients,
                       "alpha sequence ends before requested index", i);
    return alpha[pos];
  }
  long max_index() const { return m + static_cast<long>(alpha.size()) - 1; }

  bool operator==(const SFraction& o) const { return m == o.m && alpha == o.alpha; }

private:
  static const R& zero() {
    static const R z(0);
    return z;
  }
};

template <Ring R>
HessWindow<R> jfrac_production(const JFraction<R>& jf, int N) {
  if (N < 1) throw calc_error(errname::domain_error, "window size must be >= 1");
  if (static_cast<int>(jf.gamma.size()) < N)
    throw calc_error(errname::insufficient_coefficients, "need gamma_0..gamma_{N-1}", N);
  if (static_cast<int>(jf.beta.size()) < N - 1)
    throw calc_error(errname::insufficient_coefficients, "need beta_1..beta_{N-1}", N);
  HessWindow<R> pi(N, 1);
  for (int n = 0; n < N; ++n) {
    pi.set(n, n, jf.gamma[static_cast<size_t>(n)]);
    if (n >= 1) pi.set(n, n - 1, jf.beta[static_cast<size_t>(n - 1)]);
  }
  return pi;
}

template <Ring R>
JFraction<R> contract_s_to_j(const SFraction<R>& sf) {
  if (sf.m != 1) throw calc_error(errname::domain_error, "contraction requires branch order 1");
  const long M = sf.max_index();
  JFraction<R> jf;
  if (M < 1) return jf;
  jf.gamma.push_back(sf.at(1));
  for (long n = 1; 2 * n + 1 <= M; ++n) jf.gamma.push_back(sf.at(2 * n) + sf.at(2 * n + 1));
  for (long n = 1; 2 * n <= M; ++n) jf.beta.push_back(sf.at(2 * n - 1) * sf.at(2 * n));
  return jf;
}

// Coefficients l_1, l_2, ... of the equivalent ascending expansion,
// normalized so l_1 = 1; alphas alpha_1..alpha_M give l_1..l_{M+1}.
// l_{2k-1} = (alpha_1 alpha_3...alpha_{2k-3}) / (alpha_2 alpha_4...alpha_{2k-2})
// l_{2k}   = (alpha_2 alpha_4...alpha_{2k-2}) / (alpha_1 alpha_3...alpha_{2k-1})
template <Ring R>
std::vector<R> wall_translation(const SFraction<R>& sf) {
  if (sf.m != 1) throw calc_error(errname::domain_error, "translation requires branch order 1");
  const long M = sf.max_index();
  std::vector<R> l;
  l.push_back(R(1));
  R odd(1), even(1);  // running products over odd- and even-indexed alphas
  for (long j = 2; j <= M + 1; ++j) {
    const R& a = sf.at(j - 1);
    if (!try_inv(a))
      throw calc_error(errname::not_invertible, "alpha coefficient not invertible", j - 1);
    if (j % 2 == 0) {
      odd = odd * a;  // a = alpha_{j-1}, j-1 odd
      l.push_back(even / odd);
    } else {
      even = even * a;  // a = alpha_{j-1}, j-1 even
      l.push_back(odd / even);
    }
  }
  return l;
}

// Inverse of wall_translation: l_1..l_M recover alpha_1..alpha_{M-1}
// via alpha_1 = 1/l_2 and alpha_n = 1/(l_n l_{n+1}) for n >= 2.
template <Ring R>
SFraction<R> alpha_from_wall(const std::vector<R>& l) {
  if (l.empty() || l[0] != R(1))
    throw calc_error(errname::domain_error, "translation requires l_1 = 1");
  const long M = static_cast<long>(l.size());
  std::vector<R> alpha;
  for (long n = 1; n + 1 <= M; ++n) {
    const R denom = n == 1 ? l[1] : l[static_cast<size_t>(n - 1)] * l[static_cast<size_t>(n)];
    auto inv = try_inv(denom);
    if (!inv) throw calc_error(errname::not_invertible, "wall coefficient not invertible", n);
    alpha.push_back(*inv);
  }
  return SFraction<R>(1, std::move(alpha));
}

// Production matrix of the branched expansion: the product of m
// lower-bidiagonal factors (unit diagonal, subdiagonal entries drawn from the
// alpha stream) and one upper-bidiagonal factor (unit superdiagonal, alpha
// diagonal). The result is (m,1)-banded.
template <Ring R>
HessWindow<R> mbranched_production(const SFraction<R>& sf, int N) {
  if (N < 1) throw calc_error(errname::domain_error, "window size must be >= 1");
  const int m = sf.m;
  const long need = m + static_cast<long>(N - 1) * (m + 1);
  if (sf.max_index() < need)
    throw calc_error(errname::insufficient_coefficients,
                     "alpha sequence too short for requested window", need);
  // leading window of the running product; each left factor only adds a
  // multiple of the previous row, so the window stays exact
  DenseWindow<R> acc(N);
  for (int r = 0; r < N; ++r) {
    acc.at(r, r) = sf.at(m + static_cast<long>(r) * (m + 1));
    if (r + 1 < N) acc.at(r, r + 1) = R(1);
  }
  for (int j = m; j >= 1; --j) {
    // row_r += s_r * row_{r-1}; descending r keeps the unmodified row r-1
    for (int r = N - 1; r >= 1; --r) {
      const R& s = sf.at((m + j) + static_cast<long>(r - 1) * (m + 1));
      for (int c = 0; c < N; ++c) acc.at(r, c) = acc.at(r, c) + s * acc.at(r - 1, c);
    }
  }
  HessWindow<R> pi(N, m);
  for (int n = 0; n < N; ++n)
    for (int k = 0; k < N; ++k) {
      if (k == n + 1) {
        if (acc.at(n, k) != R(1))
          throw calc_error(errname::consistency_failure,
                           "branched product lost its unit superdiagonal", n);
      } else if (k > n + 1 || k < pi.row_lo(n)) {
        if (acc.at(n, k) != R(0))
          throw calc_error(errname::consistency_failure, "branched product exceeded its band",
                           n);
      } else {
        pi.set(n, k, acc.at(n, k));
      }
    }
  return pi;
}

// Truncated generating series sum_n moments_n t^n of a branched expansion
// whose alpha stream is shifted by j (alpha_i replaced by alpha_{i+j}).
template <Ring R>
TruncSeries<R> branched_series(const SFraction<R>& sf, long shift, int order) {
  if (order < 1) throw calc_error(errname::domain_error, "series order must be >= 1");
  std::vector<R> shifted;
  for (long i = sf.m; i + shift <= sf.max_index(); ++i) shifted.push_back(sf.at(i + shift));
  const SFraction<R> s(sf.m, std::move(shifted));
  std::vector<R> coeffs;
  if (order == 1) {
    coeffs.push_back(R(1));
  } else {
    coeffs = moments_from_production(mbranched_production(s, order - 1), order);
  }
  return TruncSeries<R>(order, std::move(coeffs));
}

// Checks the fixed-point identity f_k = 1 + alpha_{k+m} t f_k f_{k+1}...f_{k+m}
// exactly through the given truncation order, where f_j is the moment series
// of the expansion with alphas shifted by j.
template <Ring R>
bool verify_functional_equation(const SFraction<R>& sf, int m, int k, int order) {
  if (m != sf.m) throw calc_error(errname::domain_error, "branch order mismatch");
  if (k < 0) throw calc_error(errname::domain_error, "shift must be >= 0");
  TruncSeries<R> rhs = branched_series(sf, k, order);  // f_k
  const TruncSeries<R> lhs = rhs;
  for (int j = k + 1; j <= k + m; ++j) rhs = rhs * branched_series(sf, j, order);
  rhs = rhs.shifted_up().scaled(sf.at(k + m)) + TruncSeries<R>::one(order);
  return lhs == rhs;
}

}  // namespace prodmat
