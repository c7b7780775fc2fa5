#pragma once

#include <utility>
#include <vector>

#include "prodmat/cfrac.hpp"
#include "prodmat/factorials.hpp"
#include "prodmat/mop.hpp"
#include "prodmat/unipoly.hpp"

namespace prodmat {

// Measure family with rising-factorial moments a1(a1+1)...(a1+n-1) times the
// same in a2. Parameters are symmetric; the second functional of its
// two-functional system bumps a1 by one.
template <Ring R>
struct BesselKParams {
  R a1;
  R a2;
};

template <Ring R>
std::vector<R> besselK_moments(const BesselKParams<R>& p, int N) {
  if (N < 1) throw calc_error(errname::domain_error, "need at least one moment");
  std::vector<R> out;
  out.reserve(static_cast<size_t>(N));
  for (int n = 0; n < N; ++n)
    out.push_back(rising_factorial(p.a1, n) * rising_factorial(p.a2, n));
  return out;
}

// Four-term recurrence window:
//   pi_nn     = a1 a2 + (2 a1 + 2 a2 - 1) n + 3 n^2
//   pi_n,n-1  = n (a1+n-1)(a2+n-1)(a1+a2+3n-2)
//   pi_n,n-2  = n (n-1) (a1+n-1)(a1+n-2)(a2+n-1)(a2+n-2)
template <Ring R>
HessWindow<R> besselK_production(const BesselKParams<R>& p, int N) {
  if (N < 1) throw calc_error(errname::domain_error, "window size must be >= 1");
  HessWindow<R> pi(N, 2);
  for (int n = 0; n < N; ++n) {
    const R rn(n);
    pi.set(n, n, p.a1 * p.a2 + (p.a1 * 2 + p.a2 * 2 - R(1)) * rn + rn * rn * 3);
    if (n >= 1) {
      const R f1 = p.a1 + rn - R(1);
      const R f2 = p.a2 + rn - R(1);
      pi.set(n, n - 1, rn * f1 * f2 * (p.a1 + p.a2 + rn * 3 - R(2)));
      if (n >= 2)
        pi.set(n, n - 2,
               rn * (rn - R(1)) * f1 * (p.a1 + rn - R(2)) * f2 * (p.a2 + rn - R(2)));
    }
  }
  return pi;
}

// Closed form for the full output triangle of the window above:
// binom(n,k) (a1+k)^{rising n-k} (a2+k)^{rising n-k}.
template <Ring R>
R besselK_Snk(const BesselKParams<R>& p, int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw calc_error(errname::domain_error, "triangle index out of range");
  return binomial<R>(n, k) * rising_factorial(p.a1 + R(k), n - k) *
         rising_factorial(p.a2 + R(k), n - k);
}

template <Ring R>
MOPSystem<R> besselK_mop_system(const BesselKParams<R>& p, int len) {
  BesselKParams<R> bumped{p.a1 + R(1), p.a2};
  return MOPSystem<R>(2, {besselK_moments(p, len), besselK_moments(bumped, len)});
}

// Branch coefficients generated from a pre-alpha stream: entry q(m+1)+s of
// the stream (s = 1..m+1) is a_s + q, and alpha_{m+j} multiplies m
// consecutive stream entries starting at position j+1.
template <Ring R>
SFraction<R> hyper_alphas(int m, const std::vector<R>& a, int count) {
  if (m < 1) throw calc_error(errname::domain_error, "branch order must be >= 1");
  if (static_cast<int>(a.size()) != m + 1)
    throw calc_error(errname::domain_error, "need exactly m+1 seed parameters");
  if (count < 0) throw calc_error(errname::domain_error, "count must be >= 0");
  auto stream = [&a, m](long t) {  // t >= 1
    const long q = (t - 1) / (m + 1);
    const long s = (t - 1) % (m + 1);
    return a[static_cast<size_t>(s)] + R(q);
  };
  std::vector<R> alpha;
  alpha.reserve(static_cast<size_t>(count));
  for (long j = 0; j < count; ++j) {
    R prod(1);
    for (long t = j + 1; t <= j + m; ++t) prod = prod * stream(t);
    alpha.push_back(std::move(prod));
  }
  return SFraction<R>(m, std::move(alpha));
}

// Quadridiagonal window written directly in the branch coefficients
// (branch order 2), with alpha_0 = alpha_1 = 0:
//   pi_nn     = alpha_{3n} + alpha_{3n+1} + alpha_{3n+2}
//   pi_n,n-1  = alpha_{3n-2} alpha_{3n} + alpha_{3n-1} alpha_{3n} + alpha_{3n-1} alpha_{3n+1}
//   pi_n,n-2  = alpha_{3n-4} alpha_{3n-2} alpha_{3n}
template <Ring R>
HessWindow<R> quad_from_alphas(const SFraction<R>& sf, int N) {
  if (sf.m != 2) throw calc_error(errname::domain_error, "window formula requires branch order 2");
  if (N < 1) throw calc_error(errname::domain_error, "window size must be >= 1");
  const long need = 3L * (N - 1) + 2;
  if (sf.max_index() < need)
    throw calc_error(errname::insufficient_coefficients,
                     "alpha sequence too short for requested window", need);
  HessWindow<R> pi(N, 2);
  for (long n = 0; n < N; ++n) {
    pi.set(static_cast<int>(n), static_cast<int>(n),
           sf.at(3 * n) + sf.at(3 * n + 1) + sf.at(3 * n + 2));
    if (n >= 1)
      pi.set(static_cast<int>(n), static_cast<int>(n - 1),
             sf.at(3 * n - 2) * sf.at(3 * n) + sf.at(3 * n - 1) * sf.at(3 * n) +
                 sf.at(3 * n - 1) * sf.at(3 * n + 1));
    if (n >= 2)
      pi.set(static_cast<int>(n), static_cast<int>(n - 2),
             sf.at(3 * n - 4) * sf.at(3 * n - 2) * sf.at(3 * n));
  }
  return pi;
}

// Monic Laguerre-type polynomial with positive coefficients:
// sum_k binom(n,k) (n+alpha)^{falling n-k} x^k.
template <Ring R>
UniPoly<R> monic_laguerre(int n, const R& alpha) {
  if (n < 0) throw calc_error(errname::domain_error, "degree must be >= 0");
  std::vector<R> c;
  c.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    c.push_back(binomial<R>(n, k) * falling_factorial(R(n) + alpha, n - k));
  return UniPoly<R>(std::move(c));
}

template <Ring R>
R monic_laguerre(int n, const R& alpha, const R& x) {
  return monic_laguerre(n, alpha).eval(x);
}

template <Ring R>
struct BesselIParams {
  R alpha;
  R xi;
};

template <Ring R>
std::vector<R> besselI_moments(const BesselIParams<R>& p, int N) {
  if (N < 1) throw calc_error(errname::domain_error, "need at least one moment");
  std::vector<R> out;
  out.reserve(static_cast<size_t>(N));
  for (int n = 0; n < N; ++n) out.push_back(monic_laguerre(n, p.alpha, p.xi));
  return out;
}

// Four-term recurrence window:
//   pi_nn     = (2n + 1 + alpha) + xi
//   pi_n,n-1  = n (n + alpha) + 2 n xi
//   pi_n,n-2  = n (n-1) xi
template <Ring R>
HessWindow<R> besselI_production(const BesselIParams<R>& p, int N) {
  if (N < 1) throw calc_error(errname::domain_error, "window size must be >= 1");
  HessWindow<R> pi(N, 2);
  for (int n = 0; n < N; ++n) {
    const R rn(n);
    pi.set(n, n, rn * 2 + R(1) + p.alpha + p.xi);
    if (n >= 1) pi.set(n, n - 1, rn * (rn + p.alpha) + rn * 2 * p.xi);
    if (n >= 2) pi.set(n, n - 2, rn * (rn - R(1)) * p.xi);
  }
  return pi;
}

// Closed-form polynomial along the diagonal path of the two-functional
// system: (-1)^n sum_k binom(n,k) xi^{n-k} L_k(-x), realized by flipping the
// sign of every odd coefficient of L_k.
template <Ring R>
UniPoly<R> besselI_stepline_poly(const BesselIParams<R>& p, int n) {
  if (n < 0) throw calc_error(errname::domain_error, "degree must be >= 0");
  UniPoly<R> acc;
  R xipow(1);  // xi^{n-k}, built from the top
  std::vector<R> xp(static_cast<size_t>(n) + 1);
  for (int e = n; e >= 0; --e) {
    xp[static_cast<size_t>(e)] = xipow;
    xipow = xipow * p.xi;
  }
  for (int k = 0; k <= n; ++k) {
    const UniPoly<R> lk = monic_laguerre(k, p.alpha);
    std::vector<R> c;
    c.reserve(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
      R v = lk.coeff(i);
      if (i % 2 == 1) v = -v;
      c.push_back(std::move(v));
    }
    acc = acc + UniPoly<R>(std::move(c)).scaled(binomial<R>(n, k) * xp[static_cast<size_t>(k)]);
  }
  if (n % 2 == 1) acc = acc.scaled(R(-1));
  return acc;
}

template <Ring R>
MOPSystem<R> besselI_mop_system(const BesselIParams<R>& p, int len) {
  BesselIParams<R> bumped{p.alpha + R(1), p.xi};
  return MOPSystem<R>(2, {besselI_moments(p, len), besselI_moments(bumped, len)});
}

}  // namespace prodmat
