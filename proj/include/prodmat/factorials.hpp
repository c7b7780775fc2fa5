#pragma once

#include "prodmat/ring.hpp"

namespace prodmat {

// a(a+1)...(a+n-1); empty product for n = 0.
template <Ring R>
R rising_factorial(const R& a, int n) {
  R acc(1);
  for (int i = 0; i < n; ++i) acc = acc * (a + R(i));
  return acc;
}

// a(a-1)...(a-n+1); empty product for n = 0.
template <Ring R>
R falling_factorial(const R& a, int n) {
  R acc(1);
  for (int i = 0; i < n; ++i) acc = acc * (a - R(i));
  return acc;
}

inline unsigned long long binom_ull(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned long long>(n - k + i);
    acc /= static_cast<unsigned long long>(i);
  }
  return acc;
}

template <Ring R>
R binomial(int n, int k) {
  return R(static_cast<long>(binom_ull(n, k)));
}

}  // namespace prodmat
