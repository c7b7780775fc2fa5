#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

#include <utility>
#include <vector>

#include "prodmat/windows.hpp"

namespace prodmat {

// Exhaustive depth-first enumerations with exact weights. These are the
// ground-truth oracles for the matrix algebra, so they deliberately share no
// code with the window recurrences and carry no memoization.

namespace detail {

// Walks on the nonnegative integers with steps h -> j, 0 <= j <= h+1; rise
// weight 1 (structural), other steps weighted by the window entry.
template <Ring R>
void lukasiewicz_dfs(const HessWindow<R>& pi, int h, int rem, int target, const R& weight,
                     R& acc) {
  if (rem == 0) {
    if (h == target) acc = acc + weight;
    return;
  }
  // rise: always weight 1
  if (h + 1 + (rem - 1) >= target)
    lukasiewicz_dfs(pi, h + 1, rem - 1, target, weight, acc);
  // level or fall: weight pi_{hj}; only stored-band steps can be nonzero
  for (int j = pi.row_lo(h); j <= h; ++j) {
    if (j + (rem - 1) < target) continue;  // cannot climb back in time
    const R& w = pi.entry(h, j);
    if (w == R(0)) continue;
    lukasiewicz_dfs(pi, j, rem - 1, target, weight * w, acc);
  }
}

template <Ring R>
R lukasiewicz_run(const HessWindow<R>& pi, int n, int k, bool parallel) {
  if (n < 0 || k < 0) throw calc_error(errname::domain_error, "negative walk index");
  if (n > 0 && pi.size() < n)
    throw calc_error(errname::window_too_small, "window must cover heights 0..n-1");
  if (k > n) return R(0);
  if (n == 0) return k == 0 ? R(1) : R(0);
  // expand the first step, then enumerate branches independently; exact
  // addition makes the combination order irrelevant, summed in index order
  std::vector<std::pair<int, R>> branches;
  branches.emplace_back(1, R(1));
  for (int j = pi.row_lo(0); j <= 0; ++j)
    if (pi.entry(0, j) != R(0)) branches.emplace_back(j, pi.entry(0, j));
  std::vector<R> partial(branches.size(), R(0));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int b = 0; b < static_cast<int>(branches.size()); ++b)
    lukasiewicz_dfs(pi, branches[static_cast<size_t>(b)].first, n - 1, k,
                    branches[static_cast<size_t>(b)].second, partial[static_cast<size_t>(b)]);
  R acc(0);
  for (const R& p : partial) acc = acc + p;
  return acc;
}

}  // namespace detail

template <Ring R>
R lukasiewicz_weight_sum(const HessWindow<R>& pi, int n, int k) {
  return detail::lukasiewicz_run(pi, n, k, true);
}

template <Ring R>
R lukasiewicz_weight_sum_serial(const HessWindow<R>& pi, int n, int k) {
  return detail::lukasiewicz_run(pi, n, k, false);
}

namespace detail {

// Motzkin steps: +1 weight 1, level at height h weight gamma[h], -1 from
// height h weight beta[h-1] (beta[0] is the fall 1 -> 0).
template <Ring R>
void motzkin_dfs(const std::vector<R>& beta, const std::vector<R>& gamma, int h, int rem,
                 int target, const R& weight, R& acc) {
  if (rem == 0) {
    if (h == target) acc = acc + weight;
    return;
  }
  if (h - target > rem || target - h > rem) return;
  motzkin_dfs(beta, gamma, h + 1, rem - 1, target, weight, acc);
  {
    if (static_cast<size_t>(h) >= gamma.size())
      throw calc_error(errname::insufficient_coefficients,
                       "gamma sequence shorter than reached height", h);
    const R& w = gamma[static_cast<size_t>(h)];
    if (w != R(0)) motzkin_dfs(beta, gamma, h, rem - 1, target, weight * w, acc);
  }
  if (h >= 1) {
    if (static_cast<size_t>(h - 1) >= beta.size())
      throw calc_error(errname::insufficient_coefficients,
                       "beta sequence shorter than reached height", h);
    const R& w = beta[static_cast<size_t>(h - 1)];
    if (w != R(0)) motzkin_dfs(beta, gamma, h - 1, rem - 1, target, weight * w, acc);
  }
}

}  // namespace detail

// Partial-Motzkin generating polynomial J_{n,k}: n steps from height 0 to
// height k.
template <Ring R>
R motzkin_Jnk(const std::vector<R>& beta, const std::vector<R>& gamma, int n, int k) {
  if (n < 0 || k < 0) throw calc_error(errname::domain_error, "negative path index");
  if (k > n) return R(0);
  R acc(0);
  detail::motzkin_dfs(beta, gamma, 0, n, k, R(1), acc);
  return acc;
}

namespace detail {

// m-Dyck steps: +1 weight 1, -m from height h weight alpha[h - m]
// (alpha[0] is the weight index m). Endpoint heights are multiples of m+1.
template <Ring R>
void mdyck_dfs(const std::vector<R>& alpha, int m, int h, int rem, int target, const R& weight,
               R& acc) {
  if (rem == 0) {
    if (h == target) acc = acc + weight;
    return;
  }
  // rises r and falls f with r + f = rem and h + r - m f = target force
  // r = (target - h + m*rem) / (m+1) to be integral and within range
  const int num = target - h + m * rem;
  if (num % (m + 1) != 0) return;
  const int rises = num / (m + 1);
  if (rises < 0 || rises > rem) return;
  mdyck_dfs(alpha, m, h + 1, rem - 1, target, weight, acc);
  if (h >= m) {
    if (static_cast<size_t>(h - m) >= alpha.size())
      throw calc_error(errname::insufficient_coefficients,
                       "alpha sequence shorter than reached height", h);
    const R& w = alpha[static_cast<size_t>(h - m)];
    if (w != R(0)) mdyck_dfs(alpha, m, h - m, rem - 1, target, weight * w, acc);
  }
}

}  // namespace detail

// Partial-m-Dyck generating polynomial S^(m)_{n,k}: (m+1)n steps from 0 to
// height (m+1)k, never below 0. alpha[i] carries the fall weight from height
// i + m.
template <Ring R>
R mdyck_Snk(const std::vector<R>& alpha, int m, int n, int k) {
  if (m < 1) throw calc_error(errname::domain_error, "branch order must be >= 1");
  if (n < 0 || k < 0) throw calc_error(errname::domain_error, "negative path index");
  if (k > n) return R(0);
  R acc(0);
  detail::mdyck_dfs(alpha, m, 0, (m + 1) * n, (m + 1) * k, R(1), acc);
  return acc;
}

namespace detail {

// Partitions of {0..n-1} into intervals [k,l] (weight -pi_{lk}) and exactly
// j empty sites.
template <Ring R>
void interval_dfs(const HessWindow<R>& pi, int n, int pos, int empties, int want_empties,
                  const R& weight, R& acc) {
  if (pos == n) {
    if (empties == want_empties) acc = acc + weight;
    return;
  }
  if (empties < want_empties)
    interval_dfs(pi, n, pos + 1, empties + 1, want_empties, weight, acc);
  for (int l = pos; l < n; ++l)
    interval_dfs(pi, n, l + 1, empties, want_empties, weight * (-pi.entry(l, pos)), acc);
}

}  // namespace detail

// Coefficient b_{nj} of the inverse output matrix via interval partitions.
template <Ring R>
R viennot_coeff(const HessWindow<R>& pi, int n, int j) {
  if (n < 0 || j < 0 || j > n) return R(0);
  if (n > pi.size())
    throw calc_error(errname::window_too_small, "window must cover rows 0..n-1");
  R acc(0);
  detail::interval_dfs(pi, n, 0, 0, j, R(1), acc);
  return acc;
}

}  // namespace prodmat
