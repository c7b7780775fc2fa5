#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

#include "prodmat/hessenberg.hpp"
#include "prodmat/windows.hpp"

namespace prodmat {

namespace detail {

// Row recurrence a_{nk} = a_{n-1,k-1} + sum_{i=k}^{min(n-1,k+d)} a_{n-1,i} pi_{ik}.
// Row n never reads production rows past n-1, so N output rows need N-1
// production rows.
template <Ring R, bool Parallel>
LowTriWindow<R> output_matrix_impl(const HessWindow<R>& pi, int N) {
  if (N < 1) throw calc_error(errname::domain_error, "need at least one output row");
  if (pi.size() < N - 1)
    throw calc_error(errname::window_too_small,
                     "production window needs at least N-1 rows for N output rows");
  LowTriWindow<R> a(N);
  std::vector<R> prev{R(1)};  // row 0 = e_0
  for (int n = 1; n < N; ++n) {
    std::vector<R> cur(static_cast<size_t>(n) + 1, R(0));
    const int d = pi.band() ? *pi.band() : pi.size();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (Parallel && n > 24)
#endif
    for (int k = 0; k <= n; ++k) {
      R acc = (k >= 1) ? prev[static_cast<size_t>(k - 1)] : R(0);
      const int top = std::min(n - 1, k + d);
      for (int i = k; i <= top; ++i) {
        if (prev[static_cast<size_t>(i)] == R(0)) continue;
        acc = acc + prev[static_cast<size_t>(i)] * pi.entry(i, k);
      }
      cur[static_cast<size_t>(k)] = std::move(acc);
    }
    for (int k = 0; k < n; ++k) a.set(n, k, cur[static_cast<size_t>(k)]);
    if (cur[static_cast<size_t>(n)] != R(1))
      throw calc_error(errname::consistency_failure, "output row lost unitriangularity");
    prev = std::move(cur);
  }
  return a;
}

}  // namespace detail

template <Ring R>
LowTriWindow<R> output_matrix(const HessWindow<R>& pi, int N) {
  return detail::output_matrix_impl<R, true>(pi, N);
}

// Reference implementation with the parallel path disabled; kept for
// equivalence tests and benchmarking.
template <Ring R>
LowTriWindow<R> output_matrix_serial(const HessWindow<R>& pi, int N) {
  return detail::output_matrix_impl<R, false>(pi, N);
}

// Pi = A^{-1} Delta A; one row shorter than A.
template <Ring R>
HessWindow<R> production_from_output(const LowTriWindow<R>& a) {
  return conjugate_shift(invert_unit_lower(a));
}

// Column 0 of the output matrix: the moment sequence of the walk weights.
template <Ring R>
std::vector<R> moments_from_production(const HessWindow<R>& pi, int N) {
  LowTriWindow<R> a = output_matrix(pi, N);
  std::vector<R> out;
  out.reserve(static_cast<size_t>(N));
  for (int n = 0; n < N; ++n) out.push_back(a.entry(n, 0));
  return out;
}

}  // namespace prodmat
