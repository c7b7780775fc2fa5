#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

#include <exception>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "prodmat/hessenberg.hpp"
#include "prodmat/production.hpp"
#include "prodmat/unipoly.hpp"

namespace prodmat {

// Moment data of r linear functionals; moments[j][n] is the nth moment of
// functional j+1. Solves require a field, so R must support try_inv with
// every nonzero element invertible.
template <Ring R>
struct MOPSystem {
  int r = 1;
  std::vector<std::vector<R>> moments;

  MOPSystem() = default;
  MOPSystem(int r_, std::vector<std::vector<R>> m) : r(r_), moments(std::move(m)) {
    if (r < 1) throw calc_error(errname::domain_error, "need at least one functional");
    if (static_cast<int>(moments.size()) != r)
      throw calc_error(errname::domain_error, "moment row count must equal r");
    for (const auto& seq : moments)
      if (seq.size() != moments[0].size())
        throw calc_error(errname::domain_error, "moment sequences must have equal length");
  }

  int available() const { return moments.empty() ? 0 : static_cast<int>(moments[0].size()); }
};

struct MultiIndex {
  std::vector<long> entries;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<long> e) : entries(std::move(e)) {
    for (long v : entries)
      if (v < 0) throw calc_error(errname::domain_error, "multi-index entries must be >= 0");
  }
  long weight() const { return std::accumulate(entries.begin(), entries.end(), 0L); }
  bool operator==(const MultiIndex& o) const { return entries == o.entries; }
};

// Nearest-neighbor path: directions[i] in 1..r names the coordinate bumped
// by step i+1.
struct NNPath {
  std::vector<int> directions;
};

inline MultiIndex stepline_index(int r, int n) {
  if (r < 1) throw calc_error(errname::domain_error, "need at least one functional");
  if (n < 0) throw calc_error(errname::domain_error, "weight must be >= 0");
  std::vector<long> e;
  e.reserve(static_cast<size_t>(r));
  for (int i = 1; i <= r; ++i) e.push_back((n + r - i) / r);
  return MultiIndex(std::move(e));
}

namespace detail {

template <Ring R>
void check_mop_index(const MOPSystem<R>& sys, const MultiIndex& n) {
  if (static_cast<int>(n.entries.size()) != sys.r)
    throw calc_error(errname::domain_error, "multi-index length must equal r");
}

// Solve M x = rhs over a field by elimination with row interchanges.
template <Ring R>
std::optional<std::vector<R>> solve_linear(std::vector<std::vector<R>> m, std::vector<R> rhs) {
  static_assert(is_field_v<R>, "linear solves require a field");
  const int W = static_cast<int>(rhs.size());
  for (int c = 0; c < W; ++c) {
    int piv = -1;
    for (int r2 = c; r2 < W; ++r2)
      if (m[static_cast<size_t>(r2)][static_cast<size_t>(c)] != R(0)) {
        piv = r2;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(m[static_cast<size_t>(c)], m[static_cast<size_t>(piv)]);
    std::swap(rhs[static_cast<size_t>(c)], rhs[static_cast<size_t>(piv)]);
    const R inv = *try_inv(m[static_cast<size_t>(c)][static_cast<size_t>(c)]);
    for (int r2 = c + 1; r2 < W; ++r2) {
      R& lead = m[static_cast<size_t>(r2)][static_cast<size_t>(c)];
      if (lead == R(0)) continue;
      const R f = lead * inv;
      for (int j = c; j < W; ++j)
        m[static_cast<size_t>(r2)][static_cast<size_t>(j)] =
            m[static_cast<size_t>(r2)][static_cast<size_t>(j)] -
            f * m[static_cast<size_t>(c)][static_cast<size_t>(j)];
      rhs[static_cast<size_t>(r2)] = rhs[static_cast<size_t>(r2)] - f * rhs[static_cast<size_t>(c)];
    }
  }
  std::vector<R> x(static_cast<size_t>(W), R(0));
  for (int i = W - 1; i >= 0; --i) {
    R acc = rhs[static_cast<size_t>(i)];
    for (int j = i + 1; j < W; ++j)
      acc = acc - m[static_cast<size_t>(i)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    x[static_cast<size_t>(i)] = acc * *try_inv(m[static_cast<size_t>(i)][static_cast<size_t>(i)]);
  }
  return x;
}

}  // namespace detail

// Invertibility of the stacked-Hankel matrix whose block j has n_j columns
// of shifted moments of functional j.
template <Ring R>
bool normality(const MOPSystem<R>& sys, const MultiIndex& n) {
  detail::check_mop_index(sys, n);
  const long W = n.weight();
  if (W == 0) return true;
  for (int j = 0; j < sys.r; ++j)
    if (n.entries[static_cast<size_t>(j)] > 0 &&
        sys.available() < W + n.entries[static_cast<size_t>(j)] - 1)
      throw calc_error(errname::insufficient_coefficients,
                       "moment sequences too short for this multi-index",
                       W + n.entries[static_cast<size_t>(j)] - 1);
  DenseWindow<R> m(static_cast<int>(W));
  int col = 0;
  for (int j = 0; j < sys.r; ++j)
    for (long c = 0; c < n.entries[static_cast<size_t>(j)]; ++c, ++col)
      for (long i = 0; i < W; ++i)
        m.at(static_cast<int>(i), col) = sys.moments[static_cast<size_t>(j)][static_cast<size_t>(i + c)];
  return dense_det(m) != R(0);
}

// The monic polynomial of degree |n| annihilated by x^s against functional j
// for all s < n_j. Coefficients solve one exact linear system per index.
template <Ring R>
UniPoly<R> mop_type2(const MOPSystem<R>& sys, const MultiIndex& n) {
  detail::check_mop_index(sys, n);
  const int W = static_cast<int>(n.weight());
  if (W == 0) return UniPoly<R>(R(1));
  for (int j = 0; j < sys.r; ++j)
    if (n.entries[static_cast<size_t>(j)] > 0 &&
        sys.available() < W + n.entries[static_cast<size_t>(j)])
      throw calc_error(errname::insufficient_coefficients,
                       "moment sequences too short for this multi-index",
                       W + n.entries[static_cast<size_t>(j)]);
  std::vector<std::vector<R>> m;
  std::vector<R> rhs;
  m.reserve(static_cast<size_t>(W));
  rhs.reserve(static_cast<size_t>(W));
  for (int j = 0; j < sys.r; ++j)
    for (long s = 0; s < n.entries[static_cast<size_t>(j)]; ++s) {
      std::vector<R> row;
      row.reserve(static_cast<size_t>(W));
      for (int i = 0; i < W; ++i)
        row.push_back(sys.moments[static_cast<size_t>(j)][static_cast<size_t>(s + i)]);
      m.push_back(std::move(row));
      rhs.push_back(-sys.moments[static_cast<size_t>(j)][static_cast<size_t>(s + W)]);
    }
  auto x = detail::solve_linear(std::move(m), std::move(rhs));
  if (!x)
    throw calc_error(errname::not_normal, "multi-index is not normal for this system", W);
  x->push_back(R(1));
  return UniPoly<R>(std::move(*x));
}

namespace detail {

template <Ring R>
std::vector<MultiIndex> path_prefixes(const MOPSystem<R>& sys, const NNPath& path, int N) {
  if (static_cast<int>(path.directions.size()) < N)
    throw calc_error(errname::domain_error, "path shorter than the requested window", N);
  std::vector<MultiIndex> pre;
  pre.reserve(static_cast<size_t>(N) + 1);
  MultiIndex cur(std::vector<long>(static_cast<size_t>(sys.r), 0L));
  pre.push_back(cur);
  for (int i = 0; i < N; ++i) {
    const int j = path.directions[static_cast<size_t>(i)];
    if (j < 1 || j > sys.r)
      throw calc_error(errname::domain_error, "path direction outside 1..r", i + 1);
    ++cur.entries[static_cast<size_t>(j - 1)];
    pre.push_back(cur);
  }
  return pre;
}

template <Ring R, bool Parallel>
HessWindow<R> path_production_impl(const MOPSystem<R>& sys, const NNPath& path, int N) {
  if (N < 1) throw calc_error(errname::domain_error, "window size must be >= 1");
  const std::vector<MultiIndex> pre = path_prefixes(sys, path, N);
  // each index solves independently; failures are rethrown in order
  std::vector<UniPoly<R>> polys(static_cast<size_t>(N) + 1);
  std::exception_ptr fail = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (Parallel)
#endif
  for (int k = 0; k <= N; ++k) {
    try {
      polys[static_cast<size_t>(k)] = mop_type2(sys, pre[static_cast<size_t>(k)]);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!fail) fail = std::current_exception();
    }
  }
  if (fail) std::rethrow_exception(fail);
  LowTriWindow<R> b(N + 1);
  for (int k = 0; k <= N; ++k)
    for (int j = 0; j < k; ++j) b.set(k, j, polys[static_cast<size_t>(k)].coeff(j));
  const HessWindow<R> raw = conjugate_shift(b);
  HessWindow<R> pi(N, sys.r);
  for (int row = 0; row < N; ++row)
    for (int k = 0; k <= row; ++k) {
      const R& v = raw.entry(row, k);
      if (k < row - sys.r) {
        if (v != R(0))
          throw calc_error(errname::band_violation,
                           "recurrence exceeded its guaranteed band", row);
      } else {
        pi.set(row, k, v);
      }
    }
  return pi;
}

}  // namespace detail

// Production window of the polynomials along a nearest-neighbor path. The
// result must be (r,1)-banded; anything wider is a theory violation and
// throws rather than returning.
template <Ring R>
HessWindow<R> path_production(const MOPSystem<R>& sys, const NNPath& path, int N) {
  return detail::path_production_impl<R, true>(sys, path, N);
}

// Serial reference implementation with identical semantics.
template <Ring R>
HessWindow<R> path_production_serial(const MOPSystem<R>& sys, const NNPath& path, int N) {
  return detail::path_production_impl<R, false>(sys, path, N);
}

// Column k holds the moments of the functional newly engaged at step k+1 of
// the path: the shift of functional j_{k+1} by the number of its prior
// appearances.
template <Ring R>
DenseWindow<R> star_functionals(const MOPSystem<R>& sys, const NNPath& path, int N) {
  if (N < 1) throw calc_error(errname::domain_error, "window size must be >= 1");
  if (static_cast<int>(path.directions.size()) < N)
    throw calc_error(errname::domain_error, "path shorter than the requested window", N);
  std::vector<long> seen(static_cast<size_t>(sys.r), 0L);
  DenseWindow<R> gamma(N);
  for (int k = 0; k < N; ++k) {
    const int j = path.directions[static_cast<size_t>(k)];
    if (j < 1 || j > sys.r)
      throw calc_error(errname::domain_error, "path direction outside 1..r", k + 1);
    const long shift = seen[static_cast<size_t>(j - 1)];
    if (sys.available() < N + shift)
      throw calc_error(errname::insufficient_coefficients,
                       "moment sequences too short for the shifted column", N + shift);
    for (int i = 0; i < N; ++i)
      gamma.at(i, k) = sys.moments[static_cast<size_t>(j - 1)][static_cast<size_t>(i + shift)];
    ++seen[static_cast<size_t>(j - 1)];
  }
  return gamma;
}

// U = O(Pi)^{-1} Gamma; the path functionals must make U upper-triangular,
// which is exactly the LU factorization Gamma = O(Pi) U.
template <Ring R>
DenseWindow<R> verify_gamma_LU(const DenseWindow<R>& gamma, const HessWindow<R>& pi) {
  const int N = gamma.size();
  if (pi.size() < N - 1)
    throw calc_error(errname::window_too_small, "production window too small for Gamma");
  const LowTriWindow<R> b = invert_unit_lower(output_matrix(pi, N));
  DenseWindow<R> u = mul_lowtri_dense(b, gamma);
  for (int row = 1; row < N; ++row)
    for (int col = 0; col < row; ++col)
      if (u.at(row, col) != R(0))
        throw calc_error(errname::not_upper_triangular,
                         "functional matrix does not factor against this window", row);
  return u;
}

}  // namespace prodmat
