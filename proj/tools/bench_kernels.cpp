#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "prodmat/models.hpp"
#include "prodmat/paths.hpp"
#include "prodmat/production.hpp"

// Compares the OpenMP kernels against their serial reference implementations
// on workloads large enough to show a difference. Exact arithmetic only; the
// timing is wall-clock and the outputs are compared for equality.

namespace {

using namespace prodmat;

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

template <class Fn>
double timed(Fn&& fn) {
  const double t0 = now();
  fn();
  return now() - t0;
}

HessWindow<Rational> banded_window(int size, int band) {
  HessWindow<Rational> pi(size, band);
  for (int n = 0; n < size; ++n)
    for (int k = pi.row_lo(n); k <= n; ++k)
      pi.set(n, k, Rational((n + 1) * 7 + k * 3 + 1, k + 2));
  return pi;
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-18s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name,
              serial, parallel, parallel > 0 ? serial / parallel : 0.0,
              equal ? "match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  {
    const int n = 140;
    const HessWindow<Rational> pi = banded_window(n - 1, 3);
    LowTriWindow<Rational> a(1), b(1);
    const double ts = timed([&] { a = output_matrix_serial(pi, n); });
    const double tp = timed([&] { b = output_matrix(pi, n); });
    report("output_matrix", ts, tp, a == b);
  }

  {
    const int n = 9;
    const HessWindow<Rational> pi = banded_window(n, n);
    Rational a, b;
    const double ts = timed([&] { a = lukasiewicz_weight_sum_serial(pi, n, 1); });
    const double tp = timed([&] { b = lukasiewicz_weight_sum(pi, n, 1); });
    report("lukasiewicz", ts, tp, a == b);
  }

  {
    const int n = 24;
    // the deepest solve uses moments up to weight plus the larger coordinate
    const MOPSystem<Rational> sys =
        besselK_mop_system(BesselKParams<Rational>{Rational(1), Rational(2)}, n + n / 2);
    std::vector<int> dirs;
    for (int i = 0; i < n; ++i) dirs.push_back(1 + i % 2);
    const NNPath path{dirs};
    HessWindow<Rational> a(1), b(1);
    const double ts = timed([&] { a = path_production_serial(sys, path, n); });
    const double tp = timed([&] { b = path_production(sys, path, n); });
    report("path_production", ts, tp, a == b);
  }

  return 0;
}
