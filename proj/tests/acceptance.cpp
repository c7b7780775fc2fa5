// Acceptance suite: one self-contained check per shipped guarantee, every
// comparison exact. Run with no arguments for all criteria, or pass criterion
// numbers (1..13). Exit status is the number of failed criteria.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "cli_support.hpp"
#include "prodmat/json_io.hpp"
#include "prodmat/prodmat.hpp"
#include "testutil.hpp"

using namespace prodmat;

namespace {

int g_checks = 0;

bool expect(bool ok, const char* what) {
  ++g_checks;
  if (!ok) std::fprintf(stderr, "    failed: %s\n", what);
  return ok;
}

HessWindow<Rational> tridiag_window(const std::vector<Rational>& gamma,
                                    const std::vector<Rational>& beta, int n) {
  return jfrac_production(JFraction<Rational>{gamma, beta, false}, n);
}

std::vector<Rational> nonzero_seq(std::mt19937& rng, int n) {
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.push_back(testutil::rand_nonzero(rng, 1, 6, 3));
  return v;
}

// 1. Triangle entries equal brute-force walk enumeration.
bool criterion_walk_oracle() {
  std::mt19937 rng(11);
  bool ok = true;
  for (int rep = 0; rep < 50; ++rep) {
    const int d = 1 + rep % 3;
    const HessWindow<Rational> pi = testutil::rand_window(rng, 7, d);
    const LowTriWindow<Rational> a = output_matrix(pi, 8);
    for (int n = 0; n <= 7; ++n)
      for (int k = 0; k <= n; ++k)
        ok &= expect(lukasiewicz_weight_sum(pi, n, k) == a.entry(n, k),
                     "walk weight sum != triangle entry");
  }
  return ok;
}

// 2. Three-step path polynomials equal the tridiagonal triangle.
bool criterion_three_step() {
  std::mt19937 rng(12);
  bool ok = true;
  for (int rep = 0; rep < 3; ++rep) {
    const std::vector<Rational> gamma = testutil::rand_sequence(rng, 8);
    const std::vector<Rational> beta = testutil::rand_sequence(rng, 7);
    const LowTriWindow<Rational> a =
        output_matrix(tridiag_window(gamma, beta, 8), 9);
    for (int n = 0; n <= 8; ++n)
      for (int k = 0; k <= n; ++k)
        ok &= expect(motzkin_Jnk(beta, gamma, n, k) == a.entry(n, k),
                     "rational three-step triangle mismatch");
  }
  {
    std::vector<MultiPoly> gamma, beta;
    for (int i = 0; i < 5; ++i) gamma.push_back(MultiPoly::var("g" + std::to_string(i)));
    for (int i = 1; i < 5; ++i) beta.push_back(MultiPoly::var("b" + std::to_string(i)));
    HessWindow<MultiPoly> pi(5, 1);
    for (int n = 0; n < 5; ++n) {
      pi.set(n, n, gamma[static_cast<size_t>(n)]);
      if (n > 0) pi.set(n, n - 1, beta[static_cast<size_t>(n - 1)]);
    }
    const LowTriWindow<MultiPoly> a = output_matrix(pi, 6);
    for (int n = 0; n <= 5; ++n)
      for (int k = 0; k <= n; ++k)
        ok &= expect(motzkin_Jnk(beta, gamma, n, k) == a.entry(n, k),
                     "symbolic three-step triangle mismatch");
  }
  const std::vector<Rational> m = moments_from_production(
      tridiag_window(std::vector<Rational>(6, Rational(1)),
                     std::vector<Rational>(5, Rational(1)), 6),
      7);
  const long want[7] = {1, 1, 2, 4, 9, 21, 51};
  for (int i = 0; i < 7; ++i)
    ok &= expect(m[static_cast<size_t>(i)] == Rational(want[i]),
                 "unit-weight column frozen values");
  return ok;
}

// 3. Branched expansion: triangle equality, unit-weight column, functional
// equation for the moment series.
bool criterion_branched() {
  std::mt19937 rng(13);
  bool ok = true;
  for (int m = 1; m <= 3; ++m) {
    std::vector<Rational> alpha = nonzero_seq(rng, 6 * (m + 1) + 1);
    const SFraction<Rational> sf(m, alpha);
    const LowTriWindow<Rational> a = output_matrix(mbranched_production(sf, 6), 7);
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= n; ++k)
        ok &= expect(mdyck_Snk(alpha, m, n, k) == a.entry(n, k),
                     "rational branched triangle mismatch");

    std::vector<MultiPoly> sym;
    for (int i = 0; i <= 4 * (m + 1); ++i)
      sym.push_back(MultiPoly::var("s" + std::to_string(m + i)));
    const SFraction<MultiPoly> ssf(m, sym);
    const LowTriWindow<MultiPoly> sa = output_matrix(mbranched_production(ssf, 4), 5);
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k)
        ok &= expect(mdyck_Snk(sym, m, n, k) == sa.entry(n, k),
                     "symbolic branched triangle mismatch");

    const SFraction<Rational> ones(m, std::vector<Rational>(9 * (m + 1) + 1, Rational(1)));
    for (int k = 0; k <= 2; ++k)
      ok &= expect(verify_functional_equation(ones, m, k, 8),
                   "functional equation at order 8 (unit weights)");
    const SFraction<Rational> rnd(m, nonzero_seq(rng, 9 * (m + 1) + 1));
    for (int k = 0; k <= 2; ++k)
      ok &= expect(verify_functional_equation(rnd, m, k, 8),
                   "functional equation at order 8 (random weights)");
  }
  const std::vector<Rational> ones(13, Rational(1));
  const long fuss[5] = {1, 1, 3, 12, 55};
  for (int n = 0; n < 5; ++n)
    ok &= expect(mdyck_Snk(ones, 2, n, 0) == Rational(fuss[n]),
                 "two-step descent column frozen values");
  return ok;
}

// 4. Pair contraction equals the tridiagonal window, symbolically.
bool criterion_contraction() {
  bool ok = true;
  std::vector<MultiPoly> alpha;
  for (int i = 1; i <= 11; ++i) alpha.push_back(MultiPoly::var("a" + std::to_string(i)));
  const SFraction<MultiPoly> sf(1, alpha);
  const JFraction<MultiPoly> jf = contract_s_to_j(sf);
  ok &= expect(mbranched_production(sf, 6) == jfrac_production(jf, 6),
               "contracted window equality (symbolic, six rows)");
  const SFraction<Rational> ones(1, std::vector<Rational>(9, Rational(1)));
  const std::vector<Rational> m =
      moments_from_production(jfrac_production(contract_s_to_j(ones), 5), 6);
  const long catalan[6] = {1, 1, 2, 5, 14, 42};
  for (int i = 0; i < 6; ++i)
    ok &= expect(m[static_cast<size_t>(i)] == Rational(catalan[i]),
                 "contracted unit weights give the ballot column");
  return ok;
}

// 5. The moment matrix splits as J D J^T; leading minors are subdiagonal
// power products.
bool criterion_ldlt() {
  std::mt19937 rng(15);
  bool ok = true;
  for (int N = 1; N <= 10; ++N) {
    const std::vector<Rational> gamma = testutil::rand_sequence(rng, 9);
    const std::vector<Rational> beta = nonzero_seq(rng, 9);
    ok &= expect(hankel_ldlt_check(gamma, beta, N), "rational moment-matrix split");
  }
  std::vector<MultiPoly> g, b;
  for (int i = 0; i < 3; ++i) {
    g.push_back(MultiPoly::var("g" + std::to_string(i)));
    b.push_back(MultiPoly::var("b" + std::to_string(i + 1)));
  }
  for (int N = 1; N <= 4; ++N)
    ok &= expect(hankel_ldlt_check(g, b, N), "symbolic moment-matrix split");

  const int N = 6, W = 2 * N - 2;
  const std::vector<Rational> gamma = testutil::rand_sequence(rng, W);
  const std::vector<Rational> beta = nonzero_seq(rng, W);
  const std::vector<Rational> moments =
      moments_from_production(tridiag_window(gamma, beta, W), 2 * N - 1);
  const std::vector<Rational> minors =
      leading_minors(hankel_window(moments, N, 0), N);
  for (int sz = 1; sz <= N; ++sz) {
    Rational want(1);
    for (int i = 1; i < sz; ++i)
      for (int e = 0; e < sz - i; ++e) want = want * beta[static_cast<size_t>(i - 1)];
    ok &= expect(minors[static_cast<size_t>(sz)] == want,
                 "minor equals subdiagonal power product");
  }
  return ok;
}

// 6. Inverse duality, block characteristic polynomials, interval partitions.
bool criterion_duality() {
  std::mt19937 rng(16);
  bool ok = true;
  for (int rep = 0; rep < 3; ++rep) {
    const HessWindow<Rational> pi = testutil::rand_window(rng, 10, 1 + rep);
    const LowTriWindow<Rational> a = output_matrix(pi, 10);
    const LowTriWindow<Rational> b = invert_unit_lower(a);
    const LowTriWindow<Rational> prod = lowtri_mul(b, a);
    for (int n = 0; n < 10; ++n)
      for (int k = 0; k < n; ++k)
        ok &= expect(prod.entry(n, k) == Rational(0), "inverse pair product");
    ok &= expect(polyseq_from_production(pi, 10) == charpoly_seq(pi, 9),
                 "recurrence polynomials equal block determinants");
    for (int n = 0; n <= 7; ++n)
      for (int j = 0; j <= n; ++j)
        ok &= expect(viennot_coeff(pi, n, j) == b.entry(n, j),
                     "interval partitions equal inverse rows");
  }
  return ok;
}

// 7. Expectation values: dual routes, tridiagonal normalization, vanishing
// patterns for banded windows.
bool criterion_expectations() {
  std::mt19937 rng(17);
  bool ok = true;
  for (int rep = 0; rep < 2; ++rep) {
    const HessWindow<Rational> pi = testutil::rand_window(rng, 13, 2 + rep);
    const MonicPolySeq<Rational> p = polyseq_from_production(pi, 6);
    const LowTriWindow<Rational> a = output_matrix(pi, 14);
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= 3; ++l)
        for (int m = 0; m <= 5; ++m)
          for (int n = 0; n <= 5; ++n) {
            // the call itself cross-checks its two internal routes
            const Rational e = expectation(pi, k, l, m, n);
            const UniPoly<Rational> prod =
                UniPoly<Rational>::x_power(l) * p.poly(m) * p.poly(n);
            ok &= expect(e == apply_functional(a, k, prod),
                         "expectation equals direct polynomial expansion");
          }
  }
  {
    const std::vector<Rational> gamma = testutil::rand_sequence(rng, 12);
    const std::vector<Rational> beta = nonzero_seq(rng, 11);
    const HessWindow<Rational> pi = tridiag_window(gamma, beta, 12);
    Rational h(1);
    for (int n = 0; n <= 4; ++n) {
      if (n > 0) h = h * beta[static_cast<size_t>(n - 1)];
      ok &= expect(expectation(pi, 0, 0, n, n) == h,
                   "squared-polynomial normalization is the subdiagonal product");
      for (int m = 0; m < n; ++m)
        ok &= expect(expectation(pi, 0, 0, m, n) == Rational(0),
                     "distinct polynomials are orthogonal");
    }
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l)
        for (int m = 0; m <= 3; ++m)
          for (int n = k; n <= 3; ++n)
            ok &= expect(
                tridiag_expectation(pi, UniPoly<Rational>::x_power(l), k, m, n) ==
                    expectation(pi, k, l, m, n),
                "tridiagonal closed form equals the generic expectation");
  }
  for (int rep = 0; rep < 50; ++rep) {
    const int d = 1 + rep % 3;
    const HessWindow<Rational> pi = testutil::rand_window(rng, 9, d);
    for (int k = 0; k <= 8; ++k)
      for (int l = 0; l <= 2; ++l)
        for (int m = 0; m <= 3; ++m)
          for (int n = 0; n <= 3 && n + m + l <= 9; ++n)
            if (k > l + m + n || k < n - d * (l + m) || k < m - d * (l + n))
              ok &= expect(expectation(pi, k, l, m, n) == Rational(0),
                           "banded vanishing pattern");
    for (int k = 0; k <= 4; ++k)
      for (int l = 0; l <= 2; ++l)
        for (int n = 0; n + l <= 9 && n <= 6; ++n)
          if (n > d * l + k)
            ok &= expect(expectation(pi, k, l, 0, n) == Rational(0),
                         "single-sequence orthogonality pattern");
  }
  return ok;
}

// 8. Factorization without pivoting succeeds exactly on invertible leading
// minors; factors are unique; integer instances show minor divisibility.
bool criterion_lu() {
  std::mt19937 rng(18);
  bool ok = true;
  int singular_seen = 0;
  for (int rep = 0; rep < 100; ++rep) {
    DenseWindow<Rational> m(6);
    const bool force_singular = rep % 5 == 0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m.at(i, j) = testutil::rand_rational(rng, -3, 3, 2);
    if (force_singular) {
      // second column = first column makes the 2x2 leading minor vanish
      for (int i = 0; i < 6; ++i) m.at(i, 1) = m.at(i, 0);
    }
    int first_bad = 0;
    for (int k = 1; k <= 5; ++k)
      if (dense_det_leading(m, k) == Rational(0)) {
        first_bad = k;
        break;
      }
    if (first_bad == 0) {
      const LUFactors<Rational> f = lu_factorize(m);
      ok &= expect(mul_lowtri_dense(f.lower, f.upper) == m, "factor product");
      const LUFactors<Rational> again = lu_factorize(m);
      ok &= expect(again.lower == f.lower && again.upper == f.upper,
                   "refactorization reproduces identical factors");
    } else {
      ++singular_seen;
      try {
        lu_factorize(m);
        ok &= expect(false, "factorization must fail on a vanishing leading minor");
      } catch (const calc_error& e) {
        ok &= expect(e.name() == errname::singular_minor, "failure name");
        ok &= expect(e.index().has_value() && *e.index() == first_bad,
                     "failure index names the vanishing minor");
      }
    }
  }
  ok &= expect(singular_seen >= 20, "constructed singular cases were exercised");

  // integer instances: U rows scaled by the previous minor stay integral,
  // and the pivots are exactly minor ratios
  for (int rep = 0; rep < 10; ++rep) {
    DenseWindow<Rational> m(5);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m.at(i, j) = Rational(coeff(rng));
    bool regular = true;
    for (int k = 1; k <= 4; ++k)
      if (dense_det_leading(m, k) == Rational(0)) regular = false;
    if (!regular) continue;
    const LUFactors<Rational> f = lu_factorize(m);
    const std::vector<Rational> d = leading_minors(m, 5);
    for (int k = 0; k < 5; ++k) {
      ok &= expect(f.upper.at(k, k) * d[static_cast<size_t>(k)] ==
                       d[static_cast<size_t>(k + 1)],
                   "pivot equals the ratio of consecutive minors");
      for (int j = k; j < 5; ++j) {
        const Rational scaled = f.upper.at(k, j) * d[static_cast<size_t>(k)];
        ok &= expect(scaled.raw().get_den() == 1,
                     "minor-scaled factor entry is integral");
      }
    }
  }
  return ok;
}

// 9. Classical orthogonal polynomials: moment-matrix route equals the
// recurrence route; coefficient recovery round-trips; subdiagonals are minor
// ratios.
bool criterion_classical() {
  std::mt19937 rng(19);
  bool ok = true;
  const int N = 8, W = 2 * N - 2;
  for (int rep = 0; rep < 3; ++rep) {
    const std::vector<Rational> gamma = testutil::rand_sequence(rng, W);
    const std::vector<Rational> beta = nonzero_seq(rng, W - 1);
    const HessWindow<Rational> pi = tridiag_window(gamma, beta, W);
    const std::vector<Rational> moments = moments_from_production(pi, 2 * N - 1);
    const DenseWindow<Rational> h = hankel_window(moments, N, 0);
    ok &= expect(orthopolys_from_gamma(h, N) == polyseq_from_production(pi, N),
                 "moment-matrix polynomials equal recurrence polynomials");

    const JFraction<Rational> back = moments_to_jfrac(moments, N);
    ok &= expect(!back.degenerate, "regular recovery is not degenerate");
    bool same = back.gamma.size() == static_cast<size_t>(N - 1) &&
                back.beta.size() == static_cast<size_t>(N - 2);
    for (size_t i = 0; same && i < back.gamma.size(); ++i) same = back.gamma[i] == gamma[i];
    for (size_t i = 0; same && i < back.beta.size(); ++i) same = back.beta[i] == beta[i];
    ok &= expect(same, "recovered coefficients round-trip");

    const std::vector<Rational> d = leading_minors(h, N);
    for (size_t n = 1; n + 1 < static_cast<size_t>(N); ++n)
      ok &= expect(beta[n - 1] == d[n - 1] * d[n + 1] / (d[n] * d[n]),
                   "subdiagonal equals the minor ratio");
  }
  return ok;
}

// 10. Multiple orthogonality: banded windows along paths, type-two solves,
// star functionals, triangular recombination.
bool criterion_mop() {
  std::mt19937 rng(20);
  bool ok = true;

  auto check_system = [&](const MOPSystem<Rational>& sys, const char* tag) {
    const int N = 8;
    std::vector<int> alt, run_then_alt;
    for (int i = 0; i < N; ++i) alt.push_back(1 + i % 2);
    run_then_alt = {2, 2, 1, 2, 1, 2, 1, 2};
    for (const NNPath& path : {NNPath{alt}, NNPath{run_then_alt}}) {
      HessWindow<Rational> pi(1);
      try {
        pi = path_production(sys, path, N);
      } catch (const calc_error& e) {
        std::fprintf(stderr, "    [%s] window construction failed: %s\n", tag, e.what());
        return false;
      }
      ok &= expect(pi.band() == 2, "window is (2,1)-banded");
      const MonicPolySeq<Rational> seq = polyseq_from_production(pi, N);
      MultiIndex idx(std::vector<long>{0, 0});
      for (int k = 0; k < N; ++k) {
        ok &= expect(seq.poly(k) == mop_type2(sys, idx),
                     "window polynomial equals the type-two solve at its index");
        ++idx.entries[static_cast<size_t>(path.directions[static_cast<size_t>(k)] - 1)];
      }
      const DenseWindow<Rational> gamma = star_functionals(sys, path, N);
      ok &= expect(check_orthogonality(seq, gamma),
                   "window polynomials annihilate the shifted functionals");
      try {
        verify_gamma_LU(gamma, pi);
        ++g_checks;
      } catch (const calc_error&) {
        ok &= expect(false, "shifted functionals factor upper-triangularly");
      }
    }
    return true;
  };

  const BesselKParams<Rational> p{Rational(3, 2), Rational(5, 3)};
  ok &= check_system(besselK_mop_system(p, 16), "product-moment pair");

  // repeating a direction after both functionals are engaged genuinely
  // widens the recurrence; the construction must refuse such a window
  try {
    path_production(besselK_mop_system(p, 10), NNPath{{2, 1, 1, 2}}, 4);
    ok &= expect(false, "band failure expected for a repeated-direction path");
  } catch (const calc_error& e) {
    ok &= expect(e.name() == errname::band_violation,
                 "repeated-direction path reports a band failure");
  }

  for (int rep = 0; rep < 2; ++rep) {
    std::vector<std::vector<Rational>> rows(2);
    for (auto& row : rows) {
      row.push_back(Rational(1));
      for (int i = 1; i < 16; ++i) row.push_back(testutil::rand_rational(rng, -9, 9, 4));
    }
    ok &= check_system(MOPSystem<Rational>(2, rows), "random pair");
  }

  for (int rep = 0; rep < 10; ++rep) {
    std::vector<std::vector<Rational>> rows(2);
    for (auto& row : rows) {
      row.push_back(Rational(1));
      for (int i = 1; i < 12; ++i) row.push_back(testutil::rand_rational(rng, -9, 9, 4));
    }
    const MOPSystem<Rational> sys(2, rows);
    std::uniform_int_distribution<long> small(0, 2);
    const long n2 = small(rng);
    const long n1 = n2 + small(rng);
    if (n1 + n2 > 5) continue;
    const MultiIndex n(std::vector<long>{n1, n2});
    if (!normality(sys, n)) continue;
    const UniPoly<Rational> before = mop_type2(sys, n);
    const Rational c11 = testutil::rand_nonzero(rng), c22 = testutil::rand_nonzero(rng);
    const Rational c21 = testutil::rand_rational(rng);
    std::vector<std::vector<Rational>> mixed(2);
    for (int i = 0; i < 12; ++i) {
      mixed[0].push_back(c11 * rows[0][static_cast<size_t>(i)]);
      mixed[1].push_back(c21 * rows[0][static_cast<size_t>(i)] +
                         c22 * rows[1][static_cast<size_t>(i)]);
    }
    const MOPSystem<Rational> msys(2, std::move(mixed));
    if (!normality(msys, n)) continue;
    ok &= expect(mop_type2(msys, n) == before,
                 "triangular recombination leaves the polynomial unchanged");
  }
  return ok;
}

// 11. Product-moment model: closed-form triangle, branched coefficients,
// stepline solve, parameter symmetry.
bool criterion_product_model() {
  std::mt19937 rng(21);
  bool ok = true;
  for (int rep = 0; rep < 3; ++rep) {
    const BesselKParams<Rational> p{testutil::rand_nonzero(rng, 1, 9, 4),
                                    testutil::rand_nonzero(rng, 1, 9, 4)};
    const LowTriWindow<Rational> a = output_matrix(besselK_production(p, 11), 12);
    for (int n = 0; n < 12; ++n)
      for (int k = 0; k <= n; ++k)
        ok &= expect(a.entry(n, k) == besselK_Snk(p, n, k),
                     "rational closed-form triangle");
  }
  {
    const BesselKParams<MultiPoly> p{MultiPoly::var("a1"), MultiPoly::var("a2")};
    const LowTriWindow<MultiPoly> a = output_matrix(besselK_production(p, 5), 6);
    for (int n = 0; n < 6; ++n)
      for (int k = 0; k <= n; ++k)
        ok &= expect(a.entry(n, k) == besselK_Snk(p, n, k), "symbolic closed-form triangle");

    const std::vector<MultiPoly> params{MultiPoly::var("a1"), MultiPoly::var("a2"),
                                        MultiPoly(1L)};
    const SFraction<MultiPoly> sf = hyper_alphas(2, params, 3 * 5 + 1);
    ok &= expect(quad_from_alphas(sf, 6) == besselK_production(p, 6),
                 "branched coefficients rebuild the window symbolically");

    const BesselKParams<MultiPoly> q{MultiPoly::var("a2"), MultiPoly::var("a1")};
    ok &= expect(besselK_production(p, 6) == besselK_production(q, 6),
                 "parameter swap symmetry");
  }
  {
    const BesselKParams<Rational> p{Rational(1, 2), Rational(4, 3)};
    const MOPSystem<Rational> sys = besselK_mop_system(p, 16);
    std::vector<int> dirs;
    for (int i = 0; i < 8; ++i) dirs.push_back(1 + i % 2);
    ok &= expect(path_production(sys, NNPath{dirs}, 8) == besselK_production(p, 8),
                 "stepline solve reproduces the closed-form window");
  }
  return ok;
}

// 12. Laguerre-moment model: window moments equal the closed form; stepline
// polynomials satisfy the window recurrence.
bool criterion_laguerre_model() {
  std::mt19937 rng(22);
  bool ok = true;
  for (int rep = 0; rep < 4; ++rep) {
    const BesselIParams<Rational> p{testutil::rand_rational(rng, 0, 5, 3),
                                    testutil::rand_nonzero(rng, 1, 6, 3)};
    const std::vector<Rational> via_window =
        moments_from_production(besselI_production(p, 9), 10);
    const std::vector<Rational> closed = besselI_moments(p, 10);
    ok &= expect(via_window == closed, "window moments equal evaluations");
    for (int n = 0; n < 10; ++n)
      ok &= expect(closed[static_cast<size_t>(n)] == monic_laguerre(n, p.alpha, p.xi),
                   "moment n is the degree-n evaluation");
    const MonicPolySeq<Rational> seq =
        polyseq_from_production(besselI_production(p, 8), 9);
    for (int n = 0; n <= 8; ++n)
      ok &= expect(seq.poly(n) == besselI_stepline_poly(p, n),
                   "closed-form stepline polynomial satisfies the recurrence");
  }
  return ok;
}

// 13. Command line transcripts are byte-exact; failures are structured.
bool criterion_cli() {
  bool ok = true;
  if (!std::getenv("PRODMAT_BIN") || !std::getenv("PRODMAT_GOLDEN_DIR")) {
    std::fprintf(stderr,
                 "    PRODMAT_BIN / PRODMAT_GOLDEN_DIR must point at the tool and "
                 "its transcripts\n");
    return false;
  }
  for (const auto& c : clisupport::cli_cases()) {
    const clisupport::RunResult r = clisupport::run_cli(c.args);
    const std::string want = clisupport::golden(c.golden);
    if (!expect(r.status == c.exit_code && r.out == want, c.golden)) ok = false;
  }
  const clisupport::RunResult err = clisupport::run_cli("lu --matrix '[[0,1],[1,0]]'");
  ok &= expect(err.status == 2, "domain failures exit with status two");
  ok &= expect(nlohmann::json::parse(err.out).at("error") == "SingularMinor",
               "failure payload carries the failure name");
  return ok;
}

struct Criterion {
  int id;
  const char* label;
  bool (*fn)();
};

const Criterion kCriteria[] = {
    {1, "walk oracle equivalence", criterion_walk_oracle},
    {2, "three-step expansion triangles", criterion_three_step},
    {3, "branched expansion triangles", criterion_branched},
    {4, "pair contraction", criterion_contraction},
    {5, "moment matrix split", criterion_ldlt},
    {6, "duality and recurrence", criterion_duality},
    {7, "functional expectations", criterion_expectations},
    {8, "factorization by leading minors", criterion_lu},
    {9, "classical orthogonal polynomials", criterion_classical},
    {10, "multiple orthogonality machinery", criterion_mop},
    {11, "product-moment model", criterion_product_model},
    {12, "laguerre-moment model", criterion_laguerre_model},
    {13, "command line transcripts", criterion_cli},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (!wanted.empty() &&
        std::find(wanted.begin(), wanted.end(), c.id) == wanted.end())
      continue;
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "    unexpected exception: %s\n", e.what());
    }
    std::printf("criterion %02d %s: %s\n", c.id, c.label, ok ? "PASS" : "FAIL");
    if (!ok) ++failures;
  }
  return failures;
}
