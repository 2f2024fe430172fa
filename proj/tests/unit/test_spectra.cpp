#include "doctest.h"
#include "hamsup/checks.hpp"
#include "hamsup/constructions.hpp"
#include "hamsup/kernels.hpp"
#include "hamsup/spectra.hpp"

using namespace hamsup;

TEST_CASE("eigenvalues") {
  CHECK(eigenvalue(3, 3, 0) == 6);
  CHECK(eigenvalue(3, 3, 1) == 3);
  CHECK(eigenvalue(3, 3, 2) == 0);
  CHECK(eigenvalue(3, 3, 3) == -3);
  CHECK(eigenvalue(2, 4, 2) == -2);
}

TEST_CASE("krawtchouk values") {
  // K_1(d) = (q-1)(n-d) - d.
  CHECK(krawtchouk(2, 3, 1, 0) == 4);
  CHECK(krawtchouk(2, 3, 1, 1) == 1);
  CHECK(krawtchouk(2, 3, 1, 2) == -2);
  // K_i(0) = C(n,i)(q-1)^i; K_n(d) = (-1)^d (q-1)^(n-d).
  CHECK(krawtchouk(4, 5, 2, 0) == 6 * 16);
  CHECK(krawtchouk(3, 4, 3, 1) == -9);
  CHECK(krawtchouk(3, 4, 3, 2) == 3);
}

TEST_CASE("krawtchouk orthogonality") {
  // Σ_d C(n,d)(q-1)^d K_i(d) K_k(d) = q^n C(n,i)(q-1)^i δ_ik.
  for (int n = 1; n <= 5; ++n) {
    for (int q = 2; q <= 5; ++q) {
      const auto table = krawtchouk_table(n, q);
      for (int i = 0; i <= n; ++i) {
        for (int k = 0; k <= n; ++k) {
          Integer sum = 0, qn = 1, w = 1;
          for (int t = 0; t < n; ++t) qn *= q;
          for (int d = 0; d <= n; ++d) {
            Integer pw = 1;
            for (int t = 0; t < d; ++t) pw *= q - 1;
            sum += binomial(n, d) * pw * table[i][d] * table[k][d];
          }
          for (int t = 0; t < i; ++t) w *= q - 1;
          CHECK(sum == (i == k ? Integer(qn * binomial(n, i) * w) : Integer(0)));
        }
      }
    }
  }
}

TEST_CASE("projection of a2(0,1) onto U_0 vanishes") {
  // Hand sum: E_0 f = mean(f) = (1 - 1 + 0)/3 = 0.
  const GridFunction f = elementary(ElementaryFactor::a2(0, 1), 3);
  CHECK(project_eigenspace(f, 0).is_zero());
  CHECK(project_eigenspace(f, 1) == f);
}

TEST_CASE("membership examples") {
  CHECK_FALSE(in_direct_sum(elementary(ElementaryFactor::a1(0, 0), 3), {0, 0}));
  CHECK(in_direct_sum(elementary(ElementaryFactor::a1(0, 0), 3), {1, 1}));
  CHECK(in_direct_sum(GridFunction(HammingShape{2, 3}), {2, 2}));
  CHECK_THROWS_AS(in_direct_sum(GridFunction(HammingShape{2, 3}), {1, 3}), std::out_of_range);
  CHECK_THROWS_AS(in_direct_sum(GridFunction(HammingShape{2, 3}), {2, 1}), std::out_of_range);
}

TEST_CASE("clamped direct sum") {
  const GridFunction c = GridFunction::constant({2, 3}, 1);
  CHECK(in_clamped_direct_sum(c, -1, 0));
  CHECK_FALSE(in_clamped_direct_sum(c, 1, 5));
  CHECK_FALSE(in_clamped_direct_sum(c, 1, 0));
  CHECK(in_clamped_direct_sum(GridFunction(HammingShape{2, 3}), 2, 1));
}

TEST_CASE("dimensions and traces") {
  CHECK(eigenspace_dimension(2, 3, 1) == 4);
  CHECK(projector_trace(2, 3, 1) == 4);
  CHECK(eigenspace_dimension(4, 5, 2) == 96);
  Integer total = 0;
  for (int i = 0; i <= 4; ++i) total += eigenspace_dimension(4, 3, i);
  CHECK(total == 81);
}

TEST_CASE("adjacency agrees with eigenvalue on projections") {
  Rng rng(3);
  for (int n = 1; n <= 3; ++n) {
    for (int q = 2; q <= 4; ++q) {
      const GridFunction f = random_integer_function({n, q}, rng);
      for (int i = 0; i <= n; ++i) {
        const GridFunction p = project_eigenspace(f, i);
        CHECK(apply_adjacency(p) == Rational(eigenvalue(n, q, i)) * p);
        CHECK(is_eigenfunction(p, i));
      }
    }
  }
}

TEST_CASE("profile of a generic perturbation is full") {
  // Changing one value of an F1 member adds a component in every eigenspace:
  // e_x has E_t e_x(x) = C(n,t)(q-1)^t / q^n ≠ 0.
  GridFunction f = build_f1(3, 3, 1, 1);
  std::vector<Rational> v(f.values().begin(), f.values().end());
  v[5] += 1;
  const auto profile = projection_profile(GridFunction(f.shape(), v));
  for (bool b : profile) CHECK(b);
  CHECK(projection_profile(f) == std::vector<bool>{false, true, false, false});
}
