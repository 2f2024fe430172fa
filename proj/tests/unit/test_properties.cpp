// Randomized invariants with hand-rolled generators; seeds are fixed.
#include "doctest.h"
#include "hamsup/checks.hpp"
#include "hamsup/hgf.hpp"
#include "hamsup/spectra.hpp"

using namespace hamsup;

namespace {

// Mostly-zero functions with rational values.
GridFunction random_sparse(HammingShape shape, Rng& rng) {
  std::bernoulli_distribution keep(0.3);
  std::vector<Rational> v(shape.vertex_count());
  for (auto& x : v) {
    if (keep(rng)) x = random_nonzero_rational(rng);
  }
  return GridFunction(shape, std::move(v));
}

HammingShape random_shape(Rng& rng, int max_n, int max_q) {
  std::uniform_int_distribution<int> n(0, max_n), q(2, max_q);
  return {n(rng), q(rng)};
}

}  // namespace

TEST_CASE("tensor support is multiplicative") {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const int q = std::uniform_int_distribution<int>(2, 5)(rng);
    std::uniform_int_distribution<int> n(0, 2);
    const GridFunction f = random_sparse({n(rng), q}, rng);
    const GridFunction g = random_sparse({n(rng), q}, rng);
    CHECK(support_size(tensor_product(f, g)) == support_size(f) * support_size(g));
  }
}

TEST_CASE("eigenvalues add under tensor products") {
  for (int q = 2; q <= 6; ++q) {
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        for (int i = 0; i <= m; ++i) {
          for (int j = 0; j <= n; ++j) {
            CHECK(eigenvalue(m, q, i) + eigenvalue(n, q, j) == eigenvalue(m + n, q, i + j));
          }
        }
      }
    }
  }
}

TEST_CASE("projections are eigenfunctions and sum back") {
  Rng rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    HammingShape shape = random_shape(rng, 3, 5);
    const GridFunction f = random_sparse(shape, rng);
    GridFunction total(shape);
    for (int i = 0; i <= shape.n; ++i) {
      const GridFunction p = project_eigenspace(f, i);
      CHECK(is_eigenfunction(p, i));
      total = total + p;
    }
    CHECK(total == f);
  }
}

TEST_CASE("membership is closed under linear combinations and permutations") {
  Rng rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    const int q = std::uniform_int_distribution<int>(2, 4)(rng);
    std::uniform_int_distribution<int> idx(0, n);
    int lo = idx(rng), hi = idx(rng);
    if (lo > hi) std::swap(lo, hi);
    const GridFunction a = project_range(random_integer_function({n, q}, rng), {lo, hi});
    const GridFunction b = project_range(random_integer_function({n, q}, rng), {lo, hi});
    const Rational c = random_nonzero_rational(rng);
    CHECK(in_direct_sum(a + c * b, {lo, hi}));
    CHECK(in_direct_sum(permute_coordinates(a, random_permutation(n, rng)), {lo, hi}));
  }
}

TEST_CASE("hgf round trip on random sparse functions") {
  Rng rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    const GridFunction f = random_sparse(random_shape(rng, 3, 6), rng);
    CHECK(parse_hgf(to_hgf(f)) == f);
  }
}
