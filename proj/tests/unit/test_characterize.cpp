#include "doctest.h"
#include "hamsup/characterize.hpp"
#include "hamsup/checks.hpp"
#include "hamsup/constructions.hpp"

using namespace hamsup;

TEST_CASE("F1 instance with a permutation") {
  Rng rng(41);
  const GridFunction base = build_f1(3, 3, 1, 1, random_f1_params(3, 3, 1, 1, rng), make_rational(-5, 2));
  const GridFunction f = permute_coordinates(base, Permutation{2, 0, 1});
  const FactorizeResult r = factorize(f, {1, 1});
  REQUIRE(r.status == FactorizeStatus::Certified);
  CHECK(rebuild(*r.certificate, 3) == f);
  CHECK(r.certificate->family == Family::F1);
  CHECK(sgn(r.certificate->c) > 0);
}

TEST_CASE("certificate of the default F1(3,3,1,1)") {
  const FactorizeResult r = factorize(build_f1(3, 3, 1, 1), {1, 1});
  REQUIRE(r.certificate);
  CHECK(r.certificate->sigma == identity_permutation(3));
  CHECK(r.certificate->factors ==
        std::vector<ElementaryFactor>{ElementaryFactor::a1(2, 2), ElementaryFactor::a3()});
  CHECK(r.certificate->c == 1);
}

TEST_CASE("negative scalars are absorbed") {
  // -a2(0,4) = a2(4,0).
  const FactorizeResult r = factorize(build_f2(2, 5, 2, 2, {}, -3), {2, 2});
  REQUIRE(r.certificate);
  CHECK(r.certificate->c == 3);
  const FactorizeResult s = factorize(build_f1(2, 4, 1, 1, {}, -1), {1, 1});
  REQUIRE(s.certificate);
  CHECK(s.certificate->c == 1);
  CHECK(rebuild(*s.certificate, 4) == build_f1(2, 4, 1, 1, {}, -1));
}

TEST_CASE("counterexamples are rejected") {
  const FactorizeResult h = factorize(counterexample_h(), {2, 2});
  CHECK(h.status == FactorizeStatus::NotMember);
  CHECK_FALSE(h.certificate);
  for (int q = 4; q <= 6; ++q) {
    const FactorizeResult g = factorize(counterexample_g(q), {1, 2});
    CHECK(g.status == FactorizeStatus::UncharacterizedRegime);
    CHECK_FALSE(g.certificate);
  }
  CHECK(factorize(counterexample_v(), {2, 2}).status == FactorizeStatus::NotMember);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(factorize(GridFunction(HammingShape{2, 3}), {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(factorize(build_f1(2, 3, 1, 1), {0, 0}), std::invalid_argument);
}

TEST_CASE("wrong template for the range") {
  // a1(2,2) ⊗ a3 lies in U_[1,2](3,3) too, but F1(3,3,1,2) needs an a4.
  const FactorizeResult r = factorize(build_f1(3, 3, 1, 1), {1, 2});
  CHECK(r.status == FactorizeStatus::NotMember);
}

TEST_CASE("round trip over random instances") {
  Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    for (int q = 3; q <= 5; ++q) {
      std::uniform_int_distribution<int> pick(1, 4);
      const int n = pick(rng);
      for (int i = 0; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
          const bool f1 = n >= i + j;
          if (!f1 && i != j) continue;
          const Rational c = random_nonzero_rational(rng);
          const GridFunction base = f1 ? build_f1(n, q, i, j, random_f1_params(n, q, i, j, rng), c)
                                       : build_f2(n, q, i, j, random_f2_params(n, q, i, j, rng), c);
          const GridFunction f = permute_coordinates(base, random_permutation(n, rng));
          const FactorizeResult r = factorize(f, {i, j});
          REQUIRE(r.certificate);
          CHECK(rebuild(*r.certificate, q) == f);
        }
      }
    }
  }
}

TEST_CASE("verdicts") {
  const auto a = is_minimum_and_characterized(build_f1(4, 3, 1, 1), {1, 1});
  CHECK(a.support == 36);
  CHECK(a.verdict == Verdict::MinimumCharacterized);
  const auto v = is_minimum_and_characterized(counterexample_v(), {2, 2});
  CHECK(v.verdict == Verdict::BelowBoundOpenRegime);
  const auto h = is_minimum_and_characterized(counterexample_h(), {2, 2});
  CHECK(h.verdict == Verdict::MinimumNotInFamily);
  const auto g = is_minimum_and_characterized(counterexample_g(5), {1, 2});
  CHECK(g.verdict == Verdict::MinimumUncharacterized);
  const auto above = is_minimum_and_characterized(GridFunction::constant({2, 3}, 1), {0, 1});
  CHECK(above.verdict == Verdict::AboveMinimum);
}
