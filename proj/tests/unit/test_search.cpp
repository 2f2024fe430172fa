#include <map>
#include <tuple>

#include "doctest.h"
#include "hamsup/constructions.hpp"
#include "hamsup/echelon.hpp"
#include "hamsup/orbits.hpp"
#include "hamsup/search.hpp"

using namespace hamsup;

TEST_CASE("incremental echelon") {
  IncrementalEchelon<std::int64_t> e(3);
  CHECK(e.insert({1, 2, 3}));
  CHECK(e.insert({0, 1, 1}));
  CHECK_FALSE(e.insert({2, 5, 7}));
  CHECK(e.rank() == 2);
  e.pop();
  CHECK(e.insert({2, 5, 7}));
  CHECK(e.insert({0, 0, 1}));
  CHECK_FALSE(e.insert({9, -4, 11}));
}

TEST_CASE("echelon overflow is detected and the exact type agrees") {
  const std::int64_t big = std::int64_t{1} << 40;
  IncrementalEchelon<std::int64_t> small(2);
  CHECK(small.insert({big, 1}));
  CHECK_THROWS_AS(small.insert({1, big}), ArithmeticOverflow);
  IncrementalEchelon<Integer> exact(2);
  CHECK(exact.insert({Integer(big), 1}));
  CHECK(exact.insert({1, Integer(big)}));
}

TEST_CASE("rational rank and kernel") {
  const std::vector<Rational> m{1, 2, 3, 2, 4, 6, 1, 0, 1};
  CHECK(rational_rank(m, 3, 3) == 2);
  const auto k = rational_kernel_vector(m, 3, 3);
  REQUIRE(k.size() == 3);
  for (int r = 0; r < 3; ++r) CHECK(m[r * 3] * k[0] + m[r * 3 + 1] * k[1] + m[r * 3 + 2] * k[2] == 0);
  CHECK(rational_kernel_vector({1, 0, 0, 1}, 2, 2).empty());
}

TEST_CASE("orbit pruner") {
  const auto p = OrbitPruner::create({2, 3});
  REQUIRE(p);
  CHECK(p->stabilizer_order() == 8);  // 2! · (2!)^2
  const std::vector<std::uint32_t> a{0, 1}, b{0, 2}, c{1, 2}, d{0, 4};
  CHECK(p->is_canonical(a));
  CHECK_FALSE(p->is_canonical(b));  // symbol swap 1<->2 maps it to {0,1}
  CHECK_FALSE(p->is_canonical(c));
  CHECK(p->is_canonical(d));
  CHECK_FALSE(OrbitPruner::create({2, 9}));
  CHECK_FALSE(OrbitPruner::create({1, 81}));
}

// Minimum supports from tests/oracles/min_support_oracle.py (eigenbasis of
// the complement via sympy, mod-p DFS with exact recheck), and the first
// support it met in lexicographic order with vertex 0 pinned.
struct OracleRow {
  int n, q, lo, hi, minimum;
  std::vector<std::size_t> first;
};

const std::vector<OracleRow> kOracle{
    {2, 3, 1, 1, 4, {0, 1, 5, 8}},
    {2, 3, 0, 1, 3, {0, 1, 2}},
    {2, 3, 0, 2, 1, {0}},
    {2, 3, 1, 2, 2, {0, 1}},
    {2, 3, 2, 2, 4, {0, 1, 3, 4}},
    {2, 4, 1, 1, 6, {0, 1, 2, 7, 11, 15}},
    {2, 4, 0, 1, 4, {0, 1, 2, 3}},
    {2, 4, 0, 2, 1, {0}},
    {2, 4, 1, 2, 2, {0, 1}},
    {2, 4, 2, 2, 4, {0, 1, 4, 5}},
    {3, 3, 0, 1, 9, {0, 1, 2, 3, 4, 5, 6, 7, 8}},
    {3, 3, 0, 2, 3, {0, 1, 2}},
    {3, 3, 0, 3, 1, {0}},
    {3, 3, 1, 2, 4, {0, 1, 5, 8}},
    {3, 3, 1, 3, 2, {0, 1}},
    {3, 3, 2, 2, 6, {0, 4, 11, 16, 23, 24}},
    {3, 3, 2, 3, 4, {0, 1, 3, 4}},
    {3, 3, 3, 3, 8, {0, 1, 3, 4, 9, 10, 12, 13}},
    {2, 5, 1, 1, 8, {0, 1, 2, 3, 9, 14, 19, 24}},
};

TEST_CASE("minimum supports agree with the oracle") {
  for (const auto& row : kOracle) {
    CAPTURE(row.n);
    CAPTURE(row.q);
    CAPTURE(row.lo);
    CAPTURE(row.hi);
    SearchBudget budget;
    budget.max_support = 9;
    const MinimumResult m = find_minimum(row.n, row.q, {row.lo, row.hi}, budget);
    REQUIRE(m.status == SearchStatus::Found);
    CHECK(*m.minimum == row.minimum);
    REQUIRE(m.witness);
    CHECK(support(*m.witness) == row.first);
    CHECK(in_direct_sum(*m.witness, {row.lo, row.hi}));
  }
  for (int q : {3, 5, 7}) {
    CHECK(*find_minimum(1, q, {1, 1}).minimum == 2);
  }
  CHECK(*find_minimum(1, 3, {0, 1}).minimum == 1);
}

TEST_CASE("search examples") {
  CHECK(exists_with_support_at_most(2, 3, {1, 1}, 3).status == SearchStatus::Exhausted);
  const SearchOutcome found = exists_with_support_at_most(2, 3, {1, 1}, 4);
  CHECK(found.status == SearchStatus::Found);
  CHECK(*found.min_found == 4);
  const SearchOutcome v = exists_with_support_at_most(3, 3, {2, 2}, 6);
  CHECK(v.status == SearchStatus::Found);
  CHECK(is_eigenfunction(*v.witness, 2));
}

TEST_CASE("witnesses are normalized") {
  const SearchOutcome r = exists_with_support_at_most(2, 4, {1, 1}, 6);
  REQUIRE(r.witness);
  Integer g = 0;
  bool first = true;
  for (const auto& x : r.witness->values()) {
    if (sgn(x) == 0) continue;
    CHECK(x.get_den() == 1);
    if (first) CHECK(sgn(x) > 0);
    first = false;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  CHECK(g == 1);
}

TEST_CASE("lower bounds") {
  for (auto [n, q, lo, hi] : {std::tuple{2, 3, 1, 1}, std::tuple{2, 4, 1, 1}, std::tuple{1, 5, 1, 1},
                              std::tuple{2, 3, 0, 1}, std::tuple{3, 3, 1, 2}}) {
    const LowerBoundReport rep = verify_lower_bound(n, q, {lo, hi});
    CHECK(rep.conclusive);
    CHECK(rep.holds);
  }
  // Outside the proven range the formula fails: 8 is not the minimum.
  const LowerBoundReport open = verify_lower_bound(3, 3, {2, 2});
  CHECK(open.conclusive);
  CHECK_FALSE(open.holds);
  CHECK(open.below_status == SearchStatus::Found);
}

TEST_CASE("budget") {
  SearchBudget tight;
  tight.max_subsets = 5;
  const SearchOutcome r = exists_with_support_at_most(2, 4, {1, 1}, 5, tight);
  CHECK(r.status == SearchStatus::BudgetExceeded);
  CHECK(r.subsets_examined == 6);
  const LowerBoundReport rep = verify_lower_bound(2, 4, {1, 1}, tight);
  CHECK_FALSE(rep.conclusive);
  CHECK_FALSE(rep.holds);
  const MinimumResult m = find_minimum(2, 4, {1, 1}, tight);
  CHECK(m.status == SearchStatus::BudgetExceeded);
  CHECK(m.subsets_examined <= 5);
  CHECK(m.upper);
  CHECK(*m.upper == 6);
  SearchBudget bad;
  bad.max_support = 0;
  CHECK_THROWS(find_minimum(2, 3, {1, 1}, bad));
  CHECK_THROWS(exists_with_support_at_most(2, 3, {1, 1}, 0));
  CHECK_THROWS(exists_with_support_at_most(5, 6, {1, 1}, 3));
}

TEST_CASE("parallel and serial walks return identical outcomes") {
  for (const auto& row : kOracle) {
    for (bool prune : {true, false}) {
      if (!prune && row.n == 3 && row.minimum > 6) continue;
      SearchBudget budget;
      budget.symmetry_pruning = prune;
      const int s = row.minimum;
      for (int t : {s - 1, s}) {
        if (t < 1) continue;
        const SearchOutcome a = exists_with_support_at_most(row.n, row.q, {row.lo, row.hi}, t, budget,
                                                            Execution::Parallel);
        const SearchOutcome b = exists_with_support_at_most(row.n, row.q, {row.lo, row.hi}, t, budget,
                                                            Execution::Serial);
        CHECK(a.status == b.status);
        CHECK(a.subsets_examined == b.subsets_examined);
        CHECK(a.support_set == b.support_set);
        CHECK(a.witness == b.witness);
      }
    }
  }
  SearchBudget capped;
  capped.max_subsets = 100;
  const auto a = exists_with_support_at_most(2, 5, {1, 1}, 7, capped, Execution::Parallel);
  const auto b = exists_with_support_at_most(2, 5, {1, 1}, 7, capped, Execution::Serial);
  CHECK(a.status == SearchStatus::BudgetExceeded);
  CHECK(a.status == b.status);
  CHECK(a.subsets_examined == b.subsets_examined);
}

TEST_CASE("pruning never changes the decision") {
  for (const auto& row : kOracle) {
    if (row.n == 3 && row.minimum > 6) continue;
    if (row.q == 5) continue;
    SearchBudget off;
    off.symmetry_pruning = false;
    for (int t : {row.minimum - 1, row.minimum}) {
      if (t < 1) continue;
      const auto on = exists_with_support_at_most(row.n, row.q, {row.lo, row.hi}, t);
      const auto plain = exists_with_support_at_most(row.n, row.q, {row.lo, row.hi}, t, off);
      CHECK(on.status == plain.status);
      CHECK(on.pruning_applied);
      CHECK_FALSE(plain.pruning_applied);
      CHECK(on.support_set == plain.support_set);
      CHECK(on.subsets_examined <= plain.subsets_examined);
    }
  }
}
