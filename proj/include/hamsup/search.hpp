#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamsup/grid_function.hpp"
#include "hamsup/spectra.hpp"

namespace hamsup {

// Limits for the exact sparsest-vector search. Budget accounting counts rank
// tests (one per candidate support examined), never wall time.
struct SearchBudget {
  int max_support = 8;
  std::optional<std::uint64_t> max_subsets;
  bool symmetry_pruning = true;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };
const char* to_string(SearchStatus status);

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  // Nonzero, in the requested direct sum, integer-valued with gcd 1 and
  // first nonzero value positive.
  std::optional<GridFunction> witness;
  std::optional<std::size_t> min_found;
  std::uint64_t subsets_examined = 0;
  // Candidate support that produced the witness (sorted vertex indices).
  std::vector<std::size_t> support_set;
  // False when the automorphism table was too large and pruning was skipped.
  bool pruning_applied = false;
};

// Serial runs the plain depth-first reference; Parallel splits the search
// tree into prefix tasks run under OpenMP and merges them in tree order, so
// both return identical outcomes.
enum class Execution { Parallel, Serial };

// Decides whether some nonzero f ∈ U_[lo,hi](n,q) has |supp f| <= s.
//
// With P = Σ_{t ∉ [lo,hi]} E_t, such an f supported inside S exists iff the
// columns of P indexed by S are linearly dependent. Supports are enumerated
// in lexicographic order with vertex 0 pinned in S; with symmetry pruning,
// prefixes that are not lexicographically minimal in their orbit under the
// automorphism group of H(n,q) are skipped.
SearchOutcome exists_with_support_at_most(int n, int q, EigenRange range, int s,
                                          const SearchBudget& budget = {},
                                          Execution execution = Execution::Parallel);

struct MinimumResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<int> minimum;
  std::optional<GridFunction> witness;
  // Best known interval for the minimum; upper is the support of the
  // F1/F2 construction when the search did not finish.
  int lower = 1;
  std::optional<Integer> upper;
  std::uint64_t subsets_examined = 0;
};

// Linear search s = 1, 2, ..., budget.max_support. The max_subsets cap is
// shared by all rounds.
MinimumResult find_minimum(int n, int q, EigenRange range, const SearchBudget& budget = {},
                           Execution execution = Execution::Parallel);

struct LowerBoundReport {
  bool conclusive = false;
  bool holds = false;
  Integer bound;
  SearchStatus below_status = SearchStatus::Exhausted;
  std::size_t construction_support = 0;
  bool construction_in_range = false;
  std::uint64_t subsets_examined = 0;
};

// True iff nothing nonzero in U_[lo,hi] has support below the bound B from
// min_support_bound AND the F1/F2 construction has support exactly B.
// A budget overrun gives conclusive = false, never a false positive.
LowerBoundReport verify_lower_bound(int n, int q, EigenRange range,
                                    const SearchBudget& budget = {},
                                    Execution execution = Execution::Parallel);

// Largest q^n the search accepts.
inline constexpr std::size_t kMaxSearchVertices = 4096;

}  // namespace hamsup
