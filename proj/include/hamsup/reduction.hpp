#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hamsup/grid_function.hpp"
#include "hamsup/spectra.hpp"

namespace hamsup {

// f_k^r: fix coordinate r (0-based) to symbol k, leaving n-1 coordinates.
GridFunction restrict(const GridFunction& f, int r, int k);

// All q slices f_0^r, ..., f_{q-1}^r.
std::vector<GridFunction> slices(const GridFunction& f, int r);

struct Uniformity {
  bool uniform = false;
  // witness[r] = l(r), the smallest symbol whose removal leaves equal slices.
  std::vector<int> witness;
  // First coordinate with no valid l(r), or -1.
  int failing_coordinate = -1;
};

// f is uniform if for every r there is l(r) with f_k^r = f_m^r for all
// k, m ≠ l(r). Requires n >= 1.
Uniformity is_uniform(const GridFunction& f);

struct CaseCheck {
  bool passed = true;
  // Human-readable description of the first failing slice, if any.
  std::string counterexample;
};

// Membership checks on the slices of f ∈ U_[i,j](n,q) at coordinate r:
//   differences: f_k - f_m ∈ U_[i-1,j-1](n-1,q) for all k, m
//   slice_sum:   Σ_k f_k ∈ U_[i,j](n-1,q)
//   slices:      f_k ∈ U_[i-1,j](n-1,q) for all k
// Ranges are clamped to [0, n-1]; a range that clamps empty demands zero.
struct ReductionReport {
  bool precondition_met = false;
  std::string precondition_message;
  CaseCheck differences;
  CaseCheck slice_sum;
  CaseCheck slices;

  bool all_passed() const {
    return precondition_met && differences.passed && slice_sum.passed && slices.passed;
  }
};

ReductionReport check_lemma_reduction(const GridFunction& f, EigenRange range, int r);

// If f ∈ U_[i,j](n,q) and every slice at r except m vanishes, then
// f_m^r ∈ U_[i,j-1](n-1,q).
struct VanishingSlicesReport {
  bool precondition_met = false;
  std::string precondition_message;
  CaseCheck conclusion;

  bool passed() const { return precondition_met && conclusion.passed; }
};

VanishingSlicesReport check_lemma_vanishing_slices(const GridFunction& f, EigenRange range, int r,
                                                   int m);

struct SupportInequality {
  std::size_t lhs = 0;  // |f|
  std::size_t rhs = 0;  // (q-2)|f_0^r| + |f_{q-2}^r - f_{q-1}^r|
  bool holds() const { return lhs >= rhs; }
};

// Requires f_0^r = f_1^r = ... = f_{q-2}^r; throws std::invalid_argument otherwise.
SupportInequality support_lower_bound_inequality(const GridFunction& f, int r);

}  // namespace hamsup
