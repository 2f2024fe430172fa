#pragma once

#include <vector>

#include "hamsup/grid_function.hpp"

namespace hamsup {

// The index interval [lo, hi] selecting U_[lo,hi](n,q) = U_lo ⊕ ... ⊕ U_hi.
struct EigenRange {
  int lo = 0;
  int hi = 0;

  bool contains(int t) const { return lo <= t && t <= hi; }
  // Throws std::out_of_range unless 0 <= lo <= hi <= n.
  void validate(int n) const;

  friend bool operator==(const EigenRange&, const EigenRange&) = default;
};

// λ_i(n,q) = n(q-1) - q·i.
long eigenvalue(int n, int q, int i);

// K_i(d) = Σ_j (-1)^j (q-1)^(i-j) C(d,j) C(n-d,i-j).
Integer krawtchouk(int n, int q, int i, int d);

// table[i][d] = K_i(d) for 0 <= i, d <= n.
std::vector<std::vector<Integer>> krawtchouk_table(int n, int q);

GridFunction apply_adjacency(const GridFunction& f);

// Exact test A f = λ_i f. The zero function passes for every i.
bool is_eigenfunction(const GridFunction& f, int i);

// (E_i f)(x) = q^-n Σ_y K_i(d(x,y)) f(y).
GridFunction project_eigenspace(const GridFunction& f, int i);

// All n+1 components E_0 f, ..., E_n f, sharing one pass over f.
std::vector<GridFunction> eigen_components(const GridFunction& f);

// profile[t] is true iff E_t f is nonzero.
std::vector<bool> projection_profile(const GridFunction& f);

// Σ_{t ∈ range} E_t f.
GridFunction project_range(const GridFunction& f, EigenRange range);

// True iff E_t f = 0 for every t outside the range. An empty range
// (lo > hi, produced by clamping) accepts only the zero function.
bool in_direct_sum(const GridFunction& f, EigenRange range);

// Same, with an unvalidated range clamped to [0, n]; lo > hi after clamping
// means the empty range.
bool in_clamped_direct_sum(const GridFunction& f, int lo, int hi);

// C(n,i)(q-1)^i, checked against the trace of the computed projector.
Integer eigenspace_dimension(int n, int q, int i);

// Trace of E_i computed from projector columns.
Rational projector_trace(int n, int q, int i);

Integer binomial(int n, int k);

}  // namespace hamsup
