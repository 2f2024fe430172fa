#pragma once

#include <span>
#include <vector>

#include "hamsup/grid_function.hpp"

// Data-parallel inner loops shared by spectra and search. Each kernel has an
// OpenMP version and a serial reference in kernels::serial; both operate on
// exact integers, so their outputs are identical for every schedule.
namespace hamsup::kernels {

// f = num / den with integer numerators and a common positive denominator.
struct IntegerForm {
  std::vector<Integer> num;
  Integer den;
};

IntegerForm to_integer_form(const GridFunction& f);

// sums[x * (n+1) + d] = Σ_{y : d(x,y) = d} values[y]. O(q^n · |supp|).
std::vector<Integer> distance_class_sums(HammingShape shape, std::span<const Integer> values);

// out[x] = Σ_{y ∈ N(x)} values[y].
std::vector<Integer> adjacency_sums(HammingShape shape, std::span<const Integer> values);

namespace serial {

std::vector<Integer> distance_class_sums(HammingShape shape, std::span<const Integer> values);
std::vector<Integer> adjacency_sums(HammingShape shape, std::span<const Integer> values);

}  // namespace serial

// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace hamsup::kernels
