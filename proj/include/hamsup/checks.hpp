#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hamsup/constructions.hpp"
#include "hamsup/grid_function.hpp"
#include "hamsup/spectra.hpp"

namespace hamsup {

// Reproduction checks for the published claims, one row per claim.
enum class Scale { Quick, Full };

struct CheckRow {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// The fixed example functions, swappable so a tampered fixture can be shown
// to fail its row.
struct Fixtures {
  std::function<GridFunction(int)> g = counterexample_g;
  std::function<GridFunction()> h = counterexample_h;
  std::function<GridFunction()> v = counterexample_v;
};

inline constexpr int kCriteria = 11;
inline constexpr std::uint64_t kDefaultSeed = 20240607;

// Runs one criterion (1..kCriteria). Full scale adds the (2,5,[1,1])
// exhaustion and the desk-scale completeness sweep to criterion 5.
CheckRow run_check(int criterion, Scale scale, const Fixtures& fixtures = {},
                   std::uint64_t seed = kDefaultSeed);

std::vector<CheckRow> run_checks(Scale scale, const Fixtures& fixtures = {},
                                 std::uint64_t seed = kDefaultSeed);

// Generators shared with the property tests.
using Rng = std::mt19937_64;

// Values drawn uniformly from [-bound, bound].
GridFunction random_integer_function(HammingShape shape, Rng& rng, int bound = 3);
Permutation random_permutation(int n, Rng& rng);
// Nonzero a/b with |a| <= 9, 1 <= b <= 9.
Rational random_nonzero_rational(Rng& rng);
FactorParams random_f1_params(int n, int q, int i, int j, Rng& rng);
FactorParams random_f2_params(int n, int q, int i, int j, Rng& rng);

}  // namespace hamsup
